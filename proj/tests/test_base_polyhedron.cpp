#include "discg/base_polyhedron.hpp"
#include "discg/errors.hpp"
#include "discg/instances.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace discg;
using fixtures::q;
using fixtures::qv;

namespace {

SetFunctionPtr random_function(int n, std::uint64_t seed) {
    switch (seed % 3) {
        case 0: return min_cut_function(random_min_cut(std::max(n, 2), seed));
        case 1: return selection_function(random_selection(n, seed));
        default: return random_concave_cut(n, seed);
    }
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    return Permutation(order);
}

RationalVector random_duals(int n, std::mt19937_64& rng) {
    RationalVector u;
    // Few distinct values so ties are common.
    for (int k = 0; k < n; ++k) u.emplace_back(static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 2));
    return u;
}

}  // namespace

TEST_CASE("permutation validation") {
    CHECK(Permutation::identity(3).order() == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(Permutation({1, 1}), DimensionMismatch);
    CHECK_THROWS_AS(Permutation({0, 1}), DimensionMismatch);
}

TEST_CASE("full_sort") {
    CHECK(full_sort(qv({"0", "1"})).order() == std::vector<int>{2, 1});
    CHECK(full_sort(qv({"1", "1"})).order() == std::vector<int>{1, 2});
    CHECK(full_sort(qv({"1/2", "1/2", "1"})).order() == std::vector<int>{3, 1, 2});
}

TEST_CASE("local_sort") {
    CHECK(local_sort(qv({"1", "1"}), 1)->order() == std::vector<int>{1, 2});
    CHECK_FALSE(local_sort(qv({"0", "1"}), 1).has_value());
    CHECK(local_sort(qv({"2", "2", "0"}), 2)->order() == std::vector<int>{2, 1, 3});
    CHECK(local_sort(qv({"1", "0", "1", "1"}), 3)->order() == std::vector<int>{3, 1, 4, 2});
}

TEST_CASE("greedy_vertex on the two-element function") {
    const auto f = fixtures::two_element();
    CHECK(greedy_vertex(*f, Permutation({1, 2})) == qv({"1", "3/2"}));
    CHECK(greedy_vertex(*f, Permutation({2, 1})) == qv({"1/2", "2"}));
    const ModularFunction modular(qv({"4", "-1", "5/3"}));
    CHECK(greedy_vertex(modular, Permutation({3, 1, 2})) == modular.weights());
    CHECK_THROWS_AS(greedy_vertex(*f, Permutation::identity(3)), DimensionMismatch);
}

TEST_CASE("local_greedy") {
    const auto f = fixtures::two_element();
    CHECK_FALSE(local_greedy(LocalOracle(1, f), qv({"0", "1"}), 1).has_value());

    const auto col = local_greedy(LocalOracle(2, f), qv({"0", "1"}), 2);
    REQUIRE(col.has_value());
    CHECK(col->kind() == ColumnKind::Vertex);
    CHECK(col->cost() == BigM(0));
    CHECK(col->entries() == qv({"1/2", "2", "1"}));

    const auto tied = local_greedy(LocalOracle(1, f), qv({"1", "1"}), 1);
    REQUIRE(tied.has_value());
    CHECK(tied->entries() == qv({"1", "3/2", "1"}));
}

TEST_CASE("membership_check") {
    const auto f = fixtures::two_element();
    CHECK(membership_check(*f, qv({"1", "3/2"})));
    CHECK(membership_check(*f, qv({"1/2", "2"})));
    // x(V) = F(V) but x({1}) > F({1}).
    CHECK_FALSE(membership_check(*f, qv({"2", "1/2"})));
    const ModularFunction modular(qv({"1", "2", "3"}));
    CHECK(membership_check(modular, qv({"1", "2", "3"})));
    CHECK_FALSE(membership_check(modular, qv({"2", "2", "3"})));
}

TEST_CASE("every greedy vertex lies in the base polyhedron") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const auto f = random_function(n, rng());
        const auto p = random_permutation(n, rng);
        CHECK(membership_check(*f, greedy_vertex(*f, p)));
    }
}

TEST_CASE("sorted order solves the pricing problem") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const auto f = random_function(n, rng());
        const auto u = random_duals(n, rng);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 1);
        Rational best = dot(u, greedy_vertex(*f, Permutation(order)));
        while (std::next_permutation(order.begin(), order.end()))
            best = std::max(best, dot(u, greedy_vertex(*f, Permutation(order))));
        CHECK(dot(u, greedy_vertex(*f, full_sort(u))) == best);
    }
}

TEST_CASE("local greedy reaches the centralized pricing value") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const auto f = random_function(n, rng());
        const auto u = random_duals(n, rng);
        const Rational central = dot(u, greedy_vertex(*f, full_sort(u)));
        for (int i = 1; i <= n; ++i) {
            const auto col = local_greedy(LocalOracle(i, f), u, i);
            if (col) CHECK(dot(u, col->coordinates()) == central);
        }
    }
}

TEST_CASE("greedy commutes with relabelling") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const auto f = random_function(n, rng());
        const auto sigma = random_permutation(n, rng);  // element k is renamed sigma[k-1]
        const LambdaFunction g(n, [&](const Subset& y) {
            Subset x = Subset::empty(n);
            for (int k = 1; k <= n; ++k)
                if (y.contains(sigma[k - 1])) x = x.with(k);
            return f->value(x);
        });
        const auto p = random_permutation(n, rng);
        std::vector<int> renamed(n);
        for (int l = 0; l < n; ++l) renamed[l] = sigma[p[l] - 1];
        const auto x = greedy_vertex(*f, p);
        const auto y = greedy_vertex(g, Permutation(renamed));
        for (int k = 1; k <= n; ++k) CHECK(y[sigma[k - 1] - 1] == x[k - 1]);
    }
}
