#include "discg/bench.hpp"
#include "discg/errors.hpp"
#include "discg/instances.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <sstream>

using namespace discg;
using fixtures::q;
using fixtures::qv;

TEST_CASE("four-node min cut") {
    const auto g = fixtures::four_node_graph();
    const auto f = min_cut_function(g);
    CHECK(f->value(Subset::empty(2)) == 0);
    CHECK(f->value(Subset::of(2, {1})) == -1);
    CHECK(f->value(Subset::of(2, {2})) == 2);
    CHECK(f->value(Subset::of(2, {1, 2})) == 0);
    CHECK(g.cut_capacity(Subset::of(2, {1})) == 2);
    CHECK(g.source_capacity() == 3);
    CHECK(g.capacity(1, 2) == 1);
    CHECK(g.capacity(2, 1) == 0);
}

TEST_CASE("a single source edge leaves only the sink terms and the constant") {
    // F(V) = sum_i k_it - k_{s,j*}
    const CapacitatedDigraph g(3, {{0, 2, q("7/2")}, {1, 2, q("1")}, {1, 4, q("2")}, {3, 4, q("1/10")}, {2, 3, q("4")}});
    const auto f = min_cut_function(g);
    CHECK(f->value(Subset::full(3)) == q("2") + q("1/10") - q("7/2"));
}

TEST_CASE("invalid graphs") {
    CHECK_THROWS_AS(CapacitatedDigraph(2, {{1, 0, q("1")}}), InvalidGraph);
    CHECK_THROWS_AS(CapacitatedDigraph(2, {{3, 1, q("1")}}), InvalidGraph);
    CHECK_THROWS_AS(CapacitatedDigraph(2, {{1, 1, q("1")}}), InvalidGraph);
    CHECK_THROWS_AS(CapacitatedDigraph(2, {{1, 2, q("1")}, {1, 2, q("2")}}), InvalidGraph);
    CHECK_THROWS_AS(CapacitatedDigraph(2, {{1, 2, q("-1")}}), InvalidGraph);
    CHECK_THROWS_AS(CapacitatedDigraph(2, {{1, 5, q("1")}}), InvalidGraph);
}

TEST_CASE("random min-cut generator") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const int n = 2 + static_cast<int>(seed % 7);
        const auto g = random_min_cut(n, seed);
        bool has_s = false;
        bool has_t = false;
        for (const auto& e : g.edges()) {
            CHECK(10 % denominator(e.capacity) == 0);
            CHECK(e.capacity >= q("1/10"));
            CHECK(e.capacity <= 10);
            has_s = has_s || e.from == g.source();
            has_t = has_t || e.to == g.sink();
        }
        CHECK(has_s);
        CHECK(has_t);
        CHECK(g == random_min_cut(n, seed));
        const auto f = min_cut_function(g);
        CHECK(f->value(Subset::empty(n)) == 0);
        CHECK(check_submodular(*f));
    }
    CHECK_THROWS_AS(random_min_cut(1, 1), DimensionMismatch);
}

TEST_CASE("min-cut formula matches edge-by-edge cut capacity") {
    for (std::uint64_t seed = 100; seed < 300; ++seed) {
        const int n = 2 + static_cast<int>(seed % 9);
        const auto g = random_min_cut(n, seed);
        const auto f = min_cut_function(g);
        const auto best = brute_force_min(*f);
        CHECK(g.cut_capacity(best.argmin) == best.value + g.source_capacity());
        for (std::uint64_t m = 0; m < (1ULL << n); m += 1 + m / 3)
            CHECK(g.cut_capacity(Subset(n, m)) == f->value(Subset(n, m)) + g.source_capacity());
    }
}

TEST_CASE("selection example") {
    SelectionInstance inst{qv({"5", "1"}), {qv({"0", "3"}), qv({"0", "0"})}};
    const auto f = selection_function(inst);
    // F = -R + R(empty) with R(empty) = -3, R({1}) = 2, R({2}) = 1, R({1,2}) = 6.
    CHECK(f->value(Subset::empty(2)) == 0);
    CHECK(f->value(Subset::of(2, {1})) == -5);
    CHECK(f->value(Subset::of(2, {2})) == -4);
    CHECK(f->value(Subset::of(2, {1, 2})) == -9);
    CHECK(brute_force_min(*f).argmin == Subset::of(2, {1, 2}));

    SelectionInstance negative{qv({"1"}), {qv({"-1"})}};
    CHECK_THROWS_AS(selection_function(negative), DimensionMismatch);
}

TEST_CASE("selection without penalties is separable") {
    SelectionInstance inst{qv({"2", "-1", "0", "3/2"}), std::vector<RationalVector>(4, RationalVector(4, 0))};
    const auto f = selection_function(inst);
    CHECK(brute_force_min(*f).argmin == Subset::of(4, {1, 4}));
}

TEST_CASE("random selection instances") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const int n = 1 + static_cast<int>(seed % 6);
        const auto inst = random_selection(n, seed);
        const auto f = selection_function(inst);
        CHECK(check_submodular(*f));
        // Minimizing F maximizes R.
        const auto best = brute_force_min(*f);
        const auto r = [&](const Subset& x) {
            Rational v = x.weight(inst.returns);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (!x.contains(j)) v -= inst.penalties[i - 1][j - 1];
            return v;
        };
        for (std::uint64_t m = 0; m < (1ULL << n); ++m) CHECK(r(Subset(n, m)) <= r(best.argmin));
    }
}

TEST_CASE("concave cut instances are submodular") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) CHECK(check_submodular(*random_concave_cut(2 + seed % 7, seed)));
}

TEST_CASE("graph and instance files round trip") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto g = random_min_cut(6, seed);
        std::stringstream text;
        write_graph(text, g);
        CHECK(read_graph(text) == g);

        std::stringstream inst;
        write_mincut_instance(inst, g);
        const auto f = read_instance(inst);
        const auto h = min_cut_function(g);
        for (std::uint64_t m = 0; m < 64; ++m) CHECK(f->value(Subset(6, m)) == h->value(Subset(6, m)));

        const auto sel = random_selection(5, seed);
        std::stringstream stext;
        write_selection(stext, sel);
        const auto fs = read_instance(stext);
        const auto hs = selection_function(sel);
        for (std::uint64_t m = 0; m < 32; ++m) CHECK(fs->value(Subset(5, m)) == hs->value(Subset(5, m)));
    }
    std::istringstream relabelled("2 10 11\n10 1 3 1\n1 2 1 1\n1 11 1 1\n2 11 2 1\n");
    CHECK(read_graph(relabelled) == fixtures::four_node_graph());
    std::istringstream bad("2 0 3\n0 1 x 1\n");
    CHECK_THROWS_AS(read_graph(bad), ParseError);
}
