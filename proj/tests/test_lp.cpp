#include "discg/base_polyhedron.hpp"
#include "discg/errors.hpp"
#include "discg/instances.hpp"
#include "discg/lp.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

using namespace discg;
using fixtures::q;
using fixtures::qv;

namespace {

SolveResult solve_columns(int n, std::vector<Column> cols) {
    return solve_lex(StandardLP(n, std::move(cols)), big_m_init(n).basis);
}

std::vector<Column> random_vertices(const SetFunction& f, int count, std::mt19937_64& rng) {
    const int n = f.size();
    std::vector<Column> cols;
    for (int c = 0; c < count; ++c) {
        std::vector<int> order(n);
        for (int k = 0; k < n; ++k) order[k] = k + 1;
        std::shuffle(order.begin(), order.end(), rng);
        cols.push_back(Column::vertex(greedy_vertex(f, Permutation(order))));
    }
    return cols;
}

}  // namespace

TEST_CASE("column layout") {
    const auto a = Column::alpha(3, 2);
    CHECK(a.entries() == qv({"0", "-1", "0", "0"}));
    CHECK(a.cost() == BigM(0));
    const auto b = Column::beta(3, 1);
    CHECK(b.entries() == qv({"1", "0", "0", "0"}));
    CHECK(b.cost() == BigM(1));
    const auto v = Column::vertex(qv({"1", "-3/2"}));
    CHECK(v.entries() == qv({"1", "-3/2", "1"}));
    CHECK(v.dimension() == 2);
    CHECK(Column::artificial(2, 3).cost() == BigM::big());
    CHECK(Column::artificial(2, 3).entries() == qv({"0", "0", "1"}));
    CHECK(Column::artificial(2, 1).entries() == qv({"-1", "0", "0"}));
    CHECK(a.label() == "a2");
    CHECK(b.label() == "b1");
    CHECK(Column::artificial(2, 3).label() == "art3");
    CHECK(Column::vertex(qv({"1", "2"})).id() == Column::vertex(qv({"1", "2"})).id());
    CHECK(Column::vertex(qv({"1", "2"})).id() != Column::vertex(qv({"2", "1"})).id());
    CHECK(Column::vertex(qv({"1", "2"})) < Column::alpha(2, 1));
    CHECK(Column::alpha(2, 2) < Column::beta(2, 1));
    CHECK_THROWS_AS(Column::alpha(2, 3), DimensionMismatch);
}

TEST_CASE("lexsort is insertion-order free") {
    std::vector<Column> cols{Column::vertex(qv({"1", "2"})), Column::vertex(qv({"0", "5"})),
                             Column::vertex(qv({"1", "2"})), Column::vertex(qv({"-1", "9"}))};
    auto a = cols;
    std::reverse(cols.begin(), cols.end());
    auto b = cols;
    lexsort_unique(a);
    lexsort_unique(b);
    CHECK(a.size() == 3);
    CHECK(a == b);
}

TEST_CASE("big-M start") {
    const auto start = big_m_init(2);
    CHECK(start.artificials.size() == 3);
    CHECK(start.basis.members() == start.artificials);
    CHECK(start.basis.lex_feasible());
    CHECK(start.basis.objective() == BigM::big());

    const auto r = solve_columns(2, {});
    CHECK(r.objective == BigM::big());
    CHECK(r.basis.contains(Column::artificial(2, 3)));
    CHECK(r.basis.contains(Column::alpha(2, 1)));
    CHECK(r.basis.contains(Column::alpha(2, 2)));
    CHECK(r.value_of(Column::artificial(2, 3)) == 1);
    CHECK(r.duals.u == qv({"0", "0"}));
    CHECK(r.duals.v == BigM::big());

    const auto with_vertex = solve_columns(2, {Column::vertex(qv({"1", "3/2"}))});
    CHECK_FALSE(with_vertex.basis.has_artificial());
}

TEST_CASE("single vertex LPs") {
    const auto g = Column::vertex(qv({"1", "-3/2"}));
    const auto r = solve_columns(2, {g});
    CHECK(r.objective == BigM(q("3/2")));
    CHECK(r.value_of(g) == 1);
    CHECK(r.value_of(Column::alpha(2, 1)) == 1);
    CHECK(r.value_of(Column::alpha(2, 2)) == 0);
    CHECK(r.value_of(Column::beta(2, 1)) == 0);
    CHECK(r.value_of(Column::beta(2, 2)) == q("3/2"));
    CHECK(r.duals.u == qv({"0", "1"}));

    const auto zero = solve_columns(2, {Column::vertex(qv({"0", "0"}))});
    CHECK(zero.objective == BigM(0));
    CHECK(zero.duals.u == qv({"0", "0"}));

    const ModularFunction positive(qv({"2", "1/3", "5"}));
    const auto mod = solve_columns(3, {Column::vertex(greedy_vertex(positive, Permutation::identity(3)))});
    CHECK(mod.objective == BigM(0));
    CHECK(mod.duals.u == qv({"0", "0", "0"}));
}

TEST_CASE("reduced costs") {
    const auto r = solve_columns(2, {Column::vertex(qv({"1", "-3/2"}))});
    for (const auto& c : r.basis.members()) CHECK(reduced_cost(c, r.duals) == BigM(0));
    CHECK(reduced_cost(Column::beta(2, 2), r.duals) == BigM(0));
    CHECK(reduced_cost(Column::beta(2, 1), r.duals) == BigM(1));
    CHECK_THROWS_AS(reduced_cost(Column::beta(3, 1), r.duals), DimensionMismatch);
}

TEST_CASE("pivot_in") {
    const auto f = fixtures::two_element();
    const auto first = solve_columns(2, {});
    const auto unchanged = pivot_in(first.basis, std::nullopt);
    CHECK_FALSE(unchanged.admitted);
    CHECK(unchanged.basis.members() == first.basis.members());

    const auto col = Column::vertex(greedy_vertex(*f, full_sort(first.duals.u)));
    CHECK(col.entries() == qv({"1", "3/2", "1"}));
    CHECK(reduced_cost(col, first.duals) < BigM(0));
    const auto entered = pivot_in(first.basis, col);
    CHECK(entered.admitted);
    CHECK(entered.basis.contains(col));
    CHECK(entered.basis.lex_feasible());

    const auto opt = solve_columns(2, {col});
    CHECK(reduced_cost(col, opt.duals) >= BigM(0));
    const auto again = pivot_in(opt.basis, col);
    CHECK_FALSE(again.admitted);
    CHECK(again.basis.members() == opt.basis.members());
}

TEST_CASE("singular basis is rejected") {
    CHECK_THROWS_AS(Basis(2, {Column::alpha(2, 1), Column::beta(2, 1), Column::artificial(2, 3)}), LpError);
    CHECK_THROWS_AS(Basis(2, {Column::alpha(2, 1)}), DimensionMismatch);
}

TEST_CASE("pivot trace") {
    std::ostringstream trace;
    SolveOptions opts;
    opts.pivot_trace = &trace;
    const auto r = solve_lex(StandardLP(2, {Column::vertex(qv({"1", "-3/2"}))}), big_m_init(2).basis, opts);
    std::istringstream lines(trace.str());
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) ++count;
    CHECK(count == r.pivots);
    CHECK(count > 0);
}

TEST_CASE("solver properties on random column sets") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const auto f = random_concave_cut(n, rng());
        auto cols = random_vertices(*f, 1 + static_cast<int>(rng() % 6), rng);
        const auto r = solve_columns(n, cols);
        CAPTURE(trial);

        // Strong duality: rhs'y = v.
        CHECK(r.objective == r.duals.v);
        CHECK(r.duals.v.is_real());
        CHECK_FALSE(r.basis.has_artificial());

        // Complementary pattern of the alpha/beta duals.
        for (int k = 1; k <= n; ++k) {
            if (r.value_of(Column::alpha(n, k)) > 0) CHECK(r.duals.u[k - 1] == 0);
            if (r.value_of(Column::beta(n, k)) > 0) CHECK(r.duals.u[k - 1] == 1);
        }

        // Objective equals -sum of negative parts of the combined point.
        RationalVector point(n, 0);
        const StandardLP lp(n, cols);
        for (const auto& c : lp.vertex_columns())
            for (int k = 0; k < n; ++k) point[k] += r.value_of(c) * c.coordinates()[k];
        Rational neg = 0;
        for (const auto& p : point)
            if (p < 0) neg -= p;
        CHECK(r.objective == BigM(neg));

        // Same multiset in another order and another warm start: same answer.
        std::shuffle(cols.begin(), cols.end(), rng);
        const auto s = solve_lex(StandardLP(n, cols), r.basis);
        CHECK(s.basis.same_members(r.basis));
        CHECK(s.duals == r.duals);
        CHECK(s.objective == r.objective);
        for (const auto& c : StandardLP(n, cols).all_columns()) CHECK(s.value_of(c) == r.value_of(c));
        CHECK(s.pivots == 0);
    }
}
