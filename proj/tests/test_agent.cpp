#include "discg/agent.hpp"
#include "discg/errors.hpp"
#include "discg/instances.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <sstream>

using namespace discg;
using fixtures::q;
using fixtures::qv;

TEST_CASE("initial agent state") {
    const auto s = init_agent(1, LocalOracle(1, fixtures::two_element()));
    CHECK(s.id == 1);
    CHECK(s.round == 0);
    CHECK(s.basis.vertex_count() == 0);
    CHECK(s.basis.contains(Column::artificial(2, 3)));
    CHECK(s.duals.u == qv({"0", "0"}));
    CHECK(s.duals.v == BigM::big());
    CHECK(s.objective == BigM::big());
    CHECK(outgoing(s).columns.empty());
    CHECK(outgoing(s).sender == 1);
}

TEST_CASE("merge_columns") {
    auto s = init_agent(1, LocalOracle(1, fixtures::two_element()));
    merge_columns(s, {});
    CHECK(s.pool.empty());

    const auto c1 = Column::vertex(qv({"1", "3/2"}));
    const auto c2 = Column::vertex(qv({"1/2", "2"}));
    merge_columns(s, {{2, {c1, c2}}, {3, {c2}}});
    CHECK(s.pool.size() == 2);
    const auto first = s.pool;
    merge_columns(s, {{3, {c2}}, {2, {c2, c1}}});
    CHECK(s.pool == first);

    CHECK_THROWS_AS(merge_columns(s, {{2, {Column::alpha(2, 1)}}}), DimensionMismatch);
    CHECK_THROWS_AS(merge_columns(s, {{2, {Column::vertex(qv({"1", "2", "3"}))}}}), DimensionMismatch);
}

TEST_CASE("merge keeps own basis columns") {
    auto s = init_agent(2, LocalOracle(2, fixtures::two_element()));
    merge_columns(s, {});
    local_step(s);
    REQUIRE(s.basis.vertex_count() == 1);
    merge_columns(s, {});
    CHECK(s.pool == s.basis.vertex_members());
    CHECK(outgoing(s).columns == s.basis.vertex_members());
}

TEST_CASE("refusal leaves the basis unchanged") {
    // After one step agent 1 of the min-cut example holds u = (1, 0), so agent
    // 2 is not maximal once it receives the same column.
    const auto f = min_cut_function(fixtures::four_node_graph());
    auto a = init_agent(1, LocalOracle(1, f));
    merge_columns(a, {});
    local_step(a);
    auto b = init_agent(2, LocalOracle(2, f));
    merge_columns(b, {outgoing(a)});
    const auto lp = StandardLP(2, b.pool);
    const auto solved = solve_lex(lp, b.basis);
    REQUIRE(solved.duals.u == qv({"1", "0"}));
    local_step(b);
    CHECK_FALSE(b.generated);
    CHECK_FALSE(b.admitted);
    CHECK(b.basis.same_members(solved.basis));
    CHECK(b.duals.u == qv({"1", "0"}));
}

TEST_CASE("single agent on a singleton ground set") {
    for (const char* value : {"-2", "0", "3/4"}) {
        const auto f = std::make_shared<TableFunction>(1, qv({"0", value}));
        auto s = init_agent(1, LocalOracle(1, f));
        merge_columns(s, {});
        local_step(s);
        merge_columns(s, {});
        local_step(s);
        CHECK(s.duals.u == RationalVector{q(value) < 0 ? Rational(1) : Rational(0)});
    }
}

TEST_CASE("two agents on a complete graph reach the min-cut indicator") {
    const auto f = min_cut_function(fixtures::four_node_graph());
    std::vector<AgentState> agents{init_agent(1, LocalOracle(1, f)), init_agent(2, LocalOracle(2, f))};
    for (int round = 1; round <= 3; ++round) {
        std::vector<ColumnMessage> out{outgoing(agents[0]), outgoing(agents[1])};
        merge_columns(agents[0], {out[1]});
        merge_columns(agents[1], {out[0]});
        for (auto& s : agents) local_step(s);
        if (round == 1) {
            CHECK(agents[0].basis.vertex_members() == std::vector<Column>{Column::vertex(qv({"-1", "1"}))});
            CHECK(agents[1].basis.vertex_members() == std::vector<Column>{Column::vertex(qv({"-2", "2"}))});
        }
    }
    for (const auto& s : agents) {
        CHECK(s.duals.u == qv({"1", "0"}));
        CHECK(s.objective == BigM(1));
        CHECK(s.basis.same_members(agents[0].basis));
    }
}

TEST_CASE("message text round trip") {
    const ColumnMessage msg{4, {Column::vertex(qv({"1", "-3/2", "7"})), Column::vertex(qv({"0", "0", "-1/3"}))}};
    std::stringstream text;
    write_message(text, msg);
    CHECK(text.str().rfind("msg 4 2 3\n", 0) == 0);
    CHECK(read_message(text) == msg);

    std::stringstream empty;
    write_message(empty, ColumnMessage{1, {}});
    CHECK(read_message(empty).columns.empty());

    std::istringstream bad("msg 1 1 2\n1/2\n");
    CHECK_THROWS_AS(read_message(bad), ParseError);
}
