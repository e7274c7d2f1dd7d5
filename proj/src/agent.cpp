#include "discg/agent.hpp"

#include "discg/errors.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace discg {

void write_message(std::ostream& out, const ColumnMessage& msg) {
    const int n = msg.columns.empty() ? 0 : msg.columns.front().dimension();
    out << "msg " << msg.sender << ' ' << msg.columns.size() << ' ' << n << '\n';
    for (const auto& c : msg.columns) {
        const auto x = c.coordinates();
        for (std::size_t k = 0; k < x.size(); ++k) {
            const auto& q = x[k];
            out << (k ? " " : "") << numerator(q).str() << '/' << denominator(q).str();
        }
        out << '\n';
    }
}

ColumnMessage read_message(std::istream& in) {
    std::string tag;
    ColumnMessage msg;
    std::size_t count = 0;
    int n = 0;
    if (!(in >> tag >> msg.sender >> count >> n) || tag != "msg") throw ParseError("bad column message header");
    if (count > 0 && n < 1) throw ParseError("column message with columns but no dimension");
    for (std::size_t c = 0; c < count; ++c) {
        RationalVector x(n);
        for (int k = 0; k < n; ++k) {
            std::string token;
            if (!(in >> token)) throw ParseError("truncated column message");
            x[k] = parse_rational(token);
        }
        msg.columns.push_back(Column::vertex(std::move(x)));
    }
    return msg;
}

AgentState init_agent(int id, LocalOracle oracle) {
    if (oracle.owner() != id) throw DimensionMismatch("agent id differs from its oracle owner");
    const int n = oracle.size();
    auto start = big_m_init(n);
    auto solved = solve_lex(StandardLP(n, {}), start.basis);
    return AgentState{id, std::move(oracle), {}, std::move(solved.basis), std::move(solved.duals),
                      std::move(solved.objective)};
}

void merge_columns(AgentState& s, const std::vector<ColumnMessage>& messages) {
    const int n = s.oracle.size();
    std::vector<Column> pool = s.basis.vertex_members();
    for (const auto& msg : messages) {
        if (msg.columns.size() > static_cast<std::size_t>(n + 1))
            throw DimensionMismatch("message from agent " + std::to_string(msg.sender) + " exceeds n+1 columns");
        for (const auto& c : msg.columns) {
            if (c.kind() != ColumnKind::Vertex) throw DimensionMismatch("messages may carry Vertex columns only");
            if (c.dimension() != n) throw DimensionMismatch("received column has the wrong dimension");
            pool.push_back(c);
        }
    }
    lexsort_unique(pool);
    s.pool = std::move(pool);
}

void local_step(AgentState& s) {
    const int n = s.oracle.size();
    auto solved = solve_lex(StandardLP(n, s.pool), s.basis);
    s.basis = std::move(solved.basis);
    s.duals = std::move(solved.duals);
    s.objective = std::move(solved.objective);

    auto generated = local_greedy(s.oracle, s.duals.u, s.id);
    s.generated = generated.has_value();
    auto pivoted = pivot_in(s.basis, generated);
    s.admitted = pivoted.admitted;
    if (pivoted.admitted) {
        s.basis = std::move(pivoted.basis);
        s.pool.push_back(*generated);
        lexsort_unique(s.pool);
    }
    ++s.round;
}

ColumnMessage outgoing(const AgentState& s) { return ColumnMessage{s.id, s.basis.vertex_members()}; }

}  // namespace discg
