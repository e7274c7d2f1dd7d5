#pragma once

#include "discg/base_polyhedron.hpp"
#include "discg/lp.hpp"
#include "discg/submodular.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace discg {

/// The Vertex columns of a sender's basis. Alpha, Beta and artificial
/// columns never travel.
struct ColumnMessage {
    int sender = 0;
    std::vector<Column> columns;

    friend bool operator==(const ColumnMessage&, const ColumnMessage&) = default;
};

/// Text form: "msg <sender> <count> <n>" followed by one line per column with
/// the n coordinates as "num/den" tokens. Stable across runs.
void write_message(std::ostream& out, const ColumnMessage& msg);
ColumnMessage read_message(std::istream& in);

struct AgentState {
    int id;
    LocalOracle oracle;
    /// Transient per round: lexsorted union of own and received Vertex columns.
    std::vector<Column> pool;
    Basis basis;
    DualPair duals;
    BigM objective;
    int round = 0;
    /// Whether this round's Local Greedy column entered the basis.
    bool admitted = false;
    /// Whether Local Greedy produced a column at all this round.
    bool generated = false;
};

/// Big-M start: solves the master LP without Vertex columns from the
/// all-artificial basis.
AgentState init_agent(int id, LocalOracle oracle);

/// Rebuilds the pool from the agent's own basis columns and the messages.
/// Throws DimensionMismatch on a malformed message.
void merge_columns(AgentState& s, const std::vector<ColumnMessage>& messages);

/// Solve the local LP, run Local Greedy on the fresh duals, pivot the new
/// column in if it prices negatively.
void local_step(AgentState& s);

ColumnMessage outgoing(const AgentState& s);

}  // namespace discg
