#pragma once

#include "discg/agent.hpp"
#include "discg/submodular.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace discg {

/// Directed communication edge (sender, receiver), agents labelled 1..n.
using Edge = std::pair<int, int>;

/// Time-varying digraph G(t), t = 1, 2, ...
class GraphProcess {
public:
    enum class Kind { Fixed, RoundRobin, RandomSubset };

    /// The same edge set every round.
    static GraphProcess fixed(int n, std::vector<Edge> edges);
    /// Round t activates only the nominal edges leaving agent ((t-1) mod n) + 1.
    static GraphProcess round_robin(int n, std::vector<Edge> nominal);
    /// Each nominal edge is present in round t with probability keep,
    /// independently per (edge, round), reproducible from seed.
    static GraphProcess random_subset(int n, std::vector<Edge> nominal, double keep, std::uint64_t seed);

    int size() const { return n_; }
    Kind kind() const { return kind_; }
    /// Sorted, duplicate free.
    const std::vector<Edge>& nominal() const { return nominal_; }
    std::vector<Edge> edges_at(int t) const;
    /// Canonical text used for config hashing.
    std::string describe() const;

private:
    GraphProcess(Kind kind, int n, std::vector<Edge> nominal, double keep, std::uint64_t seed);

    Kind kind_;
    int n_;
    std::vector<Edge> nominal_;
    double keep_;
    std::uint64_t seed_;
};

/// Directed cycle 1 -> 2 -> .. -> n -> 1 (diameter n-1).
GraphProcess make_cycle(int n);
GraphProcess make_complete(int n);
/// Erdos-Renyi digraph with edge probability p_edge, resampled until strongly
/// connected.
GraphProcess make_fixed_er(int n, double p_edge, std::uint64_t seed);
/// Searches seeds seed, seed+1, .. for an ER digraph with the given diameter.
std::optional<GraphProcess> find_er_with_diameter(int n, double p_edge, int diameter, std::uint64_t seed,
                                                  int attempts);

bool strongly_connected(int n, const std::vector<Edge>& edges);
/// Largest shortest-path distance over ordered pairs, or -1 if some pair is
/// disconnected.
int diameter(int n, const std::vector<Edge>& edges);
/// True iff the union of E(start) .. E(start + window - 1) is strongly connected.
bool check_joint_connectivity(const GraphProcess& graph, int window, int start = 1);

/// Independent per-(edge, round) message drops.
struct LossModel {
    double p_loss = 0.0;
    std::uint64_t seed = 0;
};

/// 50 n rounds, scaled by 1/(1 - p_loss) when losses are possible.
int default_max_rounds(int n, double p_loss);

struct RunConfig {
    SetFunctionPtr instance;
    GraphProcess graph;
    LossModel loss;
    int max_rounds = 0;  // 0 selects default_max_rounds
    std::uint64_t seed = 0;
    /// Free-form identity of the instance, folded into the config hash.
    std::string instance_label;
};

struct AgentRecord {
    int agent;
    BigM objective;
    RationalVector u;
    int basis_vertices;
    int received;
    int dropped;
    bool admitted;
};

struct RoundRecord {
    int round;
    std::vector<Edge> active;
    std::vector<Edge> dropped;
    std::vector<AgentRecord> agents;
};

struct NetTrace {
    std::vector<RoundRecord> rounds;
    bool converged = false;
    /// Round T after which all agents hold the common optimal basis.
    int convergence_round = 0;
    std::optional<Subset> optimum;
    Rational optimum_value;
    std::uint64_t seed = 0;
    std::string config_hash;
};

/// One synchronous round: every agent merges the pre-round messages that
/// survive on its in-edges of E(t), then runs local_step.
RoundRecord step_round(std::vector<AgentState>& agents, const GraphProcess& graph, double p_loss,
                       std::mt19937_64& loss_rng, int t);

/// All agents agree on basis and duals, and no agent admitted a new column
/// this round. From here on every state is a fixed point of the round map.
bool halted(const std::vector<AgentState>& agents);

/// Runs rounds until halted() or the round cap; throws NonConvergence on the cap.
NetTrace run(const RunConfig& config);

std::string config_hash(const RunConfig& config);

/// CSV with header round,agent,objective,u,basis_vertices,msgs_received,msgs_dropped.
/// u lists u_1..u_n left to right, as digits when 0/1, else ';'-separated rationals.
void write_trace_csv(std::ostream& out, const NetTrace& trace);
/// One-line JSON record: T, X*, F(X*), seed, config hash.
std::string summary_json(const NetTrace& trace);

std::string format_dual(const RationalVector& u);

}  // namespace discg
