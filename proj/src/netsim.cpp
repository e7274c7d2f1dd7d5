#include "discg/netsim.hpp"

#include "discg/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

namespace discg {

namespace {

void canonicalize(int n, std::vector<Edge>& edges) {
    for (const auto& [i, j] : edges) {
        if (i < 1 || i > n || j < 1 || j > n) throw DimensionMismatch("edge endpoint outside 1..n");
        if (i == j) throw DimensionMismatch("communication edges need distinct endpoints");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::vector<std::vector<int>> adjacency(int n, const std::vector<Edge>& edges, bool reverse) {
    std::vector<std::vector<int>> adj(n + 1);
    for (const auto& [i, j] : edges) {
        if (reverse)
            adj[j].push_back(i);
        else
            adj[i].push_back(j);
    }
    return adj;
}

std::vector<int> bfs(int n, const std::vector<std::vector<int>>& adj, int root) {
    std::vector<int> dist(n + 1, -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w : adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

}  // namespace

GraphProcess::GraphProcess(Kind kind, int n, std::vector<Edge> nominal, double keep, std::uint64_t seed)
    : kind_(kind), n_(n), nominal_(std::move(nominal)), keep_(keep), seed_(seed) {
    GroundSet g(n);
    canonicalize(n, nominal_);
}

GraphProcess GraphProcess::fixed(int n, std::vector<Edge> edges) {
    return GraphProcess(Kind::Fixed, n, std::move(edges), 1.0, 0);
}

GraphProcess GraphProcess::round_robin(int n, std::vector<Edge> nominal) {
    return GraphProcess(Kind::RoundRobin, n, std::move(nominal), 1.0, 0);
}

GraphProcess GraphProcess::random_subset(int n, std::vector<Edge> nominal, double keep, std::uint64_t seed) {
    if (!(keep >= 0.0 && keep <= 1.0)) throw DimensionMismatch("keep probability must lie in [0, 1]");
    return GraphProcess(Kind::RandomSubset, n, std::move(nominal), keep, seed);
}

std::vector<Edge> GraphProcess::edges_at(int t) const {
    switch (kind_) {
        case Kind::Fixed: return nominal_;
        case Kind::RoundRobin: {
            const int speaker = ((t - 1) % n_ + n_) % n_ + 1;
            std::vector<Edge> out;
            for (const auto& e : nominal_)
                if (e.first == speaker) out.push_back(e);
            return out;
        }
        case Kind::RandomSubset: {
            std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                              static_cast<std::uint32_t>(t)};
            std::mt19937_64 rng(seq);
            std::bernoulli_distribution keep(keep_);
            std::vector<Edge> out;
            for (const auto& e : nominal_)
                if (keep(rng)) out.push_back(e);
            return out;
        }
    }
    return {};
}

std::string GraphProcess::describe() const {
    std::ostringstream os;
    static constexpr const char* names[] = {"fixed", "round_robin", "random_subset"};
    os << names[static_cast<int>(kind_)] << " n=" << n_;
    if (kind_ == Kind::RandomSubset) os << " keep=" << keep_ << " seed=" << seed_;
    os << " edges=";
    for (const auto& [i, j] : nominal_) os << i << '>' << j << ',';
    return os.str();
}

GraphProcess make_cycle(int n) {
    if (n < 1) throw DimensionMismatch("cycle needs at least one node");
    std::vector<Edge> edges;
    for (int i = 1; i <= n && n > 1; ++i) edges.emplace_back(i, i % n + 1);
    return GraphProcess::fixed(n, std::move(edges));
}

GraphProcess make_complete(int n) {
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) edges.emplace_back(i, j);
    return GraphProcess::fixed(n, std::move(edges));
}

GraphProcess make_fixed_er(int n, double p_edge, std::uint64_t seed) {
    if (n < 2) throw DimensionMismatch("random communication graphs need n >= 2");
    if (!(p_edge > 0.0 && p_edge <= 1.0)) throw DimensionMismatch("edge probability must lie in (0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p_edge);
    while (true) {
        std::vector<Edge> edges;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j && coin(rng)) edges.emplace_back(i, j);
        if (strongly_connected(n, edges)) return GraphProcess::fixed(n, std::move(edges));
    }
}

std::optional<GraphProcess> find_er_with_diameter(int n, double p_edge, int target, std::uint64_t seed,
                                                  int attempts) {
    for (int k = 0; k < attempts; ++k) {
        auto g = make_fixed_er(n, p_edge, seed + static_cast<std::uint64_t>(k));
        if (diameter(n, g.nominal()) == target) return g;
    }
    return std::nullopt;
}

bool strongly_connected(int n, const std::vector<Edge>& edges) {
    if (n == 1) return true;
    const auto fwd = bfs(n, adjacency(n, edges, false), 1);
    const auto bwd = bfs(n, adjacency(n, edges, true), 1);
    for (int v = 1; v <= n; ++v)
        if (fwd[v] < 0 || bwd[v] < 0) return false;
    return true;
}

int diameter(int n, const std::vector<Edge>& edges) {
    const auto adj = adjacency(n, edges, false);
    int best = 0;
    for (int v = 1; v <= n; ++v) {
        const auto dist = bfs(n, adj, v);
        for (int w = 1; w <= n; ++w) {
            if (dist[w] < 0) return -1;
            best = std::max(best, dist[w]);
        }
    }
    return best;
}

bool check_joint_connectivity(const GraphProcess& graph, int window, int start) {
    if (window < 1) return false;
    std::vector<Edge> all;
    for (int t = start; t < start + window; ++t) {
        auto e = graph.edges_at(t);
        all.insert(all.end(), e.begin(), e.end());
    }
    return strongly_connected(graph.size(), all);
}

int default_max_rounds(int n, double p_loss) {
    const double base = 50.0 * n;
    if (p_loss <= 0.0 || p_loss >= 1.0) return static_cast<int>(base);
    return static_cast<int>(std::ceil(base / (1.0 - p_loss)));
}

RoundRecord step_round(std::vector<AgentState>& agents, const GraphProcess& graph, double p_loss,
                       std::mt19937_64& loss_rng, int t) {
    const int n = static_cast<int>(agents.size());
    if (graph.size() != n) throw DimensionMismatch("graph and agent count differ");
    RoundRecord record{t, {}, {}, {}};

    std::vector<ColumnMessage> snapshot;
    snapshot.reserve(n);
    for (const auto& a : agents) snapshot.push_back(outgoing(a));

    std::vector<std::vector<ColumnMessage>> inbox(n + 1);
    std::vector<int> dropped(n + 1, 0);
    std::bernoulli_distribution drop(std::clamp(p_loss, 0.0, 1.0));
    for (const auto& e : graph.edges_at(t)) {
        record.active.push_back(e);
        if (drop(loss_rng)) {
            record.dropped.push_back(e);
            ++dropped[e.second];
        } else {
            inbox[e.second].push_back(snapshot[e.first - 1]);
        }
    }

    for (int i = 1; i <= n; ++i) {
        auto& agent = agents[i - 1];
        merge_columns(agent, inbox[i]);
        local_step(agent);
        record.agents.push_back(AgentRecord{i, agent.objective, agent.duals.u, agent.basis.vertex_count(),
                                            static_cast<int>(inbox[i].size()), dropped[i], agent.admitted});
    }
    return record;
}

bool halted(const std::vector<AgentState>& agents) {
    if (agents.empty()) return true;
    const auto& ref = agents.front();
    for (const auto& a : agents) {
        if (a.admitted) return false;
        if (!(a.duals == ref.duals)) return false;
        if (!a.basis.same_members(ref.basis)) return false;
    }
    return true;
}

std::string config_hash(const RunConfig& config) {
    std::ostringstream os;
    os << "n=" << config.instance->size() << "|instance=" << config.instance_label << "|graph="
       << config.graph.describe() << "|p_loss=" << std::setprecision(17) << config.loss.p_loss
       << "|loss_seed=" << config.loss.seed << "|max_rounds=" << config.max_rounds << "|seed=" << config.seed;
    return hex(fnv1a(os.str()));
}

NetTrace run(const RunConfig& config) {
    if (!config.instance) throw DimensionMismatch("run needs an instance");
    const int n = config.instance->size();
    if (config.graph.size() != n) throw DimensionMismatch("communication graph must have one node per element");
    const int cap = config.max_rounds > 0 ? config.max_rounds : default_max_rounds(n, config.loss.p_loss);

    std::vector<AgentState> agents;
    agents.reserve(n);
    for (int i = 1; i <= n; ++i) agents.push_back(init_agent(i, LocalOracle(i, config.instance)));

    NetTrace trace;
    trace.seed = config.seed;
    trace.config_hash = config_hash(config);
    std::mt19937_64 loss_rng(config.loss.seed);
    for (int t = 1; t <= cap; ++t) {
        trace.rounds.push_back(step_round(agents, config.graph, config.loss.p_loss, loss_rng, t));
        if (halted(agents)) {
            trace.converged = true;
            trace.convergence_round = t;
            const auto x = Subset::from_indicator(agents.front().duals.u);
            trace.optimum = x;
            trace.optimum_value = evaluate(*config.instance, x);
            return trace;
        }
    }
    throw NonConvergence("no agreement after " + std::to_string(cap) + " rounds", cap);
}

std::string format_dual(const RationalVector& u) {
    const bool binary = std::all_of(u.begin(), u.end(), [](const Rational& q) { return q == 0 || q == 1; });
    std::string out;
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (binary) {
            out += u[k] == 1 ? '1' : '0';
        } else {
            if (k) out += ';';
            out += u[k].str();
        }
    }
    return out;
}

void write_trace_csv(std::ostream& out, const NetTrace& trace) {
    out << "round,agent,objective,u,basis_vertices,msgs_received,msgs_dropped\n";
    for (const auto& r : trace.rounds)
        for (const auto& a : r.agents)
            out << r.round << ',' << a.agent << ',' << to_string(a.objective) << ',' << format_dual(a.u) << ','
                << a.basis_vertices << ',' << a.received << ',' << a.dropped << '\n';
}

std::string summary_json(const NetTrace& trace) {
    nlohmann::ordered_json j;
    j["converged"] = trace.converged;
    j["T"] = trace.convergence_round;
    j["X"] = trace.optimum ? trace.optimum->elements() : std::vector<int>{};
    j["F"] = trace.optimum_value.str();
    j["seed"] = trace.seed;
    j["config_hash"] = trace.config_hash;
    return j.dump();
}

}  // namespace discg
