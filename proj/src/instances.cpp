#include "discg/instances.hpp"

#include "discg/errors.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace discg {

CapacitatedDigraph::CapacitatedDigraph(int n, std::vector<CapacitatedEdge> edges) : n_(n), edges_(std::move(edges)) {
    GroundSet g(n);
    for (const auto& e : edges_) {
        const auto where = "edge (" + std::to_string(e.from) + "," + std::to_string(e.to) + ")";
        if (e.from < 0 || e.from > n + 1 || e.to < 0 || e.to > n + 1) throw InvalidGraph(where + " uses an unknown node");
        if (e.to == source()) throw InvalidGraph(where + " enters the source");
        if (e.from == sink()) throw InvalidGraph(where + " leaves the sink");
        if (e.from == e.to) throw InvalidGraph(where + " is a self loop");
        if (e.capacity < 0) throw InvalidGraph(where + " has negative capacity");
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const auto& a, const auto& b) { return std::pair(a.from, a.to) < std::pair(b.from, b.to); });
    for (std::size_t k = 1; k < edges_.size(); ++k)
        if (edges_[k].from == edges_[k - 1].from && edges_[k].to == edges_[k - 1].to)
            throw InvalidGraph("duplicate edge (" + std::to_string(edges_[k].from) + "," +
                               std::to_string(edges_[k].to) + ")");
}

Rational CapacitatedDigraph::capacity(int from, int to) const {
    for (const auto& e : edges_)
        if (e.from == from && e.to == to) return e.capacity;
    return 0;
}

Rational CapacitatedDigraph::source_capacity() const {
    Rational acc = 0;
    for (const auto& e : edges_)
        if (e.from == source()) acc += e.capacity;
    return acc;
}

Rational CapacitatedDigraph::cut_capacity(const Subset& x) const {
    auto in_cut = [&](int node) { return node == source() || (node >= 1 && node <= n_ && x.contains(node)); };
    Rational acc = 0;
    for (const auto& e : edges_)
        if (in_cut(e.from) && !in_cut(e.to)) acc += e.capacity;
    return acc;
}

namespace {

using boost::multiprecision::mpz_int;

/// Four-term cut formula. Capacities are rescaled to a common denominator and
/// summed as 64-bit integers when that is exact, which is the common case for
/// one-decimal capacities.
class MinCutFunction final : public SetFunction {
public:
    explicit MinCutFunction(const CapacitatedDigraph& g) : n_(g.size()), sink_(g.sink()) {
        mpz_int lcm = 1;
        for (const auto& e : g.edges()) lcm = boost::multiprecision::lcm(lcm, denominator(e.capacity));
        mpz_int total = 0;
        for (const auto& e : g.edges()) total += numerator(e.capacity) * (lcm / denominator(e.capacity));
        scaled_ok_ = total < mpz_int(std::numeric_limits<std::int64_t>::max() / 4);
        scale_ = Rational(lcm);
        for (const auto& e : g.edges()) {
            Entry entry{e.from, e.to, e.capacity, 0};
            if (scaled_ok_) entry.scaled = (numerator(e.capacity) * (lcm / denominator(e.capacity))).convert_to<std::int64_t>();
            edges_.push_back(entry);
        }
    }

    int size() const override { return n_; }

    Rational value(const Subset& x) const override {
        if (scaled_ok_) {
            std::int64_t acc = 0;
            for (const auto& e : edges_) acc += e.scaled * coefficient(e, x);
            return Rational(acc) / scale_;
        }
        Rational acc = 0;
        for (const auto& e : edges_) {
            const int c = coefficient(e, x);
            if (c != 0) acc += e.capacity * c;
        }
        return acc;
    }

private:
    struct Entry {
        int from;
        int to;
        Rational capacity;
        std::int64_t scaled;
    };

    // Net contribution of one edge to F(X) across the four terms.
    int coefficient(const Entry& e, const Subset& x) const {
        const bool from_inner = e.from >= 1 && e.from <= n_;
        const bool to_inner = e.to >= 1 && e.to <= n_;
        if (e.from == 0) {
            // Second term counts j outside X (t is never in X); fourth term subtracts all.
            const bool outside = !to_inner || !x.contains(e.to);
            return (outside ? 1 : 0) - 1;
        }
        if (from_inner && to_inner) return (x.contains(e.from) && !x.contains(e.to)) ? 1 : 0;
        if (from_inner && e.to == sink_) return x.contains(e.from) ? 1 : 0;
        return 0;
    }

    int n_;
    int sink_;
    bool scaled_ok_ = false;
    Rational scale_;
    std::vector<Entry> edges_;
};

Rational tenths(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> pick(lo, hi);
    return Rational(pick(rng), 10);
}

}  // namespace

SetFunctionPtr min_cut_function(const CapacitatedDigraph& g) { return std::make_shared<MinCutFunction>(g); }

CapacitatedDigraph random_min_cut(int n, std::uint64_t seed) {
    GroundSet ground(n);
    if (n < 2) throw DimensionMismatch("random min-cut instances need n >= 2");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.1);
    std::uniform_int_distribution<int> node(1, n);
    std::vector<CapacitatedEdge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && coin(rng)) edges.push_back({i, j, tenths(rng, 1, 100)});
    const int t = n + 1;
    const int s_anchor = node(rng);
    const int t_anchor = node(rng);
    for (int j = 1; j <= n; ++j)
        if (j == s_anchor || coin(rng)) edges.push_back({0, j, tenths(rng, 1, 100)});
    for (int i = 1; i <= n; ++i)
        if (i == t_anchor || coin(rng)) edges.push_back({i, t, tenths(rng, 1, 100)});
    return CapacitatedDigraph(n, std::move(edges));
}

namespace {

class SelectionFunction final : public SetFunction {
public:
    explicit SelectionFunction(SelectionInstance inst) : inst_(std::move(inst)) {
        const auto n = inst_.returns.size();
        GroundSet g(static_cast<int>(n));
        if (inst_.penalties.size() != n) throw DimensionMismatch("penalty matrix must be n x n");
        column_penalty_.assign(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (inst_.penalties[i].size() != n) throw DimensionMismatch("penalty matrix must be n x n");
            for (std::size_t j = 0; j < n; ++j) {
                if (inst_.penalties[i][j] < 0) throw DimensionMismatch("penalties must be non-negative");
                column_penalty_[j] += inst_.penalties[i][j];
            }
        }
        reward_at_empty_ = raw_reward(Subset::empty(static_cast<int>(n)));
    }

    int size() const override { return static_cast<int>(inst_.returns.size()); }
    Rational value(const Subset& x) const override { return reward_at_empty_ - raw_reward(x); }

private:
    Rational raw_reward(const Subset& x) const {
        Rational r = x.weight(inst_.returns);
        // i ranges over all of V, so the penalty is sum over j outside X of
        // the column sums of p.
        for (int j = 1; j <= size(); ++j)
            if (!x.contains(j)) r -= column_penalty_[j - 1];
        return r;
    }

    SelectionInstance inst_;
    RationalVector column_penalty_;
    Rational reward_at_empty_;
};

}  // namespace

SetFunctionPtr selection_function(const SelectionInstance& inst) { return std::make_shared<SelectionFunction>(inst); }

SelectionInstance random_selection(int n, std::uint64_t seed) {
    GroundSet ground(n);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.3);
    SelectionInstance inst;
    for (int i = 0; i < n; ++i) inst.returns.push_back(tenths(rng, -50, 50));
    inst.penalties.assign(n, RationalVector(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && coin(rng)) inst.penalties[i][j] = tenths(rng, 1, 50);
    return inst;
}

SetFunctionPtr random_concave_cut(int n, std::uint64_t seed) {
    GroundSet ground(n);
    std::mt19937_64 rng(seed);
    // Non-increasing increments give a concave g with g(0) = 0.
    RationalVector increments;
    for (int k = 0; k < n; ++k) increments.push_back(tenths(rng, -30, 30));
    std::sort(increments.begin(), increments.end(), [](const Rational& a, const Rational& b) { return a > b; });
    RationalVector g(n + 1, Rational(0));
    for (int k = 1; k <= n; ++k) g[k] = g[k - 1] + increments[k - 1];
    RationalVector w;
    for (int k = 0; k < n; ++k) w.push_back(tenths(rng, -20, 20));

    std::bernoulli_distribution coin(0.4);
    std::vector<CapacitatedEdge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && coin(rng)) edges.push_back({i, j, tenths(rng, 1, 30)});
    auto cut = min_cut_function(CapacitatedDigraph(n, std::move(edges)));
    auto concave = std::make_shared<LambdaFunction>(n, [g](const Subset& x) { return g[x.size()]; });
    return std::make_shared<SumFunction>(
        std::vector<SetFunctionPtr>{concave, std::make_shared<ModularFunction>(w), cut});
}

void write_graph(std::ostream& out, const CapacitatedDigraph& g) {
    out << g.size() << ' ' << g.source() << ' ' << g.sink() << '\n';
    for (const auto& e : g.edges())
        out << e.from << ' ' << e.to << ' ' << numerator(e.capacity).str() << ' ' << denominator(e.capacity).str()
            << '\n';
}

CapacitatedDigraph read_graph(std::istream& in) {
    int n = 0;
    int s = 0;
    int t = 0;
    if (!(in >> n >> s >> t)) throw ParseError("graph header must read 'n s t'");
    if (n < 1) throw ParseError("graph needs at least one inner node");
    auto inner = [&](int v) { return v >= 1 && v <= n; };
    if (inner(s) || inner(t) || s == t) throw ParseError("s and t must be distinct labels outside 1..n");
    auto relabel = [&](int v) {
        if (v == s) return 0;
        if (v == t) return n + 1;
        if (!inner(v)) throw ParseError("unknown node label " + std::to_string(v));
        return v;
    };
    std::vector<CapacitatedEdge> edges;
    std::string num;
    std::string den;
    int i = 0;
    int j = 0;
    while (in >> i >> j >> num >> den) {
        const Rational d = parse_rational(den);
        if (d.is_zero()) throw ParseError("zero capacity denominator");
        edges.push_back({relabel(i), relabel(j), parse_rational(num) / d});
    }
    if (!in.eof()) throw ParseError("malformed edge line");
    return CapacitatedDigraph(n, std::move(edges));
}

void write_selection(std::ostream& out, const SelectionInstance& inst) {
    const auto n = inst.returns.size();
    out << n << "\nselection\n";
    for (std::size_t i = 0; i < n; ++i) out << "r " << i + 1 << ' ' << inst.returns[i].str() << '\n';
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!inst.penalties[i][j].is_zero())
                out << "p " << i + 1 << ' ' << j + 1 << ' ' << inst.penalties[i][j].str() << '\n';
}

void write_mincut_instance(std::ostream& out, const CapacitatedDigraph& g) {
    out << g.size() << "\nmincut\n";
    write_graph(out, g);
}

SetFunctionPtr read_instance(std::istream& in) {
    int n = 0;
    std::string tag;
    if (!(in >> n >> tag)) throw ParseError("instance must start with n and a type tag");
    GroundSet ground(n);
    if (tag == "table") return read_table_body(in, n);
    if (tag == "mincut") {
        auto g = read_graph(in);
        if (g.size() != n) throw ParseError("graph size differs from the instance header");
        return min_cut_function(g);
    }
    if (tag == "selection") {
        SelectionInstance inst{RationalVector(n, Rational(0)), std::vector<RationalVector>(n, RationalVector(n, Rational(0)))};
        std::string kind;
        while (in >> kind) {
            int i = 0;
            int j = 0;
            std::string value;
            if (kind == "r" && in >> i >> value && i >= 1 && i <= n) {
                inst.returns[i - 1] = parse_rational(value);
            } else if (kind == "p" && in >> i >> j >> value && i >= 1 && i <= n && j >= 1 && j <= n) {
                inst.penalties[i - 1][j - 1] = parse_rational(value);
            } else {
                throw ParseError("bad selection line starting with '" + kind + "'");
            }
        }
        return selection_function(inst);
    }
    throw ParseError("unknown instance tag '" + tag + "'");
}

}  // namespace discg
