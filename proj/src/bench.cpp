#include "discg/bench.hpp"

#include "discg/base_polyhedron.hpp"
#include "discg/errors.hpp"
#include "discg/instances.hpp"
#include "discg/netsim.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace discg {

BruteForceResult brute_force_min(const SetFunction& f) {
    const int n = f.size();
    if (n > 20) throw GroundSetTooLarge("brute_force_min enumerates 2^n subsets; n <= 20 required");
    BruteForceResult best{Subset::empty(n), f.value(Subset::empty(n))};
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        Subset x(n, m);
        Rational v = f.value(x);
        if (v < best.value) best = {x, std::move(v)};
    }
    return best;
}

CentralizedResult centralized_cg(const SetFunction& f) {
    const int n = f.size();
    if (n > 16) throw GroundSetTooLarge("centralized_cg is a reference for n <= 16");
    std::vector<Column> generated;
    Basis basis = big_m_init(n).basis;
    int iterations = 0;
    while (true) {
        auto solved = solve_lex(StandardLP(n, generated), basis);
        basis = solved.basis;
        auto column = Column::vertex(greedy_vertex(f, full_sort(solved.duals.u)));
        if (reduced_cost(column, solved.duals).sign() >= 0) {
            const auto x = Subset::from_indicator(solved.duals.u);
            return CentralizedResult{x, evaluate(f, x), iterations, std::move(solved.duals),
                                     std::move(solved.objective)};
        }
        generated.push_back(std::move(column));
        ++iterations;
    }
}

int nearest_rank(std::vector<int> values, double percent) {
    if (values.empty()) return 0;
    std::sort(values.begin(), values.end());
    const auto count = static_cast<double>(values.size());
    auto rank = static_cast<std::size_t>(std::ceil(percent / 100.0 * count - 1e-12));
    rank = std::clamp<std::size_t>(rank, 1, values.size());
    return values[rank - 1];
}

StatSummary summarize(const std::vector<int>& values) {
    StatSummary s;
    s.count = static_cast<int>(values.size());
    if (values.empty()) return s;
    s.median = nearest_rank(values, 50);
    s.q25 = nearest_rank(values, 25);
    s.q75 = nearest_rank(values, 75);
    const double iqr = s.q75 - s.q25;
    const double lo = s.q25 - 1.5 * iqr;
    const double hi = s.q75 + 1.5 * iqr;
    auto sorted = values;
    std::sort(sorted.begin(), sorted.end());
    bool first = true;
    for (int v : sorted) {
        if (v < lo || v > hi) {
            s.outliers.push_back(v);
            continue;
        }
        if (first) s.whisker_low = v;
        s.whisker_high = v;
        first = false;
    }
    return s;
}

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t k = std::min(x.size(), y.size());
    if (k < 2) return {};
    double mx = 0;
    double my = 0;
    for (std::size_t i = 0; i < k; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(k);
    my /= static_cast<double>(k);
    double sxy = 0;
    double sxx = 0;
    for (std::size_t i = 0; i < k; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    if (sxx == 0) return {0.0, my};
    const double slope = sxy / sxx;
    return {slope, my - slope * mx};
}

int CellResult::converged() const {
    return static_cast<int>(std::count_if(runs.begin(), runs.end(), [](const RunOutcome& r) { return r.converged; }));
}

int CellResult::mismatches() const {
    return static_cast<int>(std::count_if(runs.begin(), runs.end(), [](const RunOutcome& r) {
        return (r.converged && (!r.oracle_match || !r.binary_duals));
    }));
}

int ExperimentTable::total_mismatches() const {
    int total = 0;
    for (const auto& c : cells) total += c.mismatches();
    return total;
}

LineFit ExperimentTable::median_fit() const {
    std::vector<double> x;
    std::vector<double> y;
    for (const auto& c : cells) {
        if (c.stats.count == 0) continue;
        x.push_back(c.n);
        y.push_back(c.stats.median);
    }
    return least_squares(x, y);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    // splitmix64 finalizer over a simple combination.
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(mix(base) ^ a) ^ b);
}

namespace {

RunOutcome run_one(const SetFunctionPtr& f, const GraphProcess& graph, double p_loss, std::uint64_t instance_seed,
                   int max_rounds, int oracle_max_n, const std::string& label) {
    RunOutcome out;
    out.instance_seed = instance_seed;
    RunConfig config{f, graph, LossModel{p_loss, derive_seed(instance_seed, 0x10550, 0)}, max_rounds, instance_seed,
                     label};
    try {
        const auto trace = run(config);
        out.converged = true;
        out.rounds = trace.convergence_round;
        const auto& last = trace.rounds.back();
        for (const auto& a : last.agents)
            for (const auto& q : a.u)
                if (q != 0 && q != 1) out.binary_duals = false;
        if (f->size() <= oracle_max_n) {
            out.oracle_checked = true;
            out.oracle_match = trace.optimum_value == brute_force_min(*f).value;
        }
    } catch (const NonConvergence& e) {
        out.converged = false;
        out.rounds = e.rounds();
    }
    return out;
}

void finish_cell(CellResult& cell) {
    std::vector<int> rounds;
    for (const auto& r : cell.runs)
        if (r.converged) rounds.push_back(r.rounds);
    cell.stats = summarize(rounds);
}

}  // namespace

ExperimentTable experiment_scaling(const ExperimentSpec& spec) {
    if (spec.instances < 1) throw DimensionMismatch("instances per cell must be at least 1");
    ExperimentTable table{ExperimentKind::Scaling, {}, 0};
    for (int n : spec.sizes) {
        CellResult cell;
        cell.n = n;
        const auto graph = make_cycle(n);
        for (int k = 0; k < spec.instances; ++k) {
            const auto seed = derive_seed(spec.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
            const auto f = min_cut_function(random_min_cut(n, seed));
            cell.runs.push_back(run_one(f, graph, 0.0, seed, spec.max_rounds, spec.oracle_max_n,
                                        "mincut:" + std::to_string(seed)));
        }
        finish_cell(cell);
        table.cells.push_back(std::move(cell));
    }
    return table;
}

ExperimentTable experiment_losses(const ExperimentSpec& spec) {
    if (spec.instances < 1) throw DimensionMismatch("instances per cell must be at least 1");
    const int n = spec.nominal_n;
    std::optional<GraphProcess> nominal;
    if (spec.nominal_diameter) {
        nominal = find_er_with_diameter(n, spec.nominal_p_edge, *spec.nominal_diameter, spec.seed, 10000);
        if (!nominal) throw DimensionMismatch("no nominal graph with the requested diameter was found");
    } else {
        nominal = make_fixed_er(n, spec.nominal_p_edge, spec.seed);
    }
    ExperimentTable table{ExperimentKind::Losses, {}, diameter(n, nominal->nominal())};
    for (double p : spec.loss_probs) {
        CellResult cell;
        cell.n = n;
        cell.p_loss = p;
        for (int k = 0; k < spec.instances; ++k) {
            // Instance and loss seeds do not depend on p, so cells are matched.
            const auto seed = derive_seed(spec.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
            const auto f = min_cut_function(random_min_cut(n, seed));
            cell.runs.push_back(run_one(f, *nominal, p, seed, spec.max_rounds, spec.oracle_max_n,
                                        "mincut:" + std::to_string(seed)));
        }
        finish_cell(cell);
        table.cells.push_back(std::move(cell));
    }
    return table;
}

namespace {

std::string fixed2(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << v;
    return os.str();
}

}  // namespace

void write_table_csv(std::ostream& out, const ExperimentTable& table) {
    out << "n,p_loss,runs,converged,mismatches,median,q25,q75,whisker_low,whisker_high,outliers\n";
    for (const auto& c : table.cells) {
        out << c.n << ',' << fixed2(c.p_loss) << ',' << c.runs.size() << ',' << c.converged() << ','
            << c.mismatches() << ',' << c.stats.median << ',' << c.stats.q25 << ',' << c.stats.q75 << ','
            << c.stats.whisker_low << ',' << c.stats.whisker_high << ',';
        for (std::size_t k = 0; k < c.stats.outliers.size(); ++k) out << (k ? ";" : "") << c.stats.outliers[k];
        out << '\n';
    }
}

void write_runs_csv(std::ostream& out, const ExperimentTable& table) {
    out << "n,p_loss,instance_seed,converged,rounds,oracle_match\n";
    for (const auto& c : table.cells)
        for (const auto& r : c.runs)
            out << c.n << ',' << fixed2(c.p_loss) << ',' << r.instance_seed << ',' << (r.converged ? 1 : 0) << ','
                << r.rounds << ',' << (r.oracle_checked ? (r.oracle_match ? "1" : "0") : "-") << '\n';
}

std::string family_name(InstanceFamily family) {
    switch (family) {
        case InstanceFamily::MinCut: return "mincut";
        case InstanceFamily::Selection: return "selection";
        case InstanceFamily::ConcaveCut: return "concave_cut";
    }
    return "?";
}

SetFunctionPtr make_instance(InstanceFamily family, int n, std::uint64_t seed) {
    switch (family) {
        case InstanceFamily::MinCut: return min_cut_function(random_min_cut(n, seed));
        case InstanceFamily::Selection: return selection_function(random_selection(n, seed));
        case InstanceFamily::ConcaveCut: return random_concave_cut(n, seed);
    }
    throw DimensionMismatch("unknown instance family");
}

bool VerifyRecord::match() const {
    if (!binary_duals) return false;
    if (brute != centralized) return false;
    return !distributed || *distributed == brute;
}

int VerifyReport::mismatches() const {
    return static_cast<int>(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.match(); }));
}

VerifyReport verify_triangle(int count, int max_n, std::uint64_t seed, bool distributed) {
    if (max_n < 2 || max_n > 16) throw GroundSetTooLarge("verify_triangle supports 2 <= n <= 16");
    VerifyReport report;
    static constexpr InstanceFamily families[] = {InstanceFamily::MinCut, InstanceFamily::Selection,
                                                  InstanceFamily::ConcaveCut};
    for (int k = 0; k < count; ++k) {
        const auto family = families[k % 3];
        const int n = 2 + (k / 3) % (max_n - 1);
        const auto s = derive_seed(seed, static_cast<std::uint64_t>(family), static_cast<std::uint64_t>(k));
        const auto f = make_instance(family, n, s);
        VerifyRecord rec{family, n, s, brute_force_min(*f).value, {}, std::nullopt, true};
        const auto central = centralized_cg(*f);
        rec.centralized = central.value;
        for (const auto& q : central.duals.u)
            if (q != 0 && q != 1) rec.binary_duals = false;
        if (distributed) {
            RunConfig config{f, make_cycle(n), LossModel{0.0, s}, 0, s, family_name(family) + ":" + std::to_string(s)};
            try {
                const auto trace = run(config);
                rec.distributed = trace.optimum_value;
                for (const auto& a : trace.rounds.back().agents)
                    for (const auto& q : a.u)
                        if (q != 0 && q != 1) rec.binary_duals = false;
            } catch (const NonConvergence&) {
                rec.distributed = std::nullopt;
                rec.binary_duals = false;
            }
        }
        report.records.push_back(std::move(rec));
    }
    return report;
}

}  // namespace discg
