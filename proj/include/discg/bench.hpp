#pragma once

#include "discg/lp.hpp"
#include "discg/submodular.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace discg {

struct BruteForceResult {
    Subset argmin;
    Rational value;
};

/// Exhaustive minimum over all 2^n subsets (n <= 20); ties go to the
/// smallest mask.
BruteForceResult brute_force_min(const SetFunction& f);

struct CentralizedResult {
    Subset argmin;
    Rational value;
    /// Number of generated columns admitted to the reduced problem.
    int iterations = 0;
    DualPair duals;
    BigM objective;
};

/// Column generation with full greedy pricing until the generated column
/// prices non-negatively (n <= 16). The minimizer is read off the final u.
CentralizedResult centralized_cg(const SetFunction& f);

/// Box-plot statistics with nearest-rank percentiles and 1.5 IQR fences.
struct StatSummary {
    int count = 0;
    int median = 0;
    int q25 = 0;
    int q75 = 0;
    int whisker_low = 0;
    int whisker_high = 0;
    std::vector<int> outliers;
};

/// Nearest-rank percentile: the ceil(p/100 * N)-th smallest value.
int nearest_rank(std::vector<int> values, double percent);
StatSummary summarize(const std::vector<int>& values);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};
LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

enum class ExperimentKind { Scaling, Losses, Verify };

struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::Scaling;
    std::vector<int> sizes{4, 6, 8, 10, 12};
    std::vector<double> loss_probs{0.0, 0.1, 0.3, 0.5, 0.9};
    int instances = 30;
    std::uint64_t seed = 1;
    int max_rounds = 0;  // 0 selects default_max_rounds
    /// Losses: nominal graph size and ER edge probability.
    int nominal_n = 12;
    double nominal_p_edge = 0.3;
    /// Losses: required diameter of the nominal graph (searched by seed), if any.
    std::optional<int> nominal_diameter;
    /// Brute-force every converged run whose n does not exceed this.
    int oracle_max_n = 12;
    std::string out_path;
};

struct RunOutcome {
    std::uint64_t instance_seed = 0;
    bool converged = false;
    int rounds = 0;
    bool oracle_checked = false;
    bool oracle_match = true;
    bool binary_duals = true;
};

struct CellResult {
    int n = 0;
    double p_loss = 0.0;
    std::vector<RunOutcome> runs;
    StatSummary stats;  // over converged runs

    int converged() const;
    int mismatches() const;
};

struct ExperimentTable {
    ExperimentKind kind;
    std::vector<CellResult> cells;
    /// Losses: the nominal graph's diameter.
    int nominal_diameter = 0;

    int total_mismatches() const;
    /// Scaling: least-squares line through (n, median rounds).
    LineFit median_fit() const;
};

/// Deterministic per-run seed from the experiment seed and the cell/run index.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b);

ExperimentTable experiment_scaling(const ExperimentSpec& spec);
ExperimentTable experiment_losses(const ExperimentSpec& spec);

/// Box-plot CSV: n,p_loss,runs,converged,mismatches,median,q25,q75,whisker_low,whisker_high,outliers
void write_table_csv(std::ostream& out, const ExperimentTable& table);
/// One row per run: n,p_loss,instance_seed,converged,rounds,oracle_match
void write_runs_csv(std::ostream& out, const ExperimentTable& table);

enum class InstanceFamily { MinCut, Selection, ConcaveCut };

struct VerifyRecord {
    InstanceFamily family;
    int n;
    std::uint64_t seed;
    Rational brute;
    Rational centralized;
    std::optional<Rational> distributed;
    bool binary_duals;
    bool match() const;
};

struct VerifyReport {
    std::vector<VerifyRecord> records;
    int mismatches() const;
};

/// Oracle triangle: brute force vs. centralized column generation vs. a
/// distributed run on a cycle, over random instances cycling through the
/// families with n in [2, max_n].
VerifyReport verify_triangle(int count, int max_n, std::uint64_t seed, bool distributed);
SetFunctionPtr make_instance(InstanceFamily family, int n, std::uint64_t seed);
std::string family_name(InstanceFamily family);

}  // namespace discg
