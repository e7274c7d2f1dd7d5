// Command-line front end: oracle verification, the two network experiments
// and single-instance solves.

#include "discg/bench.hpp"
#include "discg/errors.hpp"
#include "discg/instances.hpp"
#include "discg/netsim.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace discg;

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << text;
}

int report_table(const ExperimentTable& table, const ExperimentSpec& spec, const std::string& runs_path) {
    std::ostringstream csv;
    write_table_csv(csv, table);
    emit(spec.out_path, csv.str());
    if (!runs_path.empty()) {
        std::ostringstream runs;
        write_runs_csv(runs, table);
        emit(runs_path, runs.str());
    }
    if (table.kind == ExperimentKind::Scaling && table.cells.size() > 1) {
        const auto fit = table.median_fit();
        std::cerr << "median rounds ~ " << fit.slope << " * n + " << fit.intercept << '\n';
    } else if (table.kind == ExperimentKind::Losses) {
        std::cerr << "nominal graph diameter " << table.nominal_diameter << '\n';
    }
    const int bad = table.total_mismatches();
    if (bad > 0) std::cerr << bad << " converged run(s) disagree with the brute-force oracle\n";
    return bad > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distributed column generation for submodular minimization"};
    app.require_subcommand(1);

    ExperimentSpec spec;
    std::string runs_path;
    bool full_scale = false;

    auto* verify = app.add_subcommand("verify", "oracle triangle over random instances");
    int verify_count = 200;
    int verify_max_n = 8;
    bool verify_distributed = true;
    verify->add_option("--instances", verify_count, "number of random instances")->capture_default_str();
    verify->add_option("--max-n", verify_max_n, "largest ground set")->capture_default_str();
    verify->add_option("--seed", spec.seed)->capture_default_str();
    verify->add_flag("!--no-distributed", verify_distributed, "skip the distributed leg");
    verify->add_option("--out", spec.out_path, "CSV destination (stdout if omitted)");

    auto* scaling = app.add_subcommand("scaling", "convergence rounds on cycle graphs of growing size");
    scaling->add_option("--sizes", spec.sizes)->delimiter(',')->capture_default_str();
    scaling->add_option("--instances", spec.instances)->capture_default_str();
    scaling->add_option("--seed", spec.seed)->capture_default_str();
    scaling->add_option("--max-rounds", spec.max_rounds, "0 = 50 n")->capture_default_str();
    scaling->add_option("--out", spec.out_path, "box-plot CSV destination (stdout if omitted)");
    scaling->add_option("--runs-out", runs_path, "per-run CSV destination");
    scaling->add_flag("--full-scale", full_scale, "sizes 8,16,..,48 with 100 instances each");

    auto* losses = app.add_subcommand("losses", "convergence rounds under packet loss on a fixed random graph");
    losses->add_option("--loss-probs", spec.loss_probs)->delimiter(',')->capture_default_str();
    losses->add_option("--instances", spec.instances)->capture_default_str();
    losses->add_option("--seed", spec.seed)->capture_default_str();
    losses->add_option("--max-rounds", spec.max_rounds, "0 = 50 n / (1 - p)")->capture_default_str();
    losses->add_option("--nodes", spec.nominal_n, "nominal graph size")->capture_default_str();
    losses->add_option("--edge-prob", spec.nominal_p_edge, "nominal graph edge probability")->capture_default_str();
    losses->add_option("--out", spec.out_path, "box-plot CSV destination (stdout if omitted)");
    losses->add_option("--runs-out", runs_path, "per-run CSV destination");
    losses->add_flag("--full-scale", full_scale, "48 nodes, nominal diameter 9, 100 instances");

    auto* solve = app.add_subcommand("solve", "run the distributed algorithm on one instance file");
    std::string instance_path;
    std::string graph_kind = "cycle";
    double loss = 0.0;
    solve->add_option("instance", instance_path, "instance file")->required();
    solve->add_option("--graph", graph_kind, "cycle | complete | er")->capture_default_str();
    solve->add_option("--loss", loss, "packet loss probability")->capture_default_str();
    solve->add_option("--seed", spec.seed)->capture_default_str();
    solve->add_option("--max-rounds", spec.max_rounds)->capture_default_str();
    solve->add_option("--out", spec.out_path, "trace CSV destination");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            const auto report = verify_triangle(verify_count, verify_max_n, spec.seed, verify_distributed);
            std::ostringstream csv;
            csv << "family,n,seed,brute,centralized,distributed,match\n";
            for (const auto& r : report.records)
                csv << family_name(r.family) << ',' << r.n << ',' << r.seed << ',' << r.brute.str() << ','
                    << r.centralized.str() << ',' << (r.distributed ? r.distributed->str() : "-") << ','
                    << (r.match() ? 1 : 0) << '\n';
            emit(spec.out_path, csv.str());
            std::cerr << report.records.size() - report.mismatches() << '/' << report.records.size()
                      << " instances agree\n";
            return report.mismatches() > 0 ? 1 : 0;
        }
        if (*scaling) {
            spec.kind = ExperimentKind::Scaling;
            if (full_scale) {
                spec.sizes = {8, 16, 24, 32, 40, 48};
                spec.instances = 100;
            }
            return report_table(experiment_scaling(spec), spec, runs_path);
        }
        if (*losses) {
            spec.kind = ExperimentKind::Losses;
            if (full_scale) {
                spec.nominal_n = 48;
                spec.nominal_p_edge = 0.06;
                spec.nominal_diameter = 9;
                spec.instances = 100;
            }
            return report_table(experiment_losses(spec), spec, runs_path);
        }
        if (*solve) {
            std::ifstream in(instance_path);
            if (!in) throw Error("cannot open '" + instance_path + "'");
            const auto f = read_instance(in);
            const int n = f->size();
            GraphProcess graph = graph_kind == "complete" ? make_complete(n)
                                 : graph_kind == "er"     ? make_fixed_er(std::max(n, 2), 0.3, spec.seed)
                                                          : make_cycle(n);
            RunConfig config{f, graph, LossModel{loss, spec.seed}, spec.max_rounds, spec.seed, instance_path};
            const auto trace = run(config);
            std::cout << summary_json(trace) << '\n';
            if (!spec.out_path.empty()) {
                std::ostringstream csv;
                write_trace_csv(csv, trace);
                emit(spec.out_path, csv.str());
            }
            return 0;
        }
    } catch (const NonConvergence& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
