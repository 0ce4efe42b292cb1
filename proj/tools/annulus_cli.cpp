// Command-line front end: instance generation and serialization, regime
// predicates, recovery threshold tables, cluster recovery, and seeded
// Monte-Carlo sweeps over parameter grids.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "annulus/analysis.hpp"
#include "annulus/errors.hpp"
#include "annulus/generators.hpp"
#include "annulus/io.hpp"
#include "annulus/recovery.hpp"
#include "annulus/sweep.hpp"

namespace {

using namespace annulus;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct GenerateArgs {
    std::string model;
    std::uint64_t n = 0;
    int t = 1;
    double a = 0.0, b = 0.0, c = 0.0;
    std::uint64_t seed = 0;
    bool absolute = false;
    std::string out;
    std::string edge_list;
};

double radius_for(double x, const GenerateArgs& args, int t) {
    return args.absolute ? x : scaled_radius(x, args.n, t);
}

int cmd_generate(const GenerateArgs& args) {
    Model model = model_from_name(args.model);
    const auto n = static_cast<VertexId>(args.n);
    GeometricInstance inst;
    switch (model) {
        case Model::vrg:
            inst = gen_vrg(n, radius_for(args.b, args, 1), radius_for(args.a, args, 1), args.seed);
            break;
        case Model::rag:
            inst = gen_rag(n, args.t, radius_for(args.b, args, args.t),
                           radius_for(args.a, args, args.t), args.seed);
            break;
        case Model::gbm:
            inst = gen_gbm(n, radius_for(args.a, args, 1), radius_for(args.b, args, 1), args.seed);
            break;
        case Model::gbmt:
            inst = gen_gbm_t(n, args.t, radius_for(args.a, args, args.t),
                             radius_for(args.b, args, args.t), args.seed);
            break;
        case Model::vrg_union:
            inst = gen_vrg_union(n, radius_for(args.c, args, 1), radius_for(args.b, args, 1),
                                 radius_for(args.a, args, 1), args.seed);
            break;
    }
    write_instance_file(inst, args.out);
    if (!args.edge_list.empty()) {
        std::ofstream out(args.edge_list, std::ios::binary);
        if (!out) throw std::ios_base::failure("cannot open for writing: " + args.edge_list);
        write_edge_list(inst.graph, out);
        if (!out) throw std::ios_base::failure("write failed: " + args.edge_list);
    }
    std::cout << "n=" << inst.n() << " m=" << inst.graph.edge_count() << " seed=" << inst.seed
              << "\n";
    return kExitOk;
}

int cmd_thresholds(const std::vector<double>& b_values, bool csv) {
    if (csv) std::cout << "b,t1,t2,min_a\n";
    for (double b : b_values) {
        if (b <= 0.0) throw DomainError("thresholds: b must be > 0");
        double t1 = solve_t1(b);
        std::optional<double> t2 = solve_t2(b);
        double min_a = min_a_for_recovery(b);
        const char* sep = csv ? "," : "  ";
        std::cout << format_g9(b) << sep << format_g9(t1) << sep
                  << (t2 ? format_g9(*t2) : std::string(csv ? "" : "-")) << sep << format_g9(min_a)
                  << "\n";
    }
    return kExitOk;
}

int cmd_sweep(const std::string& config_path, const std::string& out_path,
              const std::string& summary_path, unsigned threads) {
    std::ifstream config_in(config_path, std::ios::binary);
    if (!config_in) throw std::ios_base::failure("cannot open config: " + config_path);
    SweepConfig config = parse_sweep_config(config_in);

    std::vector<TrialRecord> records = run_sweep(config, threads);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open for writing: " + out_path);
    write_sweep_csv(records, out);
    if (!out) throw std::ios_base::failure("write failed: " + out_path);

    if (!summary_path.empty()) {
        std::ofstream summary(summary_path, std::ios::binary);
        if (!summary) throw std::ios_base::failure("cannot open for writing: " + summary_path);
        write_summary_csv(records, summary);
        if (!summary) throw std::ios_base::failure("write failed: " + summary_path);
    }
    std::cout << "rows=" << records.size() << "\n";
    return kExitOk;
}

int cmd_recover(const std::string& in_path, const std::string& mode, const std::string& out_path,
                double c_s, double c_d) {
    GeometricInstance inst = read_instance_file(in_path);
    const Partition* truth = inst.truth ? &*inst.truth : nullptr;

    RecoveryOutcome outcome;
    if (mode == "triangle") {
        if (inst.model == Model::gbm) {
            const auto& params = std::get<GbmParams>(inst.params);
            double log_ratio = std::log(static_cast<double>(inst.n())) / inst.n();
            outcome = recover_gbm_1d(inst.graph, params.rs / log_ratio, params.rd / log_ratio, truth);
        } else if (inst.model == Model::gbmt) {
            const auto& params = std::get<GbmParams>(inst.params);
            outcome = recover_gbm_highdim(inst.graph, inst.dim_t, params.rs, params.rd, c_s, c_d,
                                          truth);
        } else {
            throw ModelError("recover: triangle mode requires a gbm or gbmt instance");
        }
    } else if (mode == "with-locations") {
        if (inst.model != Model::gbm)
            throw ModelError("recover: with-locations mode requires a gbm instance");
        const auto& params = std::get<GbmParams>(inst.params);
        outcome = recover_with_locations(inst, params.rs, params.rd, truth);
    } else {
        throw DomainError("recover: unknown mode " + mode);
    }

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::ios_base::failure("cannot open for writing: " + out_path);
        for (std::uint8_t label : outcome.partition) out << static_cast<int>(label) << '\n';
        if (!out) throw std::ios_base::failure("write failed: " + out_path);
    } else {
        for (std::uint8_t label : outcome.partition) std::cout << static_cast<int>(label) << '\n';
    }

    std::cout << "components=" << outcome.component_count
              << " removed_edges=" << outcome.removed_edges << "\n";
    if (outcome.accuracy)
        std::cout << "accuracy=" << format_g9(*outcome.accuracy)
                  << " exact=" << (outcome.exact ? "true" : "false") << "\n";
    return kExitOk;
}

int cmd_regime(const std::string& selector, double a, double b, double c, int t) {
    if (selector == "vrg") {
        RegimeVerdict v = predicted_vrg_connectivity(a, b);
        std::cout << verdict_name(v.verdict) << " margin=" << format_g9(v.margin) << "\n";
    } else if (selector == "rag-isolated") {
        RegimeVerdict v = predicted_isolated_rag(t, a, b);
        std::cout << verdict_name(v.verdict) << " margin=" << format_g9(v.margin) << "\n";
    } else if (selector == "rag-connect") {
        bool ok = rag_connectivity_sufficient(t, a, b);
        double pow_term = std::pow(2.0, 1.0 + 1.0 / t);
        double required = 8.0 * (t + 1) * psi(t) / (1.0 - 1.0 / (pow_term - 1.0));
        double margin = std::min(std::pow(a, t) - std::pow(b, t) - required, a - pow_term * b);
        std::cout << (ok ? "Sufficient" : "NotSufficient") << " margin=" << format_g9(margin)
                  << "\n";
    } else if (selector == "vrg-union") {
        bool ok = vrg_union_connectivity_sufficient(c, b, a);
        std::cout << (ok ? "Sufficient" : "NotSufficient") << "\n";
    } else {
        throw DomainError("regime: unknown selector " + selector);
    }
    return kExitOk;
}

int cmd_analyze(const std::string& in_path) {
    GeometricInstance inst = read_instance_file(in_path);
    const Graph& g = inst.graph;
    ComponentLabeling comps = connected_components(g);
    std::uint64_t deg_min = UINT64_MAX, deg_max = 0, deg_sum = 0;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        std::uint64_t d = g.degree(u);
        deg_min = std::min(deg_min, d);
        deg_max = std::max(deg_max, d);
        deg_sum += d;
    }
    if (g.vertex_count() == 0) deg_min = 0;
    std::cout << "model=" << model_name(inst.model) << " n=" << g.vertex_count()
              << " m=" << g.edge_count() << "\n";
    std::cout << "components=" << comps.count << " isolated=" << count_isolated(g) << "\n";
    std::cout << "degree_min=" << deg_min << " degree_mean="
              << format_g9(g.vertex_count() ? static_cast<double>(deg_sum) / g.vertex_count() : 0.0)
              << " degree_max=" << deg_max << "\n";
    if (inst.on_circle()) std::cout << "no_left_neighbor=" << count_no_left_neighbor(inst) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random annulus graph and geometric block model toolkit"};
    app.require_subcommand(1);

    GenerateArgs gen_args;
    CLI::App* generate = app.add_subcommand("generate", "Generate an instance and write it to JSON");
    generate->add_option("--model", gen_args.model, "vrg|rag|gbm|gbmt|vrg-union")->required();
    generate->add_option("--n", gen_args.n, "vertex count")->required();
    generate->add_option("--t", gen_args.t, "sphere dimension (rag/gbmt)");
    generate->add_option("--a", gen_args.a, "outer scaled parameter (r2/rs/ra)")->required();
    generate->add_option("--b", gen_args.b, "inner scaled parameter (r1/rd/rb)");
    generate->add_option("--c", gen_args.c, "short-window parameter (vrg-union)");
    generate->add_option("--seed", gen_args.seed, "64-bit seed")->required();
    generate->add_flag("--absolute-radii", gen_args.absolute,
                       "treat a/b/c as absolute radii instead of multiples of (log n / n)^(1/t)");
    generate->add_option("--out", gen_args.out, "instance JSON path")->required();
    generate->add_option("--edge-list", gen_args.edge_list, "also write an edge-list text file");

    std::vector<double> b_values;
    bool thresholds_csv = false;
    CLI::App* thresholds =
        app.add_subcommand("thresholds", "Solve t1/t2 and the minimum recoverable a per b");
    thresholds->add_option("--b", b_values, "b values")->required()->delimiter(',');
    thresholds->add_flag("--csv", thresholds_csv, "emit CSV");

    std::string sweep_config, sweep_out, sweep_summary;
    unsigned sweep_threads = 0;
    CLI::App* sweep = app.add_subcommand("sweep", "Run a Monte-Carlo sweep from a JSON config");
    sweep->add_option("--config", sweep_config, "sweep config JSON")->required();
    sweep->add_option("--out", sweep_out, "per-trial CSV path")->required();
    sweep->add_option("--summary", sweep_summary, "per-grid-point summary CSV path");
    sweep->add_option("--threads", sweep_threads, "worker threads (0 = hardware)");

    std::string recover_in, recover_mode = "triangle", recover_out;
    double recover_cs = 1.0, recover_cd = 1.0;
    CLI::App* recover = app.add_subcommand("recover", "Recover the partition of a GBM instance");
    recover->add_option("--in", recover_in, "instance JSON path")->required();
    recover->add_option("--mode", recover_mode, "triangle|with-locations");
    recover->add_option("--out", recover_out, "labels output path (stdout when omitted)");
    recover->add_option("--cs", recover_cs, "high-dim E_S constant");
    recover->add_option("--cd", recover_cd, "high-dim E_D constant");

    std::string regime_selector;
    double regime_a = 0.0, regime_b = 0.0, regime_c = 0.0;
    int regime_t = 1;
    CLI::App* regime = app.add_subcommand("regime", "Evaluate a connectivity regime predicate");
    regime->add_option("selector", regime_selector, "vrg|rag-isolated|rag-connect|vrg-union")
        ->required();
    regime->add_option("--a", regime_a)->required();
    regime->add_option("--b", regime_b);
    regime->add_option("--c", regime_c);
    regime->add_option("--t", regime_t);

    std::string analyze_in;
    CLI::App* analyze = app.add_subcommand("analyze", "Structural stats of an instance file");
    analyze->add_option("--in", analyze_in, "instance JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (generate->parsed()) return cmd_generate(gen_args);
        if (thresholds->parsed()) return cmd_thresholds(b_values, thresholds_csv);
        if (sweep->parsed()) return cmd_sweep(sweep_config, sweep_out, sweep_summary, sweep_threads);
        if (recover->parsed())
            return cmd_recover(recover_in, recover_mode, recover_out, recover_cs, recover_cd);
        if (regime->parsed())
            return cmd_regime(regime_selector, regime_a, regime_b, regime_c, regime_t);
        if (analyze->parsed()) return cmd_analyze(analyze_in);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InconsistencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
