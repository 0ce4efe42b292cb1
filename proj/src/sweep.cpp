#include "annulus/sweep.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "annulus/analysis.hpp"
#include "annulus/errors.hpp"
#include "annulus/io.hpp"
#include "annulus/recovery.hpp"

namespace annulus {

using nlohmann::json;

const char* measure_name(Measure m) {
    switch (m) {
        case Measure::connectivity: return "connectivity";
        case Measure::isolated_count: return "isolated_count";
        case Measure::recovery: return "recovery";
        case Measure::no_left_neighbor: return "no_left_neighbor";
    }
    return "?";
}

Measure measure_from_name(const std::string& name) {
    if (name == "connectivity") return Measure::connectivity;
    if (name == "isolated_count") return Measure::isolated_count;
    if (name == "recovery") return Measure::recovery;
    if (name == "no_left_neighbor") return Measure::no_left_neighbor;
    throw FormatError("unknown measure: " + name);
}

std::string format_g9(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

SweepConfig parse_sweep_config(std::istream& in) {
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw FormatError(std::string("sweep config parse error: ") + e.what());
    }
    try {
        SweepConfig config;
        config.model = model_from_name(doc.at("model").get<std::string>());
        const json& grid = doc.at("grid");
        config.a = grid.at("a").get<std::vector<double>>();
        config.b = grid.at("b").get<std::vector<double>>();
        if (grid.contains("c")) config.c = grid.at("c").get<std::vector<double>>();
        if (grid.contains("t")) config.t = grid.at("t").get<std::vector<int>>();
        config.n = grid.at("n").get<std::vector<std::uint64_t>>();
        config.trials = doc.at("trials").get<std::uint32_t>();
        config.master_seed = doc.at("master_seed").get<std::uint64_t>();
        config.measure = measure_from_name(doc.at("measure").get<std::string>());
        if (doc.contains("c_s")) config.c_s = doc.at("c_s").get<double>();
        if (doc.contains("c_d")) config.c_d = doc.at("c_d").get<double>();
        validate_config(config);
        return config;
    } catch (const json::exception& e) {
        throw FormatError(std::string("sweep config structure error: ") + e.what());
    }
}

void validate_config(const SweepConfig& config) {
    if (config.trials < 1) throw DomainError("sweep: trials must be >= 1");
    if (config.a.empty() || config.b.empty() || config.n.empty() || config.t.empty() ||
        config.c.empty())
        throw DomainError("sweep: grid lists must be nonempty");

    const bool circle =
        config.model == Model::vrg || config.model == Model::gbm || config.model == Model::vrg_union;
    if (circle)
        for (int t : config.t)
            if (t != 1) throw DomainError("sweep: circle models require t = 1");
    if (config.model != Model::vrg_union && (config.c.size() != 1 || config.c[0] != 0.0))
        throw DomainError("sweep: grid.c applies only to vrg-union");
    if (config.measure == Measure::recovery &&
        !(config.model == Model::gbm || config.model == Model::gbmt))
        throw DomainError("sweep: recovery measure requires gbm or gbmt");
    if (config.measure == Measure::no_left_neighbor && !circle)
        throw DomainError("sweep: no_left_neighbor measure requires a circle model");

    for (std::uint64_t n : config.n) {
        if (n < 1) throw DomainError("sweep: n must be >= 1");
        for (int t : config.t) {
            for (double a : config.a) {
                double r_a = scaled_radius(a, n, t);
                double cap = circle ? 0.5 : 2.0;
                if (r_a > cap) throw DomainError("sweep: scaled outer radius exceeds the metric bound");
                for (double b : config.b) {
                    if (b < 0.0 || b > a) throw DomainError("sweep: need 0 <= b <= a");
                    if ((config.model == Model::gbm || config.model == Model::gbmt) && !(b < a))
                        throw DomainError("sweep: gbm needs b < a");
                    if (config.measure == Measure::recovery && config.model == Model::gbm &&
                        a < 2.0 * b)
                        throw DomainError("sweep: 1-d recovery requires a >= 2b");
                    if (config.model == Model::vrg_union)
                        for (double c : config.c)
                            if (!(c > 0.0 && c < b)) throw DomainError("sweep: need 0 < c < b");
                }
            }
            if ((config.model == Model::gbm || config.model == Model::gbmt) && n % 2 != 0)
                throw DomainError("sweep: gbm needs even n");
        }
    }
}

std::uint64_t derive_trial_seed(std::uint64_t master_seed, Model model, const GridPoint& point,
                                std::uint32_t trial_index) {
    RandomStream stream = derive_stream(
        master_seed,
        {static_cast<std::uint64_t>(model), std::bit_cast<std::uint64_t>(point.a),
         std::bit_cast<std::uint64_t>(point.b), std::bit_cast<std::uint64_t>(point.c),
         static_cast<std::uint64_t>(point.t), point.n, trial_index});
    return stream.state();
}

std::vector<GridPoint> grid_points(const SweepConfig& config) {
    std::vector<GridPoint> points;
    for (std::uint64_t n : config.n)
        for (int t : config.t)
            for (double a : config.a)
                for (double b : config.b)
                    for (double c : config.c) points.push_back({a, b, c, t, n});
    return points;
}

TrialRecord run_trial(const SweepConfig& config, const GridPoint& point,
                      std::uint32_t trial_index) {
    TrialRecord rec;
    rec.point = point;
    rec.trial_index = trial_index;
    rec.seed_used = derive_trial_seed(config.master_seed, config.model, point, trial_index);

    auto start = std::chrono::steady_clock::now();
    const auto n = static_cast<VertexId>(point.n);
    const int t = point.t;

    GeometricInstance inst;
    switch (config.model) {
        case Model::vrg:
            inst = gen_vrg(n, scaled_radius(point.b, point.n, 1), scaled_radius(point.a, point.n, 1),
                           rec.seed_used);
            break;
        case Model::rag:
            inst = gen_rag(n, t, scaled_radius(point.b, point.n, t),
                           scaled_radius(point.a, point.n, t), rec.seed_used);
            break;
        case Model::gbm:
            inst = gen_gbm(n, scaled_radius(point.a, point.n, 1), scaled_radius(point.b, point.n, 1),
                           rec.seed_used);
            break;
        case Model::gbmt:
            inst = gen_gbm_t(n, t, scaled_radius(point.a, point.n, t),
                             scaled_radius(point.b, point.n, t), rec.seed_used);
            break;
        case Model::vrg_union:
            inst = gen_vrg_union(n, scaled_radius(point.c, point.n, 1),
                                 scaled_radius(point.b, point.n, 1),
                                 scaled_radius(point.a, point.n, 1), rec.seed_used);
            break;
    }

    switch (config.measure) {
        case Measure::connectivity:
        case Measure::isolated_count: {
            ComponentLabeling comps = connected_components(inst.graph);
            rec.components = comps.count;
            rec.connected = comps.count == 1;
            rec.isolated = count_isolated(inst.graph);
            break;
        }
        case Measure::no_left_neighbor: {
            rec.no_left = count_no_left_neighbor(inst);
            rec.isolated = count_isolated(inst.graph);
            break;
        }
        case Measure::recovery: {
            RecoveryOutcome outcome;
            const Partition* truth = inst.truth ? &*inst.truth : nullptr;
            if (config.model == Model::gbm) {
                outcome = recover_gbm_1d(inst.graph, point.a, point.b, truth);
            } else {
                const auto& params = std::get<GbmParams>(inst.params);
                outcome = recover_gbm_highdim(inst.graph, t, params.rs, params.rd, config.c_s,
                                              config.c_d, truth);
            }
            rec.components = outcome.component_count;
            if (outcome.accuracy) {
                rec.accuracy = outcome.accuracy;
                rec.exact = outcome.exact;
            }
            rec.removed_edges = outcome.removed_edges;
            break;
        }
    }

    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                      .count();
    return rec;
}

std::vector<TrialRecord> run_sweep(const SweepConfig& config, unsigned threads) {
    validate_config(config);
    const std::vector<GridPoint> points = grid_points(config);
    const size_t total = points.size() * config.trials;
    std::vector<TrialRecord> records(total);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<size_t>(threads, total));

    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&]() {
            for (size_t job = next.fetch_add(1); job < total; job = next.fetch_add(1)) {
                const size_t point_index = job / config.trials;
                const auto trial = static_cast<std::uint32_t>(job % config.trials);
                records[job] = run_trial(config, points[point_index], trial);
            }
        });
    }
    for (auto& th : pool) th.join();
    return records;
}

namespace {

std::string opt_cell(const std::optional<double>& v) { return v ? format_g9(*v) : ""; }
std::string opt_cell(const std::optional<bool>& v) { return v ? (*v ? "1" : "0") : ""; }
template <typename T>
std::string opt_cell(const std::optional<T>& v) {
    return v ? std::to_string(*v) : "";
}

}  // namespace

void write_sweep_csv(const std::vector<TrialRecord>& records, std::ostream& out) {
    out << "# annulus sweep csv v1\n";
    out << "a,b,c,t,n,trial,seed,connected,isolated,components,no_left,accuracy,exact,"
           "removed_edges\n";
    for (const TrialRecord& r : records) {
        out << format_g9(r.point.a) << ',' << format_g9(r.point.b) << ',' << format_g9(r.point.c)
            << ',' << r.point.t << ',' << r.point.n << ',' << r.trial_index << ',' << r.seed_used
            << ',' << opt_cell(r.connected) << ',' << opt_cell(r.isolated) << ','
            << opt_cell(r.components) << ',' << opt_cell(r.no_left) << ',' << opt_cell(r.accuracy)
            << ',' << opt_cell(r.exact) << ',' << opt_cell(r.removed_edges) << '\n';
    }
}

void write_summary_csv(const std::vector<TrialRecord>& records, std::ostream& out) {
    out << "# annulus sweep summary v1\n";
    out << "a,b,c,t,n,trials,connected_frac,mean_isolated,mean_components,mean_no_left,"
           "mean_accuracy,exact_frac,mean_removed_edges\n";
    size_t i = 0;
    while (i < records.size()) {
        size_t j = i;
        const GridPoint& p = records[i].point;
        auto same_point = [&](const TrialRecord& r) {
            return r.point.a == p.a && r.point.b == p.b && r.point.c == p.c && r.point.t == p.t &&
                   r.point.n == p.n;
        };
        double connected = 0, isolated = 0, components = 0, no_left = 0, accuracy = 0, exact = 0,
               removed = 0;
        size_t n_conn = 0, n_iso = 0, n_comp = 0, n_left = 0, n_acc = 0, n_exact = 0, n_rem = 0;
        for (; j < records.size() && same_point(records[j]); ++j) {
            const TrialRecord& r = records[j];
            if (r.connected) { connected += *r.connected; ++n_conn; }
            if (r.isolated) { isolated += static_cast<double>(*r.isolated); ++n_iso; }
            if (r.components) { components += *r.components; ++n_comp; }
            if (r.no_left) { no_left += static_cast<double>(*r.no_left); ++n_left; }
            if (r.accuracy) { accuracy += *r.accuracy; ++n_acc; }
            if (r.exact) { exact += *r.exact; ++n_exact; }
            if (r.removed_edges) { removed += static_cast<double>(*r.removed_edges); ++n_rem; }
        }
        auto mean_cell = [](double sum, size_t count) {
            return count == 0 ? std::string() : format_g9(sum / static_cast<double>(count));
        };
        size_t trials = j - i;
        out << format_g9(p.a) << ',' << format_g9(p.b) << ',' << format_g9(p.c) << ',' << p.t << ','
            << p.n << ',' << trials << ',' << mean_cell(connected, n_conn) << ','
            << mean_cell(isolated, n_iso) << ',' << mean_cell(components, n_comp) << ','
            << mean_cell(no_left, n_left) << ',' << mean_cell(accuracy, n_acc) << ','
            << mean_cell(exact, n_exact) << ',' << mean_cell(removed, n_rem) << '\n';
        i = j;
    }
}

}  // namespace annulus
