#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "annulus/generators.hpp"

namespace annulus {

enum class Measure { connectivity, isolated_count, recovery, no_left_neighbor };

const char* measure_name(Measure m);
Measure measure_from_name(const std::string& name);

// Parameter grid for seeded Monte-Carlo trials. Grid points are visited in
// canonical order: n, then t, then a, then b, then c, each in list order.
struct SweepConfig {
    Model model = Model::vrg;
    std::vector<double> a, b;
    std::vector<double> c = {0.0};  // vrg-union only
    std::vector<int> t = {1};
    std::vector<std::uint64_t> n;
    std::uint32_t trials = 1;
    std::uint64_t master_seed = 0;
    Measure measure = Measure::connectivity;
    double c_s = 1.0, c_d = 1.0;  // high-dimensional recovery constants
};

struct GridPoint {
    double a = 0.0, b = 0.0, c = 0.0;
    int t = 1;
    std::uint64_t n = 0;
};

struct TrialRecord {
    GridPoint point;
    std::uint32_t trial_index = 0;
    std::uint64_t seed_used = 0;
    std::optional<bool> connected;
    std::optional<std::uint64_t> isolated;
    std::optional<std::uint32_t> components;
    std::optional<std::uint64_t> no_left;
    std::optional<double> accuracy;
    std::optional<bool> exact;
    std::optional<std::uint64_t> removed_edges;
    double wall_ms = 0.0;  // informational; not part of the CSV contract
};

SweepConfig parse_sweep_config(std::istream& in);
void validate_config(const SweepConfig& config);

// seed_used = fold of (model tag, a bits, b bits, c bits, t, n, trial_index)
// through the mix64 chain seeded by master_seed.
std::uint64_t derive_trial_seed(std::uint64_t master_seed, Model model, const GridPoint& point,
                                std::uint32_t trial_index);

// Runs one trial in isolation; sweep rows replay through this.
TrialRecord run_trial(const SweepConfig& config, const GridPoint& point,
                      std::uint32_t trial_index);

std::vector<GridPoint> grid_points(const SweepConfig& config);

// Executes all trials (worker pool of `threads`, 0 = hardware concurrency);
// records are returned in canonical order regardless of scheduling.
std::vector<TrialRecord> run_sweep(const SweepConfig& config, unsigned threads = 0);

// Fixed column order, floats with 9 significant digits.
void write_sweep_csv(const std::vector<TrialRecord>& records, std::ostream& out);
void write_summary_csv(const std::vector<TrialRecord>& records, std::ostream& out);

// %.9g formatting used for every float that reaches a CSV or report.
std::string format_g9(double x);

}  // namespace annulus
