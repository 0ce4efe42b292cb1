#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "annulus/generators.hpp"
#include "annulus/graph.hpp"

namespace annulus {

// Solved pruning thresholds for the triangle-count algorithm, in units of
// log n / n. e_s > e_d always; theta2 = a encodes an empty long-edge band
// and e_d = 0 encodes an absent t2 (2b <= 1).
struct RecoveryThresholds {
    double a = 0.0;
    double b = 0.0;
    double t1 = 0.0;
    std::optional<double> t2;
    double theta1 = 0.0;
    double theta2 = 0.0;
    double e_s = 0.0;
    double e_d = 0.0;
};

// Root of f(t) = (2b + t) log((2b + t) / 2b) - t - 1; f is strictly
// increasing from f(0+) = -1.
double solve_t1(double b);

// Root of g(t) = (2b - t) log((2b - t) / 2b) + t - 1 on (0, 2b); absent when
// 2b <= 1 (sup g = 2b - 1).
std::optional<double> solve_t2(double b);

RecoveryThresholds compute_thresholds(double a, double b);

// The sufficient recovery condition: a - theta2 + theta1 > 2, or
// a - theta2 > 1 and a > 2.
bool recovery_guaranteed(double a, double b);
bool recovery_guaranteed(const RecoveryThresholds& th);

// Smallest a >= 2b for which recovery_guaranteed holds, to 1e-3.
double min_a_for_recovery(double b);

enum class Relation { same, different };

// Mean common-neighbor count of an edge (u, v) at distance x, conditioned on
// whether u and v share a cluster, for GBM(rs, rd) with balanced clusters.
double expected_common_neighbors(double x, double rs, double rd, std::uint64_t n,
                                 Relation relation);

struct PartitionEval {
    double accuracy = 0.0;  // best agreement over the two label mappings
    bool exact = false;
};

PartitionEval evaluate_partition(const Partition& pred, const Partition& truth);

struct RecoveryOutcome {
    Partition partition;
    std::uint32_t component_count = 0;  // components of the redacted graph
    std::uint64_t removed_edges = 0;
    std::optional<double> accuracy;  // set when truth is supplied
    bool exact = false;
};

// Triangle-count pruning for the 1-D GBM with scaled parameters (a, b):
// keeps an edge iff its common-neighbor count is >= (2b + t1) log n or
// <= (2b - t2) log n, then maps the components of the redacted graph to a
// 2-partition.
RecoveryOutcome recover_gbm_1d(const Graph& g, double a, double b,
                               const Partition* truth = nullptr);

// Same pruning skeleton for GBM_t with absolute count thresholds
//   E_S = c_s (B_t(rd) n + sqrt(6 B_t(rd) n log n))
//   E_D = c_d (n V_t(rs, rd, rd) - sqrt(2 n B_t(rd) log n)).
RecoveryOutcome recover_gbm_highdim(const Graph& g, int t, double rs, double rd,
                                    double c_s = 1.0, double c_d = 1.0,
                                    const Partition* truth = nullptr);

// The absolute count thresholds used by recover_gbm_highdim, exposed for
// direct verification.
std::pair<double, double> highdim_count_thresholds(std::uint64_t n, int t, double rs, double rd,
                                                   double c_s = 1.0, double c_d = 1.0);

// Location-aware recovery: pairs at distance in (rd, rs] are informative
// (edge means same cluster, non-edge means different); propagates both
// constraint kinds and 2-colors the result. Throws InconsistencyError only
// on contradictory constraints, which genuine GBM input cannot produce.
RecoveryOutcome recover_with_locations(const GeometricInstance& inst, double rs, double rd,
                                       const Partition* truth = nullptr);

namespace detail {

// Shared pruning core: keeps an edge iff count >= ceil(keep_high) or
// count <= floor(keep_low).
RecoveryOutcome prune_and_split(const Graph& g, double keep_high, double keep_low,
                                const Partition* truth);

}  // namespace detail

}  // namespace annulus
