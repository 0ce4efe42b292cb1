#include "annulus/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <numeric>

#include "annulus/analysis.hpp"
#include "annulus/errors.hpp"
#include "annulus/geometry.hpp"

namespace annulus {

namespace {

constexpr double kRootTol = 1e-9;

// f(t1) = 0 defines the upper pruning threshold offset.
double t1_residual(double t, double b) {
    return (2.0 * b + t) * std::log((2.0 * b + t) / (2.0 * b)) - t - 1.0;
}

// g(t2) = 0 defines the lower offset; the (2b - t) log(...) term vanishes at
// the right endpoint.
double t2_residual(double t, double b) {
    double rem = 2.0 * b - t;
    if (rem <= 0.0) return t - 1.0;
    return rem * std::log(rem / (2.0 * b)) + t - 1.0;
}

double bisect_increasing(double (*f)(double, double), double param, double lo, double hi) {
    for (int iter = 0; iter < 200 && hi - lo > kRootTol; ++iter) {
        double mid = 0.5 * (lo + hi);
        (f(mid, param) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Left side of the theta conditions: half of the divergence-style expression
// alpha log(alpha / s) + s - alpha evaluated at s = 2a - theta.
double theta_lhs(double alpha, double a, double theta) {
    double s = 2.0 * a - theta;
    return 0.5 * (alpha * std::log(alpha / s) + s - alpha);
}

}  // namespace

double solve_t1(double b) {
    if (b <= 0.0) throw DomainError("solve_t1: b must be > 0");
    double hi = 10.0 * b + 20.0;  // residual is positive here for every b
    return bisect_increasing(t1_residual, b, 0.0, hi);
}

std::optional<double> solve_t2(double b) {
    if (b <= 0.0) throw DomainError("solve_t2: b must be > 0");
    if (2.0 * b - 1.0 <= kRootTol) return std::nullopt;  // sup g = 2b - 1
    return bisect_increasing(t2_residual, b, 0.0, 2.0 * b);
}

RecoveryThresholds compute_thresholds(double a, double b) {
    if (b <= 0.0) throw DomainError("compute_thresholds: b must be > 0");
    if (a < 2.0 * b) throw DomainError("compute_thresholds: requires a >= 2b");

    RecoveryThresholds th;
    th.a = a;
    th.b = b;
    th.t1 = solve_t1(b);
    th.t2 = solve_t2(b);

    // theta1: largest theta in [0, 2a - 4b - 2 t1] with lhs > 1. The lhs is
    // strictly decreasing in theta and reaches 0 at the interval's right end.
    const double alpha1 = 4.0 * b + 2.0 * th.t1;
    const double theta1_max = 2.0 * a - 4.0 * b - 2.0 * th.t1;
    if (theta1_max <= 0.0 || theta_lhs(alpha1, a, 0.0) <= 1.0) {
        th.theta1 = 0.0;
    } else {
        double lo = 0.0, hi = theta1_max;  // lhs(lo) > 1 > lhs(hi)
        for (int iter = 0; iter < 200 && hi - lo > kRootTol; ++iter) {
            double mid = 0.5 * (lo + hi);
            (theta_lhs(alpha1, a, mid) > 1.0 ? lo : hi) = mid;
        }
        th.theta1 = 0.5 * (lo + hi);
    }

    // theta2: smallest theta in [max(2b, 2a - 4b + 2 t2), a] with lhs > 1;
    // the lhs is strictly increasing in theta here. theta2 = a when t2 is
    // absent or the set is empty (no long-edge band is retained).
    th.theta2 = a;
    if (th.t2) {
        const double alpha2 = 4.0 * b - 2.0 * *th.t2;
        const double theta2_min = std::max(2.0 * b, 2.0 * a - 4.0 * b + 2.0 * *th.t2);
        if (theta2_min <= a) {
            if (theta_lhs(alpha2, a, theta2_min) > 1.0) {
                th.theta2 = theta2_min;
            } else if (theta_lhs(alpha2, a, a) > 1.0) {
                double lo = theta2_min, hi = a;  // lhs(lo) <= 1 < lhs(hi)
                for (int iter = 0; iter < 200 && hi - lo > kRootTol; ++iter) {
                    double mid = 0.5 * (lo + hi);
                    (theta_lhs(alpha2, a, mid) > 1.0 ? hi : lo) = mid;
                }
                th.theta2 = 0.5 * (lo + hi);
            }
        }
    }

    th.e_s = 2.0 * b + th.t1;
    th.e_d = th.t2 ? std::max(2.0 * b - *th.t2, 0.0) : 0.0;
    return th;
}

bool recovery_guaranteed(const RecoveryThresholds& th) {
    if (th.a - th.theta2 + th.theta1 > 2.0) return true;
    return th.a - th.theta2 > 1.0 && th.a > 2.0;
}

bool recovery_guaranteed(double a, double b) { return recovery_guaranteed(compute_thresholds(a, b)); }

double min_a_for_recovery(double b) {
    if (b <= 0.0) throw DomainError("min_a_for_recovery: b must be > 0");
    double lo = 2.0 * b;
    if (recovery_guaranteed(lo, b)) return lo;
    double hi = std::max(4.0 * b, 4.0);
    while (!recovery_guaranteed(hi, b)) {
        hi *= 2.0;
        if (hi > 1e6) throw DomainError("min_a_for_recovery: no feasible a found");
    }
    while (hi - lo > 1e-3) {
        double mid = 0.5 * (lo + hi);
        (recovery_guaranteed(mid, b) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

double expected_common_neighbors(double x, double rs, double rd, std::uint64_t n,
                                 Relation relation) {
    if (!(rd >= 0.0 && rd < rs)) throw DomainError("expected_common_neighbors: need 0 <= rd < rs");
    double half = 0.5 * static_cast<double>(n);
    if (relation == Relation::same) {
        if (x < 0.0 || x > rs)
            throw DomainError("expected_common_neighbors: same-cluster x must lie in [0, rs]");
        double mean = (half - 2.0) * (2.0 * rs - x);
        if (x <= 2.0 * rd) mean += half * (2.0 * rd - x);
        return mean;
    }
    if (x < 0.0 || x > rd)
        throw DomainError("expected_common_neighbors: cross-cluster x must lie in [0, rd]");
    double p = rs > 2.0 * rd ? 2.0 * rd : std::min(rs + rd - x, 2.0 * rd);
    return (static_cast<double>(n) - 2.0) * p;
}

PartitionEval evaluate_partition(const Partition& pred, const Partition& truth) {
    if (pred.size() != truth.size()) throw DomainError("evaluate_partition: length mismatch");
    if (pred.empty()) return {1.0, true};
    std::uint64_t agree = 0;
    for (size_t i = 0; i < pred.size(); ++i)
        if (pred[i] == truth[i]) ++agree;
    std::uint64_t best = std::max<std::uint64_t>(agree, pred.size() - agree);
    PartitionEval eval;
    eval.accuracy = static_cast<double>(best) / static_cast<double>(pred.size());
    eval.exact = best == pred.size();
    return eval;
}

namespace detail {

namespace {

// Components of the redacted graph mapped onto 2 labels: the largest
// component seeds cluster 0, the second largest seeds cluster 1; the rest
// go, in decreasing size, to the cluster they share more original edges
// with (ties to cluster 0).
Partition components_to_partition(const Graph& original, const ComponentLabeling& comps) {
    const VertexId n = original.vertex_count();
    std::vector<std::vector<VertexId>> members(comps.count);
    for (VertexId u = 0; u < n; ++u) members[comps.labels[u]].push_back(u);

    std::vector<std::uint32_t> order(comps.count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (members[a].size() != members[b].size()) return members[a].size() > members[b].size();
        return a < b;  // component ids follow first-seen vertex order
    });

    std::vector<int> cluster_of_comp(comps.count, -1);
    Partition labels(n, 0);
    for (std::uint32_t rank = 0; rank < comps.count; ++rank) {
        std::uint32_t comp = order[rank];
        int cluster = 0;
        if (rank > 0) {
            // Count original edges from this component into each settled cluster.
            std::uint64_t to_zero = 0, to_one = 0;
            for (VertexId u : members[comp]) {
                for (VertexId v : original.neighbors(u)) {
                    int c = cluster_of_comp[comps.labels[v]];
                    if (c == 0) ++to_zero;
                    else if (c == 1) ++to_one;
                }
            }
            cluster = to_one > to_zero ? 1 : 0;
        }
        cluster_of_comp[comp] = cluster;
        for (VertexId u : members[comp]) labels[u] = static_cast<std::uint8_t>(cluster);
    }
    return labels;
}

}  // namespace

RecoveryOutcome prune_and_split(const Graph& g, double keep_high, double keep_low,
                                const Partition* truth) {
    const double high = std::ceil(keep_high);
    const double low = std::floor(keep_low);

    std::vector<Edge> kept;
    std::uint64_t removed = 0;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v : g.neighbors(u)) {
            if (u >= v) continue;
            double count = common_neighbor_count(g, u, v);
            if (count >= high || count <= low) kept.emplace_back(u, v);
            else ++removed;
        }
    }

    Graph redacted = Graph::from_edges(g.vertex_count(), std::move(kept));
    ComponentLabeling comps = connected_components(redacted);

    RecoveryOutcome out;
    out.partition = components_to_partition(g, comps);
    out.component_count = comps.count;
    out.removed_edges = removed;
    if (truth) {
        PartitionEval eval = evaluate_partition(out.partition, *truth);
        out.accuracy = eval.accuracy;
        out.exact = eval.exact;
    }
    return out;
}

}  // namespace detail

RecoveryOutcome recover_gbm_1d(const Graph& g, double a, double b, const Partition* truth) {
    RecoveryThresholds th = compute_thresholds(a, b);
    double log_n = std::log(static_cast<double>(g.vertex_count()));
    return detail::prune_and_split(g, th.e_s * log_n, th.e_d * log_n, truth);
}

std::pair<double, double> highdim_count_thresholds(std::uint64_t n, int t, double rs, double rd,
                                                   double c_s, double c_d) {
    if (!(rd >= 0.0 && rd < rs)) throw DomainError("highdim thresholds: need 0 <= rd < rs");
    double nn = static_cast<double>(n);
    double log_n = std::log(nn);
    double cap_d = cap_fraction(t, rd);
    double e_s = c_s * (cap_d * nn + std::sqrt(6.0 * cap_d * nn * log_n));
    double e_d = c_d * (nn * lens_fraction(t, rs, rd, rd) - std::sqrt(2.0 * nn * cap_d * log_n));
    return {e_s, e_d};
}

RecoveryOutcome recover_gbm_highdim(const Graph& g, int t, double rs, double rd, double c_s,
                                    double c_d, const Partition* truth) {
    auto [e_s, e_d] = highdim_count_thresholds(g.vertex_count(), t, rs, rd, c_s, c_d);
    return detail::prune_and_split(g, e_s, e_d, truth);
}

RecoveryOutcome recover_with_locations(const GeometricInstance& inst, double rs, double rd,
                                       const Partition* truth) {
    if (!inst.on_circle() || inst.model == Model::vrg_union)
        throw ModelError("recover_with_locations: requires a circle GBM instance");
    if (!(rd >= 0.0 && rd < rs && rs <= 0.5))
        throw DomainError("recover_with_locations: need 0 <= rd < rs <= 0.5");

    const VertexId n = inst.n();
    const auto& pos = inst.positions;

    // Collect informative pairs (distance in (rd, rs]) with a sorted sweep.
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](VertexId a, VertexId b) { return pos[a] < pos[b]; });
    std::vector<double> doubled(2 * static_cast<size_t>(n));
    for (VertexId k = 0; k < n; ++k) {
        doubled[k] = pos[order[k]];
        doubled[k + n] = pos[order[k]] + 1.0;
    }

    // Same-cluster constraints (informative pairs with an edge) go straight
    // into a union-find; must-differ constraints are kept for 2-coloring.
    std::vector<VertexId> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<VertexId(VertexId)> find = [&](VertexId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<Edge> differ;
    for (VertexId si = 0; si < n; ++si) {
        const VertexId u = order[si];
        auto hi_it = std::upper_bound(doubled.begin() + si + 1, doubled.end(),
                                      doubled[si] + rs + 1e-9);
        for (auto it = doubled.begin() + si + 1; it != hi_it; ++it) {
            const VertexId v = order[(it - doubled.begin()) % n];
            if (v == u) continue;
            double d = circle_distance(pos[u], pos[v]);
            if (!(d > rd && d <= rs)) continue;
            if (inst.graph.has_edge(u, v)) {
                parent[find(u)] = find(v);
            } else {
                differ.emplace_back(u, v);
            }
        }
    }

    // 2-color the contraction graph over must-differ constraints. Roots of
    // constraint components that stay unreached default to color 0, which is
    // the deterministic choice for ambiguous inputs.
    std::vector<std::vector<VertexId>> adj_roots;
    std::vector<std::uint32_t> root_id(n, UINT32_MAX);
    std::uint32_t comp_count = 0;
    for (VertexId u = 0; u < n; ++u) {
        VertexId r = find(u);
        if (root_id[r] == UINT32_MAX) {
            root_id[r] = comp_count++;
            adj_roots.emplace_back();
        }
    }
    std::vector<std::vector<std::uint32_t>> constraint_adj(comp_count);
    for (const auto& [u, v] : differ) {
        std::uint32_t cu = root_id[find(u)], cv = root_id[find(v)];
        if (cu == cv) throw InconsistencyError("recover_with_locations: contradictory constraints");
        constraint_adj[cu].push_back(cv);
        constraint_adj[cv].push_back(cu);
    }
    std::vector<int> color(comp_count, -1);
    for (std::uint32_t start = 0; start < comp_count; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::deque<std::uint32_t> queue{start};
        while (!queue.empty()) {
            std::uint32_t c = queue.front();
            queue.pop_front();
            for (std::uint32_t d : constraint_adj[c]) {
                if (color[d] == -1) {
                    color[d] = 1 - color[c];
                    queue.push_back(d);
                } else if (color[d] == color[c]) {
                    throw InconsistencyError("recover_with_locations: odd constraint cycle");
                }
            }
        }
    }

    RecoveryOutcome out;
    out.partition.resize(n);
    for (VertexId u = 0; u < n; ++u)
        out.partition[u] = static_cast<std::uint8_t>(color[root_id[find(u)]]);
    out.component_count = comp_count;
    out.removed_edges = 0;
    if (truth) {
        PartitionEval eval = evaluate_partition(out.partition, *truth);
        out.accuracy = eval.accuracy;
        out.exact = eval.exact;
    }
    return out;
}

}  // namespace annulus
