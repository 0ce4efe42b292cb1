#include "annulus/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "annulus/errors.hpp"

namespace annulus {

namespace {

// Padding for candidate windows: wide enough to absorb floating-point
// rounding at the window boundaries, narrow enough to stay cheap. The exact
// distance predicate makes the final call on every candidate.
constexpr double kWindowPad = 1e-9;

std::vector<double> sample_circle_positions(VertexId n, std::uint64_t seed) {
    std::vector<double> positions(n);
    for (VertexId i = 0; i < n; ++i) {
        RandomStream s = derive_stream(seed, {i});
        positions[i] = s.next_double();
    }
    return positions;
}

std::vector<double> sample_sphere_positions(VertexId n, int t, std::uint64_t seed) {
    std::vector<double> positions(static_cast<size_t>(n) * (t + 1));
    for (VertexId i = 0; i < n; ++i) {
        RandomStream s = derive_stream(seed, {i});
        sample_sphere_coords(t, s, positions.data() + static_cast<size_t>(i) * (t + 1));
    }
    return positions;
}

void validate_circle_positions(const std::vector<double>& positions, VertexId n) {
    if (positions.size() != n) throw DomainError("positions size must equal n");
    for (double x : positions)
        if (!(x >= 0.0 && x < 1.0)) throw DomainError("circle positions must lie in [0, 1)");
}

void validate_sphere_positions(const std::vector<double>& positions, VertexId n, int t) {
    if (positions.size() != static_cast<size_t>(n) * (t + 1))
        throw DomainError("positions size must equal n * (t + 1)");
    for (VertexId i = 0; i < n; ++i) {
        const double* p = positions.data() + static_cast<size_t>(i) * (t + 1);
        double norm_sq = 0.0;
        for (int d = 0; d <= t; ++d) norm_sq += p[d] * p[d];
        if (std::fabs(std::sqrt(norm_sq) - 1.0) > 1e-9)
            throw DomainError("sphere positions must have unit norm");
    }
}

// Candidate pairs whose clockwise offset lies in [window_lo, window_hi]
// (padded), fed through the exact predicate. Every pair at circle distance
// <= window_hi is emitted from at least one endpoint.
Graph build_circle_graph(const std::vector<double>& positions, double window_lo, double window_hi,
                         const std::function<bool(VertexId, VertexId)>& pred) {
    const VertexId n = static_cast<VertexId>(positions.size());
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](VertexId a, VertexId b) { return positions[a] < positions[b]; });

    std::vector<double> doubled(2 * static_cast<size_t>(n));
    for (VertexId k = 0; k < n; ++k) {
        doubled[k] = positions[order[k]];
        doubled[k + n] = positions[order[k]] + 1.0;
    }

    std::vector<Edge> edges;
    for (VertexId si = 0; si < n; ++si) {
        const VertexId u = order[si];
        const double base = doubled[si];
        auto lo_it = std::lower_bound(doubled.begin(), doubled.end(), base + window_lo - kWindowPad);
        auto hi_it = std::upper_bound(lo_it, doubled.end(), base + window_hi + kWindowPad);
        for (auto it = lo_it; it != hi_it; ++it) {
            const VertexId sj = static_cast<VertexId>((it - doubled.begin()) % n);
            const VertexId v = order[sj];
            if (v == u) continue;
            if (pred(u, v)) edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

std::uint64_t cell_key(const int64_t* idx, int dims) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (int d = 0; d < dims; ++d) h = mix64(h ^ mix64(static_cast<std::uint64_t>(idx[d])));
    return h;
}

// Cubical cells of side r_outer / sqrt(t+1) in the ambient space; points
// within r_outer differ by at most ceil(sqrt(t+1)) cells per axis. Key
// collisions only add candidates, which the exact predicate rejects.
Graph build_sphere_graph_grid(const std::vector<double>& positions, VertexId n, int t,
                              double r_outer,
                              const std::function<bool(VertexId, VertexId)>& pred) {
    const int dims = t + 1;
    const double side = r_outer / std::sqrt(static_cast<double>(dims));
    const int reach = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(dims))));

    std::unordered_map<std::uint64_t, std::vector<VertexId>> cells;
    cells.reserve(n * 2);
    std::vector<int64_t> index(static_cast<size_t>(n) * dims);
    for (VertexId i = 0; i < n; ++i) {
        const double* p = positions.data() + static_cast<size_t>(i) * dims;
        int64_t* idx = index.data() + static_cast<size_t>(i) * dims;
        for (int d = 0; d < dims; ++d) idx[d] = static_cast<int64_t>(std::floor((p[d] + 1.0) / side));
        cells[cell_key(idx, dims)].push_back(i);
    }

    std::vector<int64_t> probe(dims);
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i) {
        const int64_t* idx = index.data() + static_cast<size_t>(i) * dims;
        // Enumerate offsets in [-reach, reach]^dims with an odometer.
        std::vector<int> offset(dims, -reach);
        while (true) {
            for (int d = 0; d < dims; ++d) probe[d] = idx[d] + offset[d];
            auto it = cells.find(cell_key(probe.data(), dims));
            if (it != cells.end()) {
                for (VertexId j : it->second)
                    if (j > i && pred(i, j)) edges.emplace_back(i, j);
            }
            int d = 0;
            while (d < dims && offset[d] == reach) offset[d++] = -reach;
            if (d == dims) break;
            ++offset[d];
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph build_sphere_graph(const std::vector<double>& positions, VertexId n, int t, double r_outer,
                         const std::function<bool(VertexId, VertexId)>& pred, Accel accel) {
    const bool grid_usable = r_outer > 1e-8;
    bool use_grid = false;
    switch (accel) {
        case Accel::automatic: use_grid = grid_usable && n >= 1000; break;
        case Accel::force_grid: use_grid = grid_usable; break;
        case Accel::force_naive: use_grid = false; break;
    }
    if (use_grid) return build_sphere_graph_grid(positions, n, t, r_outer, pred);
    return naive_oracle(n, pred);
}

Partition balanced_truth(VertexId n) {
    Partition truth(n, 0);
    for (VertexId i = n / 2; i < n; ++i) truth[i] = 1;
    return truth;
}

}  // namespace

double GeometricInstance::outer_radius() const {
    if (const auto* p = std::get_if<VrgParams>(&params)) return p->r2;
    if (const auto* p = std::get_if<GbmParams>(&params)) return p->rs;
    return std::get<UnionParams>(params).ra;
}

Graph naive_oracle(VertexId n, const std::function<bool(VertexId, VertexId)>& connected) {
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (connected(i, j)) edges.emplace_back(i, j);
    return Graph::from_edges(n, std::move(edges));
}

std::function<bool(VertexId, VertexId)> edge_rule(const GeometricInstance& inst) {
    const std::vector<double>& pos = inst.positions;
    switch (inst.model) {
        case Model::vrg: {
            auto [r1, r2] = std::get<VrgParams>(inst.params);
            return [&pos, r1, r2](VertexId i, VertexId j) {
                double d = circle_distance(pos[i], pos[j]);
                return d >= r1 && d <= r2;
            };
        }
        case Model::vrg_union: {
            auto [rc, rb, ra] = std::get<UnionParams>(inst.params);
            return [&pos, rc, rb, ra](VertexId i, VertexId j) {
                double d = circle_distance(pos[i], pos[j]);
                return d <= rc || (d >= rb && d <= ra);
            };
        }
        case Model::gbm: {
            auto [rs, rd] = std::get<GbmParams>(inst.params);
            const Partition& truth = *inst.truth;
            return [&pos, &truth, rs, rd](VertexId i, VertexId j) {
                double d = circle_distance(pos[i], pos[j]);
                return d <= (truth[i] == truth[j] ? rs : rd);
            };
        }
        case Model::rag: {
            auto [r1, r2] = std::get<VrgParams>(inst.params);
            const int dims = inst.ambient_dim();
            const GeometricInstance* self = &inst;
            return [self, dims, r1, r2](VertexId i, VertexId j) {
                double d = chord_distance(self->sphere_point(i), self->sphere_point(j), dims);
                return d >= r1 && d <= r2;
            };
        }
        case Model::gbmt: {
            auto [rs, rd] = std::get<GbmParams>(inst.params);
            const int dims = inst.ambient_dim();
            const GeometricInstance* self = &inst;
            const Partition& truth = *inst.truth;
            return [self, &truth, dims, rs, rd](VertexId i, VertexId j) {
                double d = chord_distance(self->sphere_point(i), self->sphere_point(j), dims);
                return d <= (truth[i] == truth[j] ? rs : rd);
            };
        }
    }
    throw ModelError("edge_rule: unknown model");
}

GeometricInstance gen_vrg(VertexId n, double r1, double r2, std::uint64_t seed,
                          const std::vector<double>* positions) {
    if (n < 1) throw DomainError("gen_vrg: n must be >= 1");
    if (!(r1 >= 0.0 && r1 <= r2 && r2 <= 0.5))
        throw DomainError("gen_vrg: need 0 <= r1 <= r2 <= 0.5");
    GeometricInstance inst;
    inst.model = Model::vrg;
    inst.dim_t = 1;
    inst.seed = seed;
    inst.params = VrgParams{r1, r2};
    if (positions) {
        validate_circle_positions(*positions, n);
        inst.positions = *positions;
    } else {
        inst.positions = sample_circle_positions(n, seed);
    }
    inst.graph = build_circle_graph(inst.positions, r1, r2, edge_rule(inst));
    return inst;
}

GeometricInstance gen_rag(VertexId n, int t, double r1, double r2, std::uint64_t seed,
                          const std::vector<double>* positions, Accel accel) {
    if (n < 1) throw DomainError("gen_rag: n must be >= 1");
    if (t < 1) throw DimensionError("gen_rag: t must be >= 1");
    if (!(r1 >= 0.0 && r1 <= r2 && r2 <= 2.0))
        throw DomainError("gen_rag: need 0 <= r1 <= r2 <= 2");
    GeometricInstance inst;
    inst.model = Model::rag;
    inst.dim_t = t;
    inst.seed = seed;
    inst.params = VrgParams{r1, r2};
    if (positions) {
        validate_sphere_positions(*positions, n, t);
        inst.positions = *positions;
    } else {
        inst.positions = sample_sphere_positions(n, t, seed);
    }
    inst.graph = build_sphere_graph(inst.positions, n, t, r2, edge_rule(inst), accel);
    return inst;
}

GeometricInstance gen_gbm(VertexId n, double rs, double rd, std::uint64_t seed,
                          const std::vector<double>* positions) {
    if (n < 2 || n % 2 != 0) throw DomainError("gen_gbm: n must be even and >= 2");
    if (!(rd >= 0.0 && rd < rs && rs <= 0.5))
        throw DomainError("gen_gbm: need 0 <= rd < rs <= 0.5");
    GeometricInstance inst;
    inst.model = Model::gbm;
    inst.dim_t = 1;
    inst.seed = seed;
    inst.params = GbmParams{rs, rd};
    inst.truth = balanced_truth(n);
    if (positions) {
        validate_circle_positions(*positions, n);
        inst.positions = *positions;
    } else {
        inst.positions = sample_circle_positions(n, seed);
    }
    inst.graph = build_circle_graph(inst.positions, 0.0, rs, edge_rule(inst));
    return inst;
}

GeometricInstance gen_gbm_t(VertexId n, int t, double rs, double rd, std::uint64_t seed,
                            const std::vector<double>* positions, Accel accel) {
    if (n < 2 || n % 2 != 0) throw DomainError("gen_gbm_t: n must be even and >= 2");
    if (t < 1) throw DimensionError("gen_gbm_t: t must be >= 1");
    if (!(rd >= 0.0 && rd < rs && rs <= 2.0))
        throw DomainError("gen_gbm_t: need 0 <= rd < rs <= 2");
    GeometricInstance inst;
    inst.model = Model::gbmt;
    inst.dim_t = t;
    inst.seed = seed;
    inst.params = GbmParams{rs, rd};
    inst.truth = balanced_truth(n);
    if (positions) {
        validate_sphere_positions(*positions, n, t);
        inst.positions = *positions;
    } else {
        inst.positions = sample_sphere_positions(n, t, seed);
    }
    inst.graph = build_sphere_graph(inst.positions, n, t, rs, edge_rule(inst), accel);
    return inst;
}

GeometricInstance gen_vrg_union(VertexId n, double rc, double rb, double ra, std::uint64_t seed,
                                const std::vector<double>* positions) {
    if (n < 1) throw DomainError("gen_vrg_union: n must be >= 1");
    if (!(rc > 0.0 && rc < rb && rb < ra && ra <= 0.5))
        throw DomainError("gen_vrg_union: need 0 < rc < rb < ra <= 0.5");
    GeometricInstance inst;
    inst.model = Model::vrg_union;
    inst.dim_t = 1;
    inst.seed = seed;
    inst.params = UnionParams{rc, rb, ra};
    if (positions) {
        validate_circle_positions(*positions, n);
        inst.positions = *positions;
    } else {
        inst.positions = sample_circle_positions(n, seed);
    }
    inst.graph = build_circle_graph(inst.positions, 0.0, ra, edge_rule(inst));
    return inst;
}

double scaled_radius(double x, std::uint64_t n, int t) {
    if (n < 2) throw DomainError("scaled_radius: n must be >= 2");
    if (t < 1) throw DimensionError("scaled_radius: t must be >= 1");
    double ratio = std::log(static_cast<double>(n)) / static_cast<double>(n);
    return x * std::pow(ratio, 1.0 / t);
}

}  // namespace annulus
