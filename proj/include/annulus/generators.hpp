#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "annulus/geometry.hpp"
#include "annulus/graph.hpp"

namespace annulus {

enum class Model { vrg, rag, gbm, gbmt, vrg_union };

struct VrgParams {
    double r1 = 0.0, r2 = 0.0;
};
struct GbmParams {
    double rs = 0.0, rd = 0.0;
};
struct UnionParams {
    double rc = 0.0, rb = 0.0, ra = 0.0;  // window [0, rc] u [rb, ra]
};
using ModelParams = std::variant<VrgParams, GbmParams, UnionParams>;

// Two-cluster ground truth, one label in {0, 1} per vertex.
using Partition = std::vector<std::uint8_t>;

// A generated graph together with the hidden positions that produced it.
// Immutable after construction. Circle models store one value per vertex;
// sphere models store (dim_t + 1) coordinates per vertex, row-major.
struct GeometricInstance {
    Model model = Model::vrg;
    int dim_t = 1;
    std::uint64_t seed = 0;
    ModelParams params;
    std::vector<double> positions;
    std::optional<Partition> truth;
    Graph graph;

    VertexId n() const { return graph.vertex_count(); }
    bool on_circle() const { return model == Model::vrg || model == Model::gbm || model == Model::vrg_union; }
    int ambient_dim() const { return dim_t + 1; }
    const double* sphere_point(VertexId i) const {
        return positions.data() + static_cast<size_t>(i) * ambient_dim();
    }
    // r2 / rs / ra depending on the model.
    double outer_radius() const;
};

// Grid acceleration control for the sphere generators. The automatic policy
// uses the naive path below 1000 vertices.
enum class Accel { automatic, force_grid, force_naive };

// Optional explicit positions bypass sampling (test hook). Sizes must be n
// for circle models and n*(t+1) for sphere models.
GeometricInstance gen_vrg(VertexId n, double r1, double r2, std::uint64_t seed,
                          const std::vector<double>* positions = nullptr);
GeometricInstance gen_rag(VertexId n, int t, double r1, double r2, std::uint64_t seed,
                          const std::vector<double>* positions = nullptr,
                          Accel accel = Accel::automatic);
GeometricInstance gen_gbm(VertexId n, double rs, double rd, std::uint64_t seed,
                          const std::vector<double>* positions = nullptr);
GeometricInstance gen_gbm_t(VertexId n, int t, double rs, double rd, std::uint64_t seed,
                            const std::vector<double>* positions = nullptr,
                            Accel accel = Accel::automatic);
GeometricInstance gen_vrg_union(VertexId n, double rc, double rb, double ra, std::uint64_t seed,
                                const std::vector<double>* positions = nullptr);

// O(n^2) application of an exact membership rule; the reference for the
// accelerated generators.
Graph naive_oracle(VertexId n, const std::function<bool(VertexId, VertexId)>& connected);

// Membership rule of an existing instance, for oracle cross-checks.
std::function<bool(VertexId, VertexId)> edge_rule(const GeometricInstance& inst);

// Converts a scaled parameter x to an absolute radius x * (log n / n)^(1/t),
// natural log. The generators take absolute radii; scaling happens at call
// sites (CLI, sweeps, tests).
double scaled_radius(double x, std::uint64_t n, int t);

}  // namespace annulus
