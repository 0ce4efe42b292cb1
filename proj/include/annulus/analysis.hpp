#pragma once

#include <cstdint>
#include <vector>

#include "annulus/generators.hpp"
#include "annulus/graph.hpp"

namespace annulus {

struct ComponentLabeling {
    std::vector<std::uint32_t> labels;  // dense ids in [0, count), by first-seen vertex order
    std::uint32_t count = 0;
};

ComponentLabeling connected_components(const Graph& g);

std::uint64_t count_isolated(const Graph& g);

// Exact finite-n expectation n (1 - 2(a-b) log n / n)^(n-1) of the number of
// isolated vertices in a VRG with the scaled window [b, a].
double expected_isolated_vrg(std::uint64_t n, double a, double b);

// Number of vertices with no graph-neighbor in the counterclockwise
// (decreasing-position) direction within the model's outer radius. Circle
// models only.
std::uint64_t count_no_left_neighbor(const GeometricInstance& inst);

std::uint32_t common_neighbor_count(const Graph& g, VertexId u, VertexId v);

// Common-neighbor count of every edge, indexed like Graph::edge_list().
std::vector<std::uint32_t> edge_triangle_counts(const Graph& g);

enum class Verdict { in_regime, out_of_regime, boundary };

// Outcome of an asymptotic theorem predicate: a predicted regime, not a
// per-instance guarantee. margin is the signed distance to the regime
// boundary in the theorem's own units; |margin| < 1e-9 reports boundary.
struct RegimeVerdict {
    Verdict verdict = Verdict::boundary;
    double margin = 0.0;
};

constexpr double kBoundaryTol = 1e-9;

// Connectivity regime of the VRG with window [b log n / n, a log n / n]:
// connected whp iff a > 1 and a - b > 0.5.
RegimeVerdict predicted_vrg_connectivity(double a, double b);

// Isolated-vertex regime of RAG_t: isolated vertices exist whp iff
// a^t - b^t < psi(t).
RegimeVerdict predicted_isolated_rag(int t, double a, double b);

// Sufficient condition for RAG_t connectivity:
// a^t - b^t >= 8 (t+1) psi(t) / (1 - 1/(2^(1+1/t) - 1)) and a > 2^(1+1/t) b.
bool rag_connectivity_sufficient(int t, double a, double b);

// Sufficient conditions for connectivity of the patched VRG with window
// [0, c] u [b, a] (scaled): the two base clauses plus the four refinements.
bool vrg_union_connectivity_sufficient(double c, double b, double a);

const char* verdict_name(Verdict v);

}  // namespace annulus
