#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace annulus {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;  // canonical: first < second

// Immutable undirected graph in compressed-row layout. Neighbor lists are
// strictly sorted; no self-loops or parallel edges.
class Graph {
public:
    Graph() = default;

    // Builds from an edge list. Pairs are canonicalized, deduplicated and
    // validated (self-loops rejected, ids must be < n).
    static Graph from_edges(VertexId n, std::vector<Edge> edges);

    VertexId vertex_count() const { return n_; }
    std::uint64_t edge_count() const { return adjacency_.size() / 2; }

    std::span<const VertexId> neighbors(VertexId u) const {
        return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
    }

    std::uint32_t degree(VertexId u) const {
        return static_cast<std::uint32_t>(offsets_[u + 1] - offsets_[u]);
    }

    bool has_edge(VertexId u, VertexId v) const;

    // Edges in canonical order (by first endpoint, then second).
    std::vector<Edge> edge_list() const;

    // Structural invariants: sortedness, symmetry, no self-loops. Intended
    // for tests; construction already enforces them.
    bool check_invariants() const;

private:
    VertexId n_ = 0;
    std::vector<std::uint64_t> offsets_ = {0};
    std::vector<VertexId> adjacency_;
};

}  // namespace annulus
