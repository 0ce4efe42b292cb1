#include "annulus/graph.hpp"

#include <algorithm>

#include "annulus/errors.hpp"

namespace annulus {

Graph Graph::from_edges(VertexId n, std::vector<Edge> edges) {
    for (auto& [u, v] : edges) {
        if (u == v) throw DomainError("Graph: self-loop");
        if (u >= n || v >= n) throw DomainError("Graph: vertex id out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = n;
    std::vector<std::uint32_t> deg(n, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(static_cast<size_t>(n) + 1, 0);
    for (VertexId u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + deg[u];
    g.adjacency_.resize(g.offsets_[n]);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.adjacency_[cursor[u]++] = v;
        g.adjacency_[cursor[v]++] = u;
    }
    // Edges were processed in canonical order, so each row's higher neighbors
    // are appended sorted, but lower neighbors interleave; sort each row.
    for (VertexId u = 0; u < n; ++u)
        std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]),
                  g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]));
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> edges;
    edges.reserve(edge_count());
    for (VertexId u = 0; u < n_; ++u)
        for (VertexId v : neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    return edges;
}

bool Graph::check_invariants() const {
    if (offsets_.size() != static_cast<size_t>(n_) + 1 || offsets_[0] != 0) return false;
    if (offsets_[n_] != adjacency_.size()) return false;
    for (VertexId u = 0; u < n_; ++u) {
        auto nb = neighbors(u);
        for (size_t i = 0; i < nb.size(); ++i) {
            if (nb[i] == u || nb[i] >= n_) return false;
            if (i > 0 && nb[i - 1] >= nb[i]) return false;
            if (!has_edge(nb[i], u)) return false;
        }
    }
    return true;
}

}  // namespace annulus
