#include "annulus/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "annulus/errors.hpp"

namespace annulus {

namespace {

struct UnionFind {
    std::vector<VertexId> parent;
    std::vector<std::uint32_t> size;

    explicit UnionFind(VertexId n) : parent(n), size(n, 1) {
        for (VertexId i = 0; i < n; ++i) parent[i] = i;
    }

    VertexId find(VertexId x) {
        VertexId root = x;
        while (parent[root] != root) root = parent[root];
        while (parent[x] != root) {
            VertexId next = parent[x];
            parent[x] = root;
            x = next;
        }
        return root;
    }

    void unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

RegimeVerdict verdict_from_margin(double margin) {
    if (std::fabs(margin) < kBoundaryTol) return {Verdict::boundary, margin};
    return {margin > 0.0 ? Verdict::in_regime : Verdict::out_of_regime, margin};
}

}  // namespace

ComponentLabeling connected_components(const Graph& g) {
    const VertexId n = g.vertex_count();
    UnionFind uf(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : g.neighbors(u))
            if (u < v) uf.unite(u, v);

    ComponentLabeling out;
    out.labels.assign(n, 0);
    std::vector<std::uint32_t> id_of_root(n, UINT32_MAX);
    for (VertexId u = 0; u < n; ++u) {
        VertexId root = uf.find(u);
        if (id_of_root[root] == UINT32_MAX) id_of_root[root] = out.count++;
        out.labels[u] = id_of_root[root];
    }
    return out;
}

std::uint64_t count_isolated(const Graph& g) {
    std::uint64_t count = 0;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        if (g.degree(u) == 0) ++count;
    return count;
}

double expected_isolated_vrg(std::uint64_t n, double a, double b) {
    if (n < 1) throw DomainError("expected_isolated_vrg: n must be >= 1");
    if (b < 0.0 || a < b) throw DomainError("expected_isolated_vrg: need 0 <= b <= a");
    double p = 2.0 * (a - b) * std::log(static_cast<double>(n)) / static_cast<double>(n);
    if (p >= 1.0) throw DomainError("expected_isolated_vrg: annulus probability reaches 1");
    return static_cast<double>(n) * std::pow(1.0 - p, static_cast<double>(n - 1));
}

std::uint64_t count_no_left_neighbor(const GeometricInstance& inst) {
    if (!inst.on_circle()) throw ModelError("count_no_left_neighbor: requires circle positions");
    const double r_outer = inst.outer_radius();
    const auto& pos = inst.positions;
    std::uint64_t count = 0;
    for (VertexId u = 0; u < inst.n(); ++u) {
        bool has_left = false;
        for (VertexId v : inst.graph.neighbors(u)) {
            double ccw = pos[u] - pos[v];
            if (ccw < 0.0) ccw += 1.0;
            if (ccw <= r_outer) {
                has_left = true;
                break;
            }
        }
        if (!has_left) ++count;
    }
    return count;
}

std::uint32_t common_neighbor_count(const Graph& g, VertexId u, VertexId v) {
    if (u == v) throw DomainError("common_neighbor_count: u and v must differ");
    if (u >= g.vertex_count() || v >= g.vertex_count())
        throw DomainError("common_neighbor_count: vertex out of range");
    auto nu = g.neighbors(u);
    auto nv = g.neighbors(v);
    std::uint32_t count = 0;
    size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
        if (nu[i] < nv[j]) ++i;
        else if (nu[i] > nv[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

std::vector<std::uint32_t> edge_triangle_counts(const Graph& g) {
    std::vector<std::uint32_t> counts;
    counts.reserve(g.edge_count());
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v : g.neighbors(u))
            if (u < v) counts.push_back(common_neighbor_count(g, u, v));
    return counts;
}

RegimeVerdict predicted_vrg_connectivity(double a, double b) {
    if (b < 0.0 || a < b) throw DomainError("predicted_vrg_connectivity: need 0 <= b <= a");
    return verdict_from_margin(std::min(a - 1.0, (a - b) - 0.5));
}

RegimeVerdict predicted_isolated_rag(int t, double a, double b) {
    if (t < 1) throw DimensionError("predicted_isolated_rag: t must be >= 1");
    if (b < 0.0 || a < b) throw DomainError("predicted_isolated_rag: need 0 <= b <= a");
    double width = std::pow(a, t) - std::pow(b, t);
    return verdict_from_margin(psi(t) - width);
}

bool rag_connectivity_sufficient(int t, double a, double b) {
    if (t < 1) throw DimensionError("rag_connectivity_sufficient: t must be >= 1");
    if (b < 0.0 || a < b) throw DomainError("rag_connectivity_sufficient: need 0 <= b <= a");
    double width = std::pow(a, t) - std::pow(b, t);
    double pow_term = std::pow(2.0, 1.0 + 1.0 / t);
    double required = 8.0 * (t + 1) * psi(t) / (1.0 - 1.0 / (pow_term - 1.0));
    return width >= required && a > pow_term * b;
}

bool vrg_union_connectivity_sufficient(double c, double b, double a) {
    if (!(c > 0.0 && c < b && b < a))
        throw DomainError("vrg_union_connectivity_sufficient: need 0 < c < b < a");
    if (a - b + c > 1.0) return true;
    if (a - b > 0.5 && a > 1.0) return true;
    if (a - b < c) {
        if (b > 1.5 * c) return 2.0 * (a - b) + 0.5 * c > 1.0;
        return b - c > 1.0;
    }
    if (b <= 1.5 * c) return a > 1.0;
    return (a - b) + 1.5 * c > 1.0;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::in_regime: return "InRegime";
        case Verdict::out_of_regime: return "OutOfRegime";
        case Verdict::boundary: return "Boundary";
    }
    return "?";
}

}  // namespace annulus
