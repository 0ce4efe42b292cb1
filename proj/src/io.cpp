#include "annulus/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "annulus/errors.hpp"

namespace annulus {

using nlohmann::json;

const char* model_name(Model m) {
    switch (m) {
        case Model::vrg: return "vrg";
        case Model::rag: return "rag";
        case Model::gbm: return "gbm";
        case Model::gbmt: return "gbmt";
        case Model::vrg_union: return "vrg-union";
    }
    return "?";
}

Model model_from_name(const std::string& name) {
    if (name == "vrg") return Model::vrg;
    if (name == "rag") return Model::rag;
    if (name == "gbm") return Model::gbm;
    if (name == "gbmt") return Model::gbmt;
    if (name == "vrg-union") return Model::vrg_union;
    throw FormatError("unknown model: " + name);
}

void write_instance_json(const GeometricInstance& inst, std::ostream& out) {
    json doc;
    doc["format"] = "annulus-instance";
    doc["version"] = 1;
    doc["model"] = model_name(inst.model);
    doc["n"] = inst.n();
    doc["t"] = inst.dim_t;
    doc["seed"] = inst.seed;

    json params;
    if (const auto* p = std::get_if<VrgParams>(&inst.params)) {
        params["r1"] = p->r1;
        params["r2"] = p->r2;
    } else if (const auto* p = std::get_if<GbmParams>(&inst.params)) {
        params["rs"] = p->rs;
        params["rd"] = p->rd;
    } else {
        const auto& u = std::get<UnionParams>(inst.params);
        params["rc"] = u.rc;
        params["rb"] = u.rb;
        params["ra"] = u.ra;
    }
    doc["params"] = params;

    if (inst.on_circle()) {
        doc["positions"] = inst.positions;
    } else {
        json rows = json::array();
        const int dims = inst.ambient_dim();
        for (VertexId i = 0; i < inst.n(); ++i) {
            const double* p = inst.sphere_point(i);
            rows.push_back(std::vector<double>(p, p + dims));
        }
        doc["positions"] = std::move(rows);
    }

    if (inst.truth) doc["truth"] = *inst.truth;

    json edges = json::array();
    for (const auto& [u, v] : inst.graph.edge_list()) edges.push_back(json::array({u, v}));
    doc["edges"] = std::move(edges);

    out << doc.dump() << '\n';
}

GeometricInstance read_instance_json(std::istream& in) {
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw FormatError(std::string("instance JSON parse error: ") + e.what());
    }
    try {
        if (doc.at("format") != "annulus-instance")
            throw FormatError("not an annulus instance file");

        GeometricInstance inst;
        inst.model = model_from_name(doc.at("model").get<std::string>());
        inst.dim_t = doc.at("t").get<int>();
        inst.seed = doc.at("seed").get<std::uint64_t>();
        const VertexId n = doc.at("n").get<VertexId>();

        const json& params = doc.at("params");
        switch (inst.model) {
            case Model::vrg:
            case Model::rag:
                inst.params = VrgParams{params.at("r1").get<double>(), params.at("r2").get<double>()};
                break;
            case Model::gbm:
            case Model::gbmt:
                inst.params = GbmParams{params.at("rs").get<double>(), params.at("rd").get<double>()};
                break;
            case Model::vrg_union:
                inst.params = UnionParams{params.at("rc").get<double>(), params.at("rb").get<double>(),
                                          params.at("ra").get<double>()};
                break;
        }

        if (inst.on_circle()) {
            inst.positions = doc.at("positions").get<std::vector<double>>();
            if (inst.positions.size() != n) throw FormatError("positions length mismatch");
        } else {
            const json& rows = doc.at("positions");
            if (rows.size() != n) throw FormatError("positions length mismatch");
            const int dims = inst.dim_t + 1;
            inst.positions.reserve(static_cast<size_t>(n) * dims);
            for (const json& row : rows) {
                if (static_cast<int>(row.size()) != dims)
                    throw FormatError("position row dimension mismatch");
                for (const json& x : row) inst.positions.push_back(x.get<double>());
            }
        }

        if (doc.contains("truth")) inst.truth = doc.at("truth").get<Partition>();

        std::vector<Edge> edges;
        for (const json& e : doc.at("edges"))
            edges.emplace_back(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
        inst.graph = Graph::from_edges(n, std::move(edges));
        return inst;
    } catch (const json::exception& e) {
        throw FormatError(std::string("instance JSON structure error: ") + e.what());
    }
}

void write_instance_file(const GeometricInstance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open for writing: " + path);
    write_instance_json(inst, out);
    if (!out) throw std::ios_base::failure("write failed: " + path);
}

GeometricInstance read_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open for reading: " + path);
    return read_instance_json(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v : g.neighbors(u))
            if (u < v) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
    std::uint64_t n = 0, m = 0;
    if (!(in >> n >> m)) throw FormatError("edge list: missing 'n m' header");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        VertexId u, v;
        if (!(in >> u >> v)) throw FormatError("edge list: truncated");
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(static_cast<VertexId>(n), std::move(edges));
}

}  // namespace annulus
