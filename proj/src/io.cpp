#include "pvc/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "pvc/errors.hpp"

namespace pvc {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

WeightedGraph load_instance(const std::string& path) {
    const std::string text = slurp(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw input_error("'" + path + "' looks like JSON but does not parse: " + e.what());
        }
        return graph_from_compressed_json(doc);
    }
    std::istringstream in(text);
    return parse_edge_list(in);
}

WeightedGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    return parse_edge_list(in);
}

void write_edge_list_file(const WeightedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write '" + path + "'");
    write_edge_list(g, out);
}

nlohmann::json reduced_instance_json(const ReducedInstance& r) {
    nlohmann::json doc;
    doc["params"] = {{"k", r.params.k}, {"p", r.params.p}};
    doc["input"] = {{"n", r.params.input_n},
                    {"m", r.params.input_m},
                    {"degeneracy", r.params.input_degeneracy}};
    doc["output"] = {{"n", r.params.output_n}, {"m", r.params.output_m}};
    auto vertices = nlohmann::json::array();
    for (VertexId v = 0; v < r.h.vertex_count(); ++v) {
        vertices.push_back({{"label", r.h.label(v)}, {"rho", r.rho[static_cast<std::size_t>(v)]}});
    }
    doc["vertices"] = std::move(vertices);
    auto edges = nlohmann::json::array();
    for (const Edge& e : r.h.edges()) {
        edges.push_back({r.h.label(e.u), r.h.label(e.v)});
    }
    doc["edges"] = std::move(edges);
    doc["reductions"] = r.trace.size();
    return doc;
}

nlohmann::json biclique_report_json(const BicliqueReport& r) {
    return nlohmann::json{{"biclique", {{"left", r.left}, {"right", r.right}, {"p", r.p}}}};
}

WeightedGraph graph_from_compressed_json(const nlohmann::json& doc) {
    if (doc.contains("biclique")) {
        throw input_error("this document is a biclique certificate, not an instance");
    }
    if (!doc.contains("vertices") || !doc.contains("edges")) {
        throw input_error("compressed instance needs 'vertices' and 'edges' arrays");
    }
    GraphBuilder b;
    std::unordered_map<std::string, VertexId> ids;
    for (const auto& v : doc.at("vertices")) {
        const auto label = v.at("label").get<std::string>();
        const VertexId id = b.add_vertex(label);
        ids.emplace(label, id);
        const auto rho = v.at("rho").get<Weight>();
        if (rho < 0) throw input_error("rho must be non-negative");
        if (rho > 0) b.add_loop(id, rho);
    }
    auto lookup = [&](const std::string& label) {
        auto it = ids.find(label);
        if (it == ids.end()) throw input_error("edge references undeclared vertex '" + label + "'");
        return it->second;
    };
    for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw input_error("each edge must be a label pair");
        const auto lu = e.at(0).get<std::string>();
        const auto lv = e.at(1).get<std::string>();
        const auto u = lookup(lu);
        const auto v = lookup(lv);
        if (u == v) throw input_error("edge list contains the loop '" + lu + "'");
        b.add_edge(u, v, 1);
    }
    return b.build();
}

std::string file_digest(const std::string& path) {
    const std::string bytes = slurp(path);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

}  // namespace pvc
