#include "pvc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "pvc/errors.hpp"

namespace pvc {

std::span<const Neighbor> WeightedGraph::neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int WeightedGraph::degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

bool WeightedGraph::has_edge(VertexId u, VertexId v) const {
    return edge_weight(u, v).has_value();
}

std::optional<Weight> WeightedGraph::edge_weight(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return std::nullopt;
    const auto& a = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(a.begin(), a.end(), v,
                               [](const Neighbor& nb, VertexId x) { return nb.id < x; });
    if (it != a.end() && it->id == v) return it->w;
    return std::nullopt;
}

Weight WeightedGraph::loop_weight(VertexId v) const {
    check_vertex(v);
    return loops_[static_cast<std::size_t>(v)];
}

Weight WeightedGraph::total_weight() const {
    Weight t = total_loop_;
    for (const Edge& e : edges_) t += e.w;
    return t;
}

bool WeightedGraph::has_unit_edge_weights() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w == 1; });
}

Weight WeightedGraph::incident_weight(VertexId v) const {
    check_vertex(v);
    Weight t = loops_[static_cast<std::size_t>(v)];
    for (const Neighbor& nb : adj_[static_cast<std::size_t>(v)]) t += nb.w;
    return t;
}

const std::string& WeightedGraph::label(VertexId v) const {
    check_vertex(v);
    return labels_[static_cast<std::size_t>(v)];
}

std::optional<VertexId> WeightedGraph::find_vertex(std::string_view label) const {
    for (VertexId v = 0; v < vertex_count(); ++v) {
        if (labels_[static_cast<std::size_t>(v)] == label) return v;
    }
    return std::nullopt;
}

void WeightedGraph::check_vertex(VertexId v) const {
    if (v < 0 || v >= vertex_count()) {
        throw input_error("unknown vertex id " + std::to_string(v) + " (n = " +
                          std::to_string(vertex_count()) + ")");
    }
}

Weight WeightedGraph::coverage(std::span<const VertexId> s) const {
    Bitset chosen(vertex_count());
    for (VertexId v : s) {
        check_vertex(v);
        chosen.set(v);
    }
    return coverage(chosen);
}

Weight WeightedGraph::coverage(const Bitset& s) const {
    Weight total = 0;
    for (const Edge& e : edges_) {
        if (s.test(e.u) || s.test(e.v)) total += e.w;
    }
    s.for_each_set([&](int v) { total += loops_[static_cast<std::size_t>(v)]; });
    return total;
}

WeightedGraph WeightedGraph::remove_vertex_transfer_loops(VertexId v) const {
    check_vertex(v);
    GraphBuilder b;
    std::vector<VertexId> remap(labels_.size(), -1);
    for (VertexId u = 0; u < vertex_count(); ++u) {
        if (u == v) continue;
        remap[static_cast<std::size_t>(u)] = b.ensure_vertex(labels_[static_cast<std::size_t>(u)]);
    }
    for (VertexId u = 0; u < vertex_count(); ++u) {
        if (u == v) continue;
        Weight l = loops_[static_cast<std::size_t>(u)];
        if (auto w = edge_weight(std::min(u, v), std::max(u, v)); w.has_value()) l += *w;
        if (l > 0) b.add_loop(remap[static_cast<std::size_t>(u)], l);
    }
    for (const Edge& e : edges_) {
        if (e.u == v || e.v == v) continue;
        b.add_edge(remap[static_cast<std::size_t>(e.u)], remap[static_cast<std::size_t>(e.v)], e.w);
    }
    return b.build();
}

WeightedGraph WeightedGraph::without_loops() const {
    WeightedGraph g = *this;
    std::fill(g.loops_.begin(), g.loops_.end(), 0);
    g.total_loop_ = 0;
    return g;
}

VertexId GraphBuilder::ensure_vertex(std::string_view label) {
    auto it = index_.find(std::string(label));
    if (it != index_.end()) return it->second;
    const VertexId id = static_cast<VertexId>(labels_.size());
    labels_.emplace_back(label);
    loops_.push_back(0);
    index_.emplace(labels_.back(), id);
    return id;
}

VertexId GraphBuilder::add_vertex(std::string_view label) {
    if (index_.count(std::string(label)) != 0) {
        throw input_error("duplicate vertex label '" + std::string(label) + "'");
    }
    return ensure_vertex(label);
}

void GraphBuilder::add_edge(VertexId u, VertexId v, Weight w) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
        throw input_error("edge endpoint out of range");
    }
    if (u == v) throw input_error("self-loop passed to add_edge; use add_loop");
    if (w < 1) throw input_error("edge weight must be a positive integer, got " + std::to_string(w));
    edges_.push_back({std::min(u, v), std::max(u, v), w});
}

void GraphBuilder::add_loop(VertexId v, Weight w) {
    if (v < 0 || v >= vertex_count()) throw input_error("loop vertex out of range");
    if (w < 0) throw input_error("loop weight must be non-negative, got " + std::to_string(w));
    loops_[static_cast<std::size_t>(v)] += w;
}

WeightedGraph GraphBuilder::build() {
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v) {
            throw input_error("duplicate edge " + labels_[static_cast<std::size_t>(edges_[i].u)] +
                              " -- " + labels_[static_cast<std::size_t>(edges_[i].v)]);
        }
    }
    WeightedGraph g;
    g.labels_ = std::move(labels_);
    g.edges_ = std::move(edges_);
    g.loops_ = std::move(loops_);
    g.adj_.assign(g.labels_.size(), {});
    for (const Edge& e : g.edges_) {
        g.adj_[static_cast<std::size_t>(e.u)].push_back({e.v, e.w});
        g.adj_[static_cast<std::size_t>(e.v)].push_back({e.u, e.w});
    }
    for (auto& a : g.adj_) {
        std::sort(a.begin(), a.end(), [](const Neighbor& x, const Neighbor& y) { return x.id < y.id; });
    }
    g.total_loop_ = 0;
    for (Weight l : g.loops_) g.total_loop_ += l;
    return g;
}

namespace {

Weight parse_weight_token(const std::string& tok, int line_no) {
    Weight value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw input_error("line " + std::to_string(line_no) + ": weight '" + tok +
                          "' is not a non-negative integer (fractional and signed weights are rejected)");
    }
    return value;
}

}  // namespace

WeightedGraph parse_edge_list(std::istream& in) {
    GraphBuilder b;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(std::move(t));
        if (tok.empty()) continue;
        if (tok.size() < 2 || tok.size() > 3) {
            throw input_error("line " + std::to_string(line_no) + ": expected 'u v [w]', got " +
                              std::to_string(tok.size()) + " token(s)");
        }
        const VertexId u = b.ensure_vertex(tok[0]);
        const VertexId v = b.ensure_vertex(tok[1]);
        const Weight w = tok.size() == 3 ? parse_weight_token(tok[2], line_no) : 1;
        if (u == v) {
            b.add_loop(u, w);
        } else {
            if (w < 1) {
                throw input_error("line " + std::to_string(line_no) +
                                  ": edge weight must be >= 1, got " + std::to_string(w));
            }
            b.add_edge(u, v, w);
        }
    }
    return b.build();
}

void write_edge_list(const WeightedGraph& g, std::ostream& out) {
    // Vertex block first so that re-parsing assigns identical internal ids.
    out << "# vertices: label label loop-weight\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << g.label(v) << ' ' << g.label(v) << ' ' << g.loop_weight(v) << '\n';
    }
    out << "# edges: u v weight\n";
    for (const Edge& e : g.edges()) {
        out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << e.w << '\n';
    }
}

}  // namespace pvc
