#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pvc/bitset.hpp"

namespace pvc {

using VertexId = std::int32_t;
using Weight = std::int64_t;

struct Edge {
    VertexId u = 0;  // u < v
    VertexId v = 0;
    Weight w = 1;    // >= 1
};

struct Neighbor {
    VertexId id;
    Weight w;
};

// Undirected graph with positive integer edge weights and a non-negative
// loop weight per vertex. Immutable once built. Internal ids are dense
// 0..n-1 in first-appearance order; original labels are kept.
//
// Self-loops never appear in adjacency or degrees; they live in loop_weight
// and count toward coverage exactly once when their vertex is chosen.
class WeightedGraph {
public:
    WeightedGraph() = default;

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    std::int64_t edge_record_count() const { return static_cast<std::int64_t>(edges_.size()); }

    // m with each unit of loop weight counted as one edge, so that
    // sum_v |N(v)| == 2 * (m - sum_v L(v)) holds exactly.
    std::int64_t edge_count() const { return edge_record_count() + total_loop_weight(); }

    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Neighbor> neighbors(VertexId v) const;
    int degree(VertexId v) const;  // |N(v)|, loops excluded
    bool has_edge(VertexId u, VertexId v) const;
    std::optional<Weight> edge_weight(VertexId u, VertexId v) const;

    Weight loop_weight(VertexId v) const;
    Weight total_loop_weight() const { return total_loop_; }
    Weight total_weight() const;  // sum of edge weights plus loop weights
    bool has_loops() const { return total_loop_ > 0; }
    bool has_unit_edge_weights() const;

    // sum_{u in N(v)} w(u,v) + L(v)
    Weight incident_weight(VertexId v) const;

    const std::string& label(VertexId v) const;
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<VertexId> find_vertex(std::string_view label) const;

    // Total weight of edges with at least one endpoint in s, each counted
    // once, plus loop weights of chosen vertices. Rejects unknown ids.
    Weight coverage(std::span<const VertexId> s) const;
    Weight coverage(const Bitset& s) const;

    // Copy without v; every edge (v,u) is folded into u's loop weight.
    // Remaining ids are compacted preserving relative order.
    WeightedGraph remove_vertex_transfer_loops(VertexId v) const;

    // Copy with all loop weights dropped.
    WeightedGraph without_loops() const;

    void check_vertex(VertexId v) const;

private:
    friend class GraphBuilder;

    std::vector<std::string> labels_;
    std::vector<Edge> edges_;                    // canonical u < v, sorted
    std::vector<std::vector<Neighbor>> adj_;     // sorted by neighbor id
    std::vector<Weight> loops_;
    Weight total_loop_ = 0;
};

// Accumulates vertices/edges/loops, validates, then freezes a WeightedGraph.
class GraphBuilder {
public:
    VertexId ensure_vertex(std::string_view label);
    VertexId add_vertex(std::string_view label);  // errors if the label exists

    // u != v, w >= 1. A duplicate (u,v) record is a hard error at build().
    void add_edge(VertexId u, VertexId v, Weight w = 1);
    // Accumulates onto L(v); w >= 0.
    void add_loop(VertexId v, Weight w);

    int vertex_count() const { return static_cast<int>(labels_.size()); }

    WeightedGraph build();

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<Edge> edges_;
    std::vector<Weight> loops_;
};

// Edge-list text format: one record per line, "u v [w]". u == v adds w to
// L(u) (so "v v 0" declares an isolated vertex), missing w defaults to 1,
// '#' starts a comment, labels are arbitrary non-whitespace tokens.
WeightedGraph parse_edge_list(std::istream& in);
void write_edge_list(const WeightedGraph& g, std::ostream& out);

}  // namespace pvc
