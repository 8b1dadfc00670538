#pragma once

#include <vector>

#include "pvc/graph.hpp"

namespace pvc {

// A d*-posterior ordering produced by iterated minimum-degree peeling.
// posterior[v] lists v's neighbors that occur later in the order, ascending.
struct DegeneracyOrdering {
    std::vector<VertexId> order;                  // position -> vertex
    std::vector<int> position;                    // vertex -> position
    std::vector<std::vector<VertexId>> posterior; // PN(v), |PN(v)| <= degeneracy
    int degeneracy = 0;
};

// Deterministic: loopless min-degree peeling, ties by smallest vertex id.
// degeneracy is the maximum remaining degree seen at any removal.
DegeneracyOrdering degeneracy_ordering(const WeightedGraph& g);

// Proper coloring with at most degeneracy+1 colors: vertices take the
// smallest color unused by already-colored neighbors, in reverse peeling
// order. Returns vertex -> color.
std::vector<int> greedy_coloring(const WeightedGraph& g, const DegeneracyOrdering& ord);

}  // namespace pvc
