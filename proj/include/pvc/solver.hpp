#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pvc/bitset.hpp"
#include "pvc/degeneracy.hpp"
#include "pvc/graph.hpp"
#include "pvc/universal.hpp"

namespace pvc {

struct Solution {
    std::vector<VertexId> vertices;   // ascending ids, |vertices| = k
    Weight value = 0;                 // coverage(g, vertices), recomputed
    Weight reported_value = 0;        // val(U*) of the winning member, <= value
    std::string algorithm;            // "fpt" or "brute"
    std::string strategy;             // resolved strategy name
    std::uint64_t seed = 0;
    int l = 0;
    int degeneracy = 0;
    std::size_t family_size = 0;
    std::size_t members_evaluated = 0;
};

struct SolveConfig {
    std::string strategy = "auto";    // auto | exhaustive | greedy | randomized
    std::uint64_t seed = 0;
    double delta = 1e-3;
    int threads = 1;
};

// val_U(v): weight of v's edges excluding those to posterior neighbors
// inside u_set, plus v's loop weight.
Weight value_of_vertex(const WeightedGraph& g, const DegeneracyOrdering& ord,
                       const Bitset& u_set, VertexId v);

// The k most valuable vertices of u_set (value desc, id asc) and their total
// value. nullopt when |u_set| < k: the member is skipped, not an error.
std::optional<std::pair<std::vector<VertexId>, Weight>> evaluate_family_member(
    const WeightedGraph& g, const DegeneracyOrdering& ord, const Bitset& u_set, int k);

// The universal-set algorithm: l = min(n, k + k*d*), one evaluation per
// family member of size >= k, best member wins (value desc, then
// lexicographically smallest solution). Exhaustive/greedy strategies return
// the exact optimum; randomized matches it with probability >= 1 - delta and
// never exceeds it.
Solution solve(const WeightedGraph& g, int k, const SolveConfig& cfg = {});

}  // namespace pvc
