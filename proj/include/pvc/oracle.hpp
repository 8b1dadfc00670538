#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pvc/graph.hpp"
#include "pvc/solver.hpp"

namespace pvc {

struct BruteLimits {
    static constexpr std::uint64_t max_subsets = 10'000'000;  // C(n,k)
};

// Exact optimum by enumerating every k-subset in lexicographic order; ties
// go to the lexicographically smallest set.
Solution brute_force_solve(const WeightedGraph& g, int k);

struct GeneratorSpec {
    enum class Model { degenerate, forest, grid, star, path, gadget_nice };

    Model model = Model::degenerate;
    int n = 0;          // degenerate, forest, path
    int d = 0;          // degenerate
    int rows = 0;       // grid
    int cols = 0;       // grid
    int leaves = 0;     // star
    int k = 0;          // gadget_nice
    int privates = 0;   // gadget_nice
    std::uint64_t seed = 0;
    Weight w_max = 1;   // 1 = unit weights, else uniform in 1..w_max

    static Model parse_model(const std::string& name);
};

// Deterministic instance generators. Each model's structural promise
// (degeneracy bound, acyclicity, ...) is asserted after construction.
//
// degenerate(n,d): vertex i attaches to min(d, i-1) distinct earlier
// vertices, so the reverse insertion order is d-posterior.
// gadget_nice(k,privates): a hub, t = 2*(h*k)^2 + 1 middles adjacent to the
// hub (h = max(2, privates+1)), and `privates` fresh leaves per middle;
// t is large enough for the nice-subset search to certify the middles.
WeightedGraph generate(const GeneratorSpec& spec);

// True iff left/right are disjoint p-sets and all p*p cross pairs are edges.
bool check_biclique(const WeightedGraph& g, std::span<const VertexId> left,
                    std::span<const VertexId> right, int p);

}  // namespace pvc
