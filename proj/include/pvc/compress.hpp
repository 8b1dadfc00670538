#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pvc/degeneracy.hpp"
#include "pvc/graph.hpp"

namespace pvc {

// A nice subset: k+1 independent vertices whose pairwise common
// neighborhoods all equal c exactly; each member's remaining neighbors are
// private to it.
struct NiceSubset {
    std::vector<VertexId> u;  // ascending, |u| = k+1
    std::vector<VertexId> c;  // ascending, possibly empty
};

struct BicliquePair {
    std::vector<VertexId> left;   // ascending
    std::vector<VertexId> right;  // ascending
};

using NiceOutcome = std::variant<std::monostate, NiceSubset, BicliquePair>;

// Audit of the nice predicate; returns an explanation for the first
// violation, or nullopt when u is nice with common neighborhood c.
std::optional<std::string> explain_not_nice(const WeightedGraph& g, const NiceSubset& nice, int k);
bool check_nice(const WeightedGraph& g, const NiceSubset& nice, int k);

// Largest color class among vertices of loopless degree <= 2d*, colored
// with <= d*+1 colors (ties by smaller color index). Size is at least
// ceil(n / ((d*+1)(2d*+1))).
std::vector<VertexId> low_degree_independent_set(const WeightedGraph& g);
std::vector<VertexId> low_degree_independent_set(const WeightedGraph& g,
                                                 const DegeneracyOrdering& ord);

// One step of the induction: scan for a pivot with more than
// p*(h_bound*k)^(p-i) neighbors in the working set, else run the marking
// procedure. Returns a nice subset, a biclique witness (p pivots versus p
// surviving members), or monostate when the working set is too small for
// either (legal only when |I| <= p*(max(h_bound,1)*k)^p).
NiceOutcome find_nice_or_biclique(const WeightedGraph& g, std::span<const VertexId> independent,
                                  int k, int p, long long h_bound);

struct ReductionEvent {
    std::string removed;                  // label of u*
    std::vector<std::string> u_labels;    // the nice subset
    std::vector<std::string> c_labels;    // its common neighborhood
    Weight incident_weight = 0;           // |N(u*)| + L(u*) at removal time
};

// Deletes the member of the nice subset with minimum incident weight and
// folds each deleted edge into the surviving endpoint's loop weight.
// Requires unit non-loop weights. Coverage of any vertex set avoiding u*
// is unchanged, and so is the optimum over k-sets.
std::pair<WeightedGraph, ReductionEvent> reduce_once(const WeightedGraph& g, const NiceSubset& nice);

struct CompressParams {
    int k = 0;
    int p = 0;
    int input_degeneracy = 0;
    int input_n = 0;
    std::int64_t input_m = 0;
    int output_n = 0;
    std::int64_t output_m = 0;
};

struct ReducedInstance {
    WeightedGraph h;            // loopless, unit weights
    std::vector<Weight> rho;    // by h vertex id; the loop weight at emission
    std::vector<ReductionEvent> trace;
    CompressParams params;
};

struct BicliqueReport {
    std::vector<std::string> left;
    std::vector<std::string> right;
    int p = 0;
};

struct CompressOptions {
    std::optional<int> p;   // default: input degeneracy + 1
    bool planar = false;    // preset p = 3; requires degeneracy <= 5
};

// The reduction loop: extract a low-degree independent set, search for a
// nice subset, delete its cheapest member, repeat until no nice subset is
// found (or report a biclique, refuting the K_{p,p}-freeness promise).
// On normal exit, |V(h)| <= (d+1)(2d+1) * p * (max(2d,1)*k)^p.
std::variant<ReducedInstance, BicliqueReport> compress(const WeightedGraph& g, int k,
                                                       const CompressOptions& opt = {});

// The closed-form vertex bound asserted at termination.
std::uint64_t compress_size_bound(int degeneracy, int p, int k);

struct LiftResult {
    std::vector<VertexId> vertices;  // ids in g
    Weight coverage_g = 0;
    Weight coverage_h = 0;
    Weight rho_sum = 0;
};

// Lifting is the identity on labels. Validates
// coverage_g == coverage_h + rho_sum and reports both sides.
LiftResult lift_solution(const WeightedGraph& g, const ReducedInstance& reduced,
                         std::span<const VertexId> s_in_h);

}  // namespace pvc
