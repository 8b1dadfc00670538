#include "pvc/compress.hpp"

#include <algorithm>
#include <sstream>

#include "pvc/errors.hpp"

namespace pvc {

namespace {

constexpr std::uint64_t kSat = ~0ULL;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSat / b) return kSat;
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}

std::vector<VertexId> sorted_ids(std::span<const VertexId> ids) {
    std::vector<VertexId> v(ids.begin(), ids.end());
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<VertexId> intersect_sorted(const std::vector<VertexId>& a,
                                       const std::vector<VertexId>& b) {
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<VertexId> neighbor_ids(const WeightedGraph& g, VertexId v) {
    std::vector<VertexId> out;
    for (const Neighbor& nb : g.neighbors(v)) out.push_back(nb.id);
    return out;  // adjacency is stored sorted
}

std::vector<std::string> to_labels(const WeightedGraph& g, std::span<const VertexId> ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (VertexId v : ids) out.push_back(g.label(v));
    return out;
}

}  // namespace

std::optional<std::string> explain_not_nice(const WeightedGraph& g, const NiceSubset& nice, int k) {
    const auto& u = nice.u;
    const std::vector<VertexId> c = nice.c;  // expected sorted
    if (static_cast<int>(u.size()) != k + 1) {
        return "nice subset must have k+1 = " + std::to_string(k + 1) + " members, has " +
               std::to_string(u.size());
    }
    if (!std::is_sorted(u.begin(), u.end()) || std::adjacent_find(u.begin(), u.end()) != u.end()) {
        return "members must be distinct and sorted";
    }
    for (VertexId x : u) g.check_vertex(x);
    for (VertexId x : c) g.check_vertex(x);
    for (VertexId x : u) {
        const auto nx = neighbor_ids(g, x);
        for (VertexId y : u) {
            if (y != x && std::binary_search(nx.begin(), nx.end(), y)) {
                return "members " + g.label(x) + " and " + g.label(y) + " are adjacent";
            }
        }
        if (!std::includes(nx.begin(), nx.end(), c.begin(), c.end())) {
            return "common set is not contained in N(" + g.label(x) + ")";
        }
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
        const auto ni = neighbor_ids(g, u[i]);
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            const auto nj = neighbor_ids(g, u[j]);
            if (intersect_sorted(ni, nj) != c) {
                return "common neighborhood of " + g.label(u[i]) + " and " + g.label(u[j]) +
                       " differs from the common set";
            }
        }
    }
    // Private neighbors: pairwise disjoint and disjoint from the subset.
    std::vector<VertexId> seen;
    for (VertexId x : u) {
        for (VertexId w : neighbor_ids(g, x)) {
            if (std::binary_search(c.begin(), c.end(), w)) continue;
            if (std::binary_search(u.begin(), u.end(), w)) {
                return "private vertex " + g.label(w) + " lies inside the subset";
            }
            seen.push_back(w);
        }
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        return "private vertex sets overlap";
    }
    return std::nullopt;
}

bool check_nice(const WeightedGraph& g, const NiceSubset& nice, int k) {
    return !explain_not_nice(g, nice, k).has_value();
}

std::vector<VertexId> low_degree_independent_set(const WeightedGraph& g) {
    return low_degree_independent_set(g, degeneracy_ordering(g));
}

std::vector<VertexId> low_degree_independent_set(const WeightedGraph& g,
                                                 const DegeneracyOrdering& ord) {
    const int n = g.vertex_count();
    if (n == 0) throw input_error("graph is empty");
    const int d = ord.degeneracy;

    std::vector<char> low(static_cast<std::size_t>(n), 0);
    std::int64_t low_count = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (g.degree(v) <= 2 * d) {
            low[static_cast<std::size_t>(v)] = 1;
            ++low_count;
        }
    }
    const std::int64_t low_bound = (n + 2 * d) / (2 * d + 1);  // ceil(n / (2d+1))
    if (low_count < low_bound) {
        throw internal_error("low-degree count " + std::to_string(low_count) +
                             " below the guaranteed " + std::to_string(low_bound));
    }

    const std::vector<int> color = greedy_coloring(g, ord);
    std::vector<std::vector<VertexId>> classes(static_cast<std::size_t>(d) + 1);
    for (VertexId v = 0; v < n; ++v) {
        if (low[static_cast<std::size_t>(v)]) {
            classes[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v);
        }
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < classes.size(); ++c) {
        if (classes[c].size() > classes[best].size()) best = c;  // ties: smaller color
    }
    auto& result = classes[best];
    const std::int64_t bound =
        (static_cast<std::int64_t>(n) + static_cast<std::int64_t>(d + 1) * (2 * d + 1) - 1) /
        (static_cast<std::int64_t>(d + 1) * (2 * d + 1));
    if (static_cast<std::int64_t>(result.size()) < bound) {
        throw internal_error("independent set size " + std::to_string(result.size()) +
                             " below the guaranteed " + std::to_string(bound));
    }
    return result;  // each class is collected in ascending id order
}

NiceOutcome find_nice_or_biclique(const WeightedGraph& g, std::span<const VertexId> independent,
                                  int k, int p, long long h_bound) {
    const int n = g.vertex_count();
    if (k < 1) throw input_error("k must be at least 1");
    if (p < 1) throw input_error("p must be at least 1");
    if (h_bound < 0) throw input_error("h_bound must be non-negative");

    std::vector<VertexId> u = sorted_ids(independent);
    if (std::adjacent_find(u.begin(), u.end()) != u.end()) {
        throw input_error("independent set contains duplicates");
    }
    Bitset in_u(n);
    for (VertexId v : u) {
        g.check_vertex(v);
        in_u.set(v);
        if (g.degree(v) > h_bound) {
            throw input_error("vertex " + g.label(v) + " has degree " +
                              std::to_string(g.degree(v)) + " above h_bound " +
                              std::to_string(h_bound));
        }
    }
    for (VertexId v : u) {
        for (const Neighbor& nb : g.neighbors(v)) {
            if (in_u.test(nb.id)) throw input_error("set is not independent");
        }
    }

    const std::uint64_t hk = sat_mul(static_cast<std::uint64_t>(h_bound), static_cast<std::uint64_t>(k));
    std::vector<VertexId> q;
    Bitset in_q(n);

    for (int i = 1; i <= p; ++i) {
        const std::uint64_t threshold = sat_mul(static_cast<std::uint64_t>(p), sat_pow(hk, p - i));

        VertexId pivot = -1;
        for (VertexId v = 0; v < n; ++v) {
            if (in_q.test(v)) continue;
            std::uint64_t cnt = 0;
            for (const Neighbor& nb : g.neighbors(v)) {
                if (in_u.test(nb.id)) ++cnt;
            }
            if (cnt > threshold) {
                pivot = v;
                break;
            }
        }

        if (pivot >= 0) {
            std::vector<VertexId> next;
            for (VertexId v : u) {
                if (g.has_edge(pivot, v)) next.push_back(v);
            }
            for (VertexId v : u) in_u.reset(v);
            u = std::move(next);
            for (VertexId v : u) in_u.set(v);
            q.push_back(pivot);
            in_q.set(pivot);
            continue;
        }

        // Marking procedure: pick unmarked members in id order; picking u0
        // marks u0 and every member sharing a neighbor with it outside q.
        Bitset marked(n);
        std::vector<VertexId> picked;
        for (VertexId u0 : u) {
            if (marked.test(u0)) continue;
            picked.push_back(u0);
            marked.set(u0);
            for (const Neighbor& w : g.neighbors(u0)) {
                if (in_q.test(w.id)) continue;
                for (const Neighbor& x : g.neighbors(w.id)) {
                    if (in_u.test(x.id)) marked.set(x.id);
                }
            }
        }
        if (static_cast<int>(picked.size()) >= k + 1) {
            NiceSubset nice;
            nice.u.assign(picked.begin(), picked.begin() + k + 1);
            nice.c = sorted_ids(q);
            if (auto why = explain_not_nice(g, nice, k); why.has_value()) {
                throw internal_error("marking produced a non-nice subset: " + *why);
            }
            return nice;
        }

        // Too few picks and no pivot: legal only below the search threshold
        // (h_bound 0 degenerates to independent-set size <= k).
        const std::uint64_t legal =
            sat_mul(static_cast<std::uint64_t>(p),
                    sat_pow(sat_mul(std::max<std::uint64_t>(static_cast<std::uint64_t>(h_bound), 1),
                                    static_cast<std::uint64_t>(k)),
                            p));
        if (static_cast<std::uint64_t>(independent.size()) > legal) {
            std::ostringstream diag;
            diag << "nice-subset search failed above its threshold: |I| = " << independent.size()
                 << ", p = " << p << ", h = " << h_bound << ", k = " << k << ", level = " << i
                 << ", |U| = " << u.size() << ", picked = " << picked.size()
                 << ", threshold = " << legal;
            throw internal_error(diag.str());
        }
        return std::monostate{};
    }

    // All p pivots succeeded: every survivor is adjacent to every pivot.
    if (static_cast<int>(u.size()) < p) {
        throw internal_error("pivot chain ended with fewer than p survivors");
    }
    BicliquePair bic;
    bic.left.assign(u.begin(), u.begin() + p);
    bic.right = sorted_ids(q);
    for (VertexId a : bic.left) {
        for (VertexId b : bic.right) {
            if (!g.has_edge(a, b)) throw internal_error("biclique certificate failed its edge check");
        }
    }
    return bic;
}

std::pair<WeightedGraph, ReductionEvent> reduce_once(const WeightedGraph& g, const NiceSubset& nice) {
    if (!g.has_unit_edge_weights()) {
        throw capability_error("reduction requires unit non-loop edge weights");
    }
    if (auto why = explain_not_nice(g, nice, static_cast<int>(nice.u.size()) - 1); why.has_value()) {
        throw input_error("reduce_once needs a valid nice subset: " + *why);
    }

    VertexId target = nice.u.front();
    Weight best = g.incident_weight(target);
    for (VertexId v : nice.u) {
        const Weight w = g.incident_weight(v);
        if (w < best) {  // ties: first in ascending id order
            best = w;
            target = v;
        }
    }

    ReductionEvent ev;
    ev.removed = g.label(target);
    ev.u_labels = to_labels(g, nice.u);
    ev.c_labels = to_labels(g, nice.c);
    ev.incident_weight = best;
    return {g.remove_vertex_transfer_loops(target), std::move(ev)};
}

std::uint64_t compress_size_bound(int degeneracy, int p, int k) {
    const std::uint64_t h = std::max<std::uint64_t>(2 * static_cast<std::uint64_t>(degeneracy), 1);
    return sat_mul(sat_mul(static_cast<std::uint64_t>(degeneracy + 1),
                           static_cast<std::uint64_t>(2 * degeneracy + 1)),
                   sat_mul(static_cast<std::uint64_t>(p),
                           sat_pow(sat_mul(h, static_cast<std::uint64_t>(k)), p)));
}

std::variant<ReducedInstance, BicliqueReport> compress(const WeightedGraph& g, int k,
                                                       const CompressOptions& opt) {
    const int n = g.vertex_count();
    if (k < 1) throw input_error("k must be at least 1, got " + std::to_string(k));
    if (k > n) throw input_error("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    if (g.has_loops()) throw capability_error("compression requires a loopless input graph");
    if (!g.has_unit_edge_weights()) {
        throw capability_error("compression requires unit edge weights; weighted inputs are rejected");
    }

    const int d0 = degeneracy_ordering(g).degeneracy;
    int p = 0;
    if (opt.planar) {
        if (opt.p.has_value()) throw input_error("--planar fixes p = 3; do not pass --p as well");
        if (d0 > 5) {
            throw input_error("planar preset requires degeneracy <= 5, input has " +
                              std::to_string(d0));
        }
        p = 3;
    } else if (opt.p.has_value()) {
        if (*opt.p < 1) throw input_error("p must be at least 1");
        p = *opt.p;
    } else {
        p = d0 + 1;  // sound for every input: no d-degenerate graph has K_{d+1,d+1}
    }

    WeightedGraph work = g;
    std::vector<ReductionEvent> trace;

    for (;;) {
        if (work.vertex_count() == 0) break;
        const DegeneracyOrdering ord = degeneracy_ordering(work);
        const std::vector<VertexId> indep = low_degree_independent_set(work, ord);
        NiceOutcome outcome =
            find_nice_or_biclique(work, indep, k, p, 2LL * ord.degeneracy);
        if (std::holds_alternative<std::monostate>(outcome)) break;
        if (auto* bic = std::get_if<BicliquePair>(&outcome)) {
            BicliqueReport report;
            report.left = to_labels(work, bic->left);
            report.right = to_labels(work, bic->right);
            report.p = p;
            return report;
        }
        auto [next, ev] = reduce_once(work, std::get<NiceSubset>(outcome));
        trace.push_back(std::move(ev));
        work = std::move(next);
    }

    const std::uint64_t bound = compress_size_bound(d0, p, k);
    if (static_cast<std::uint64_t>(work.vertex_count()) > bound) {
        throw internal_error("compression stopped at " + std::to_string(work.vertex_count()) +
                             " vertices, above the bound " + std::to_string(bound));
    }

    ReducedInstance out;
    out.params.k = k;
    out.params.p = p;
    out.params.input_degeneracy = d0;
    out.params.input_n = n;
    out.params.input_m = g.edge_count();
    out.params.output_n = work.vertex_count();
    out.rho.resize(static_cast<std::size_t>(work.vertex_count()));
    for (VertexId v = 0; v < work.vertex_count(); ++v) {
        out.rho[static_cast<std::size_t>(v)] = work.loop_weight(v);
    }
    out.h = work.without_loops();
    out.params.output_m = out.h.edge_count();
    out.trace = std::move(trace);
    return out;
}

LiftResult lift_solution(const WeightedGraph& g, const ReducedInstance& reduced,
                         std::span<const VertexId> s_in_h) {
    if (static_cast<int>(s_in_h.size()) != reduced.params.k) {
        throw input_error("lifted set must have k = " + std::to_string(reduced.params.k) +
                          " vertices, got " + std::to_string(s_in_h.size()));
    }
    LiftResult r;
    for (VertexId v : s_in_h) {
        reduced.h.check_vertex(v);
        const auto in_g = g.find_vertex(reduced.h.label(v));
        if (!in_g.has_value()) {
            throw internal_error("compressed vertex '" + reduced.h.label(v) +
                                 "' is missing from the original graph");
        }
        r.vertices.push_back(*in_g);
        r.rho_sum += reduced.rho[static_cast<std::size_t>(v)];
    }
    std::sort(r.vertices.begin(), r.vertices.end());
    if (std::adjacent_find(r.vertices.begin(), r.vertices.end()) != r.vertices.end()) {
        throw input_error("lifted set contains duplicates");
    }
    r.coverage_h = reduced.h.coverage(s_in_h);
    r.coverage_g = g.coverage(r.vertices);
    if (r.coverage_g != r.coverage_h + r.rho_sum) {
        throw internal_error("lift identity failed: coverage in G is " +
                             std::to_string(r.coverage_g) + " but coverage in H plus rho is " +
                             std::to_string(r.coverage_h + r.rho_sum));
    }
    return r;
}

}  // namespace pvc
