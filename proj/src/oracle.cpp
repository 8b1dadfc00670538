#include "pvc/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pvc/degeneracy.hpp"
#include "pvc/errors.hpp"
#include "pvc/rng.hpp"

namespace pvc {

Solution brute_force_solve(const WeightedGraph& g, int k) {
    const int n = g.vertex_count();
    if (k < 1) throw input_error("k must be at least 1, got " + std::to_string(k));
    if (k > n) throw input_error("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    const std::uint64_t subsets = binomial_capped(n, k, ~0ULL);
    if (subsets > BruteLimits::max_subsets) {
        throw capability_error("brute force is limited to C(n,k) <= " +
                               std::to_string(BruteLimits::max_subsets) + ", got " +
                               std::to_string(subsets));
    }

    std::vector<VertexId> cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 0);
    Bitset chosen(n);
    Weight best = -1;
    std::vector<VertexId> best_set;
    std::uint64_t count = 0;

    for (;;) {
        chosen.clear();
        for (VertexId v : cur) chosen.set(v);
        const Weight value = g.coverage(chosen);
        ++count;
        if (value > best) {  // lexicographic enumeration: first max wins ties
            best = value;
            best_set = cur;
        }
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
        }
    }

    Solution sol;
    sol.vertices = std::move(best_set);
    sol.value = best;
    sol.reported_value = best;
    sol.algorithm = "brute";
    sol.strategy = "brute";
    sol.members_evaluated = count;
    sol.degeneracy = degeneracy_ordering(g).degeneracy;
    return sol;
}

GeneratorSpec::Model GeneratorSpec::parse_model(const std::string& name) {
    if (name == "degenerate") return Model::degenerate;
    if (name == "forest") return Model::forest;
    if (name == "grid") return Model::grid;
    if (name == "star") return Model::star;
    if (name == "path") return Model::path;
    if (name == "gadget-nice" || name == "gadget_nice") return Model::gadget_nice;
    throw input_error("unknown generator model '" + name + "'");
}

namespace {

void require_positive(int value, const char* name) {
    if (value < 1) {
        throw input_error(std::string(name) + " must be positive, got " + std::to_string(value));
    }
}

bool is_acyclic(const WeightedGraph& g) {
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const Edge& e : g.edges()) {
        const int ru = find(e.u), rv = find(e.v);
        if (ru == rv) return false;
        parent[static_cast<std::size_t>(ru)] = rv;
    }
    return true;
}

void apply_weights(GraphBuilder& b, std::vector<std::pair<VertexId, VertexId>>& edges,
                   Weight w_max, SplitMix64& rng) {
    for (const auto& [u, v] : edges) {
        const Weight w = w_max <= 1 ? 1 : 1 + static_cast<Weight>(rng.below(static_cast<std::uint64_t>(w_max)));
        b.add_edge(u, v, w);
    }
}

}  // namespace

WeightedGraph generate(const GeneratorSpec& spec) {
    using Model = GeneratorSpec::Model;
    if (spec.w_max < 1) throw input_error("w_max must be >= 1");
    SplitMix64 rng(spec.seed);
    GraphBuilder b;
    std::vector<std::pair<VertexId, VertexId>> edges;

    auto vertex = [&](long long i) { return b.ensure_vertex(std::to_string(i)); };

    switch (spec.model) {
        case Model::degenerate: {
            require_positive(spec.n, "n");
            require_positive(spec.d, "d");
            for (int i = 0; i < spec.n; ++i) vertex(i);
            for (int i = 1; i < spec.n; ++i) {
                const int attach = std::min(spec.d, i);
                std::set<int> picked;
                while (static_cast<int>(picked.size()) < attach) {
                    picked.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(i))));
                }
                for (int p : picked) edges.emplace_back(p, i);
            }
            break;
        }
        case Model::forest: {
            require_positive(spec.n, "n");
            for (int i = 0; i < spec.n; ++i) vertex(i);
            for (int i = 1; i < spec.n; ++i) {
                // First attachment is forced so n >= 2 always has an edge.
                const bool attach = i == 1 || rng.below(16) < 14;
                if (!attach) continue;
                edges.emplace_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(i))), i);
            }
            break;
        }
        case Model::grid: {
            require_positive(spec.rows, "rows");
            require_positive(spec.cols, "cols");
            auto id = [&](int r, int c) { return vertex(static_cast<long long>(r) * spec.cols + c); };
            for (int r = 0; r < spec.rows; ++r) {
                for (int c = 0; c < spec.cols; ++c) id(r, c);
            }
            for (int r = 0; r < spec.rows; ++r) {
                for (int c = 0; c < spec.cols; ++c) {
                    if (c + 1 < spec.cols) edges.emplace_back(id(r, c), id(r, c + 1));
                    if (r + 1 < spec.rows) edges.emplace_back(id(r, c), id(r + 1, c));
                }
            }
            break;
        }
        case Model::star: {
            require_positive(spec.leaves, "leaves");
            const VertexId center = b.ensure_vertex("c");
            for (int i = 1; i <= spec.leaves; ++i) {
                edges.emplace_back(center, b.ensure_vertex("u" + std::to_string(i)));
            }
            break;
        }
        case Model::path: {
            require_positive(spec.n, "n");
            for (int i = 0; i < spec.n; ++i) vertex(i);
            for (int i = 1; i < spec.n; ++i) edges.emplace_back(i - 1, i);
            break;
        }
        case Model::gadget_nice: {
            require_positive(spec.k, "k");
            require_positive(spec.privates, "privates");
            const long long h = std::max(2, spec.privates + 1);
            const long long t = 2 * (h * spec.k) * (h * spec.k) + 1;
            const VertexId hub = b.ensure_vertex("hub");
            for (long long i = 1; i <= t; ++i) {
                const VertexId u = b.ensure_vertex("u" + std::to_string(i));
                edges.emplace_back(hub, u);
                for (int j = 1; j <= spec.privates; ++j) {
                    edges.emplace_back(u, b.ensure_vertex("p" + std::to_string(i) + "_" + std::to_string(j)));
                }
            }
            break;
        }
    }

    apply_weights(b, edges, spec.w_max, rng);
    WeightedGraph g = b.build();

    // Structural promises.
    switch (spec.model) {
        case Model::degenerate:
            if (degeneracy_ordering(g).degeneracy > spec.d) {
                throw internal_error("degenerate model exceeded its degeneracy bound");
            }
            break;
        case Model::forest:
        case Model::star:
        case Model::path:
        case Model::gadget_nice:
            if (!is_acyclic(g)) throw internal_error("tree-like model generated a cycle");
            break;
        case Model::grid:
            break;
    }
    return g;
}

bool check_biclique(const WeightedGraph& g, std::span<const VertexId> left,
                    std::span<const VertexId> right, int p) {
    if (static_cast<int>(left.size()) != p || static_cast<int>(right.size()) != p) return false;
    std::set<VertexId> seen;
    for (VertexId v : left) {
        if (v < 0 || v >= g.vertex_count() || !seen.insert(v).second) return false;
    }
    for (VertexId v : right) {
        if (v < 0 || v >= g.vertex_count() || !seen.insert(v).second) return false;
    }
    for (VertexId u : left) {
        for (VertexId v : right) {
            if (!g.has_edge(u, v)) return false;
        }
    }
    return true;
}

}  // namespace pvc
