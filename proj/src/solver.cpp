#include "pvc/solver.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "pvc/errors.hpp"

namespace pvc {

namespace {

struct PostNeighbor {
    VertexId id;
    Weight w;
};

// Per-solve immutable context shared by worker threads.
struct EvalContext {
    const WeightedGraph& g;
    int k;
    std::vector<Weight> incident;                      // incident_weight per vertex
    std::vector<std::vector<PostNeighbor>> posterior;  // PN with edge weights

    EvalContext(const WeightedGraph& graph, const DegeneracyOrdering& ord, int k_)
        : g(graph), k(k_) {
        const int n = g.vertex_count();
        incident.resize(static_cast<std::size_t>(n));
        posterior.resize(static_cast<std::size_t>(n));
        for (VertexId v = 0; v < n; ++v) {
            incident[static_cast<std::size_t>(v)] = g.incident_weight(v);
            auto& pn = posterior[static_cast<std::size_t>(v)];
            for (VertexId u : ord.posterior[static_cast<std::size_t>(v)]) {
                pn.push_back({u, *g.edge_weight(v, u)});
            }
        }
    }
};

struct Candidate {
    Weight value = -1;
    std::vector<VertexId> sol;  // ascending

    bool beats(const Candidate& other) const {
        if (sol.empty()) return false;
        if (other.sol.empty()) return true;
        if (value != other.value) return value > other.value;
        return std::lexicographical_compare(sol.begin(), sol.end(),
                                            other.sol.begin(), other.sol.end());
    }
};

// Scratch buffers reused across members by one worker.
struct Scratch {
    std::vector<std::uint64_t> words;
    std::vector<std::pair<Weight, VertexId>> vals;
};

bool evaluate_member_into(const EvalContext& ctx, const Bitset& u_set, Scratch& scratch,
                          Candidate& out) {
    scratch.vals.clear();
    u_set.for_each_set([&](int v) {
        Weight val = ctx.incident[static_cast<std::size_t>(v)];
        for (const PostNeighbor& pn : ctx.posterior[static_cast<std::size_t>(v)]) {
            if (u_set.test(pn.id)) val -= pn.w;
        }
        scratch.vals.emplace_back(val, static_cast<VertexId>(v));
    });
    if (static_cast<int>(scratch.vals.size()) < ctx.k) return false;
    std::sort(scratch.vals.begin(), scratch.vals.end(),
              [](const auto& a, const auto& b) {
                  return a.first != b.first ? a.first > b.first : a.second < b.second;
              });
    out.value = 0;
    out.sol.clear();
    for (int i = 0; i < ctx.k; ++i) {
        out.value += scratch.vals[static_cast<std::size_t>(i)].first;
        out.sol.push_back(scratch.vals[static_cast<std::size_t>(i)].second);
    }
    std::sort(out.sol.begin(), out.sol.end());
    return true;
}

UsetStrategy parse_strategy(const std::string& name, int n, int l) {
    if (name == "auto") return resolve_auto_strategy(n, l);
    if (name == "exhaustive") return UsetStrategy::exhaustive;
    if (name == "greedy") return UsetStrategy::greedy;
    if (name == "randomized") return UsetStrategy::randomized;
    throw input_error("unknown strategy '" + name + "'");
}

}  // namespace

Weight value_of_vertex(const WeightedGraph& g, const DegeneracyOrdering& ord,
                       const Bitset& u_set, VertexId v) {
    g.check_vertex(v);
    Weight val = g.incident_weight(v);
    for (VertexId u : ord.posterior[static_cast<std::size_t>(v)]) {
        if (u_set.test(u)) val -= *g.edge_weight(v, u);
    }
    return val;
}

std::optional<std::pair<std::vector<VertexId>, Weight>> evaluate_family_member(
    const WeightedGraph& g, const DegeneracyOrdering& ord, const Bitset& u_set, int k) {
    EvalContext ctx(g, ord, k);
    Scratch scratch;
    Candidate c;
    if (!evaluate_member_into(ctx, u_set, scratch, c)) return std::nullopt;
    return std::make_pair(std::move(c.sol), c.value);
}

Solution solve(const WeightedGraph& g, int k, const SolveConfig& cfg) {
    const int n = g.vertex_count();
    if (k < 1) throw input_error("k must be at least 1, got " + std::to_string(k));
    if (k > n) throw input_error("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));

    const DegeneracyOrdering ord = degeneracy_ordering(g);
    const std::int64_t l64 =
        std::min<std::int64_t>(n, static_cast<std::int64_t>(k) +
                                      static_cast<std::int64_t>(k) * ord.degeneracy);
    const int l = static_cast<int>(l64);

    Solution sol;
    sol.algorithm = "fpt";
    sol.seed = cfg.seed;
    sol.l = l;
    sol.degeneracy = ord.degeneracy;

    if (k == n) {
        // Forced answer: every vertex is chosen.
        sol.vertices.resize(static_cast<std::size_t>(n));
        std::iota(sol.vertices.begin(), sol.vertices.end(), 0);
        sol.value = g.coverage(sol.vertices);
        sol.reported_value = sol.value;
        sol.strategy = cfg.strategy;
        return sol;
    }

    const UsetStrategy strategy = parse_strategy(cfg.strategy, n, l);
    const SubsetFamily family = build_universal_set(
        n, l, strategy,
        strategy == UsetStrategy::randomized ? std::optional<std::uint64_t>(cfg.seed) : std::nullopt,
        strategy == UsetStrategy::randomized ? std::optional<double>(cfg.delta) : std::nullopt);

    sol.strategy = std::string(to_string(strategy));
    sol.family_size = family.size();

    const int threads = std::clamp(cfg.threads, 1, 64);
    const std::size_t count = family.size();
    std::vector<Candidate> best(static_cast<std::size_t>(threads));
    std::vector<std::size_t> evaluated(static_cast<std::size_t>(threads), 0);

    const EvalContext ctx(g, ord, k);
    auto run_range = [&](int t, std::size_t from, std::size_t to) {
        Scratch scratch;
        Bitset u_set(n);
        Candidate cand;
        for (std::size_t i = from; i < to; ++i) {
            family.member(i, u_set.words());
            if (u_set.count() < k) continue;
            ++evaluated[static_cast<std::size_t>(t)];
            if (!evaluate_member_into(ctx, u_set, scratch, cand)) continue;
            if (cand.beats(best[static_cast<std::size_t>(t)])) {
                best[static_cast<std::size_t>(t)] = cand;
            }
        }
    };

    if (threads == 1 || count < 1024) {
        run_range(0, 0, count);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (count + static_cast<std::size_t>(threads) - 1) /
                                  static_cast<std::size_t>(threads);
        for (int t = 0; t < threads; ++t) {
            const std::size_t from = std::min(count, static_cast<std::size_t>(t) * chunk);
            const std::size_t to = std::min(count, from + chunk);
            pool.emplace_back(run_range, t, from, to);
        }
        for (auto& th : pool) th.join();
    }

    Candidate winner;
    for (const Candidate& c : best) {
        if (c.beats(winner)) winner = c;
    }
    sol.members_evaluated = std::accumulate(evaluated.begin(), evaluated.end(), std::size_t{0});

    if (winner.sol.empty()) {
        // No member of size >= k (possible only for an unlucky randomized
        // family): fall back to the k smallest ids.
        winner.sol.resize(static_cast<std::size_t>(k));
        std::iota(winner.sol.begin(), winner.sol.end(), 0);
        winner.value = 0;
    }

    sol.vertices = std::move(winner.sol);
    sol.reported_value = winner.value;
    sol.value = g.coverage(sol.vertices);
    if (sol.value < sol.reported_value) {
        throw internal_error("member value exceeded its coverage; scoring bug");
    }
    return sol;
}

}  // namespace pvc
