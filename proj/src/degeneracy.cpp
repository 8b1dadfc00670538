#include "pvc/degeneracy.hpp"

#include <algorithm>
#include <set>

#include "pvc/errors.hpp"

namespace pvc {

DegeneracyOrdering degeneracy_ordering(const WeightedGraph& g) {
    const int n = g.vertex_count();
    DegeneracyOrdering out;
    out.order.reserve(static_cast<std::size_t>(n));
    out.position.assign(static_cast<std::size_t>(n), -1);
    out.posterior.assign(static_cast<std::size_t>(n), {});

    std::vector<int> deg(static_cast<std::size_t>(n));
    std::set<std::pair<int, VertexId>> queue;  // (remaining degree, id)
    for (VertexId v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        queue.emplace(deg[static_cast<std::size_t>(v)], v);
    }

    while (!queue.empty()) {
        const auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        out.degeneracy = std::max(out.degeneracy, d);
        out.position[static_cast<std::size_t>(v)] = static_cast<int>(out.order.size());
        out.order.push_back(v);
        for (const Neighbor& nb : g.neighbors(v)) {
            if (out.position[static_cast<std::size_t>(nb.id)] != -1) continue;
            auto& du = deg[static_cast<std::size_t>(nb.id)];
            queue.erase({du, nb.id});
            --du;
            queue.emplace(du, nb.id);
        }
    }

    for (VertexId v = 0; v < n; ++v) {
        auto& pn = out.posterior[static_cast<std::size_t>(v)];
        for (const Neighbor& nb : g.neighbors(v)) {
            if (out.position[static_cast<std::size_t>(nb.id)] > out.position[static_cast<std::size_t>(v)]) {
                pn.push_back(nb.id);
            }
        }
        if (static_cast<int>(pn.size()) > out.degeneracy) {
            throw internal_error("posterior list longer than degeneracy");
        }
    }
    return out;
}

std::vector<int> greedy_coloring(const WeightedGraph& g, const DegeneracyOrdering& ord) {
    const int n = g.vertex_count();
    if (static_cast<int>(ord.order.size()) != n) {
        throw input_error("ordering does not match graph");
    }
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(ord.degeneracy) + 2, 0);
    for (int pos = n - 1; pos >= 0; --pos) {
        const VertexId v = ord.order[static_cast<std::size_t>(pos)];
        std::fill(used.begin(), used.end(), 0);
        for (const Neighbor& nb : g.neighbors(v)) {
            const int c = color[static_cast<std::size_t>(nb.id)];
            if (c >= 0 && c < static_cast<int>(used.size())) used[static_cast<std::size_t>(c)] = 1;
        }
        int c = 0;
        while (used[static_cast<std::size_t>(c)]) ++c;
        if (c > ord.degeneracy) throw internal_error("greedy coloring exceeded degeneracy+1 colors");
        color[static_cast<std::size_t>(v)] = c;
    }
    return color;
}

}  // namespace pvc
