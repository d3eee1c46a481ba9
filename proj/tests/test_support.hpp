#ifndef QFACE_TEST_SUPPORT_HPP
#define QFACE_TEST_SUPPORT_HPP

#include "qface/families.hpp"
#include "qface/quiver.hpp"

#include <bit>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qtest {

using namespace qface;

inline Quiver qv(const std::vector<std::pair<std::string, std::string>>& pairs) {
    return Quiver::from_pairs(pairs);
}

inline EdgeSubset sub(const Quiver& q,
                      const std::vector<std::pair<std::string, std::string>>& pairs) {
    return EdgeSubset::of_id_pairs(q, pairs);
}

inline Quiver diamond() {
    return qv({{"0", "1"}, {"0", "2"}, {"1", "3"}, {"2", "3"}});
}

inline Quiver balanced_4gon() {
    return families::polygon("+-+-");
}

// Random quivers for property tests; deterministic in the seed. Edge
// counts are clamped to the loop-free maximum.
inline Quiver random_quiver(int vertices, int edges, uint64_t seed) {
    long long cap = static_cast<long long>(vertices) * (vertices - 1);
    if (edges > cap) edges = static_cast<int>(cap);
    return families::random_quiver(vertices, edges, seed);
}

// Random quiver whose underlying graph is a forest: orient a random
// subset of a random labeled forest.
inline Quiver random_forest_quiver(int vertices, uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < vertices; ++v) {
        if (gen() % 4 == 0) continue; // leave some vertices isolated
        int u = static_cast<int>(gen() % static_cast<uint64_t>(v));
        if (gen() % 2)
            edges.emplace_back(u, v);
        else
            edges.emplace_back(v, u);
    }
    std::vector<VertexId> ids;
    for (int i = 0; i < vertices; ++i) ids.push_back(std::to_string(i));
    return Quiver(std::move(ids), std::move(edges));
}

// All quivers on n labeled vertices with at most max_edges edges.
// Enumerates edge subsets of the complete directed graph.
template <typename F>
void for_each_quiver(int n, int max_edges, F&& body) {
    std::vector<std::pair<int, int>> all;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) all.emplace_back(a, b);
    const int m = static_cast<int>(all.size());
    std::vector<VertexId> ids;
    for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
    for (uint64_t bits = 0; bits < (uint64_t{1} << m); ++bits) {
        if (std::popcount(bits) > max_edges) continue;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < m; ++i)
            if ((bits >> i) & 1u) edges.push_back(all[static_cast<size_t>(i)]);
        body(Quiver(ids, std::move(edges)));
    }
}

// Directed-cycle existence by explicit walk extension; the slow mirror of
// the DFS-based check.
inline bool has_directed_cycle_brute(int nclasses, const std::vector<std::pair<int, int>>& edges) {
    for (auto [a, b] : edges)
        if (a == b) return true;
    std::vector<std::vector<int>> adj(static_cast<size_t>(nclasses));
    for (auto [a, b] : edges) adj[static_cast<size_t>(a)].push_back(b);
    std::vector<int> walk;
    std::vector<char> on_walk(static_cast<size_t>(nclasses), 0);
    auto extend = [&](auto&& self, int v) -> bool {
        for (int w : adj[static_cast<size_t>(v)]) {
            if (on_walk[static_cast<size_t>(w)]) return true;
            on_walk[static_cast<size_t>(w)] = 1;
            walk.push_back(w);
            if (self(self, w)) return true;
            walk.pop_back();
            on_walk[static_cast<size_t>(w)] = 0;
        }
        return false;
    };
    for (int s = 0; s < nclasses; ++s) {
        on_walk[static_cast<size_t>(s)] = 1;
        walk.assign(1, s);
        if (extend(extend, s)) return true;
        on_walk[static_cast<size_t>(s)] = 0;
    }
    return false;
}

} // namespace qtest

#endif
