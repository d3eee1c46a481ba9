#include "qface/rank.hpp"

#include <algorithm>
#include <limits>

namespace qface {

std::optional<RankFunction> find_rank_function(const Quiver& q, const EdgeMask& mask) {
    const int n = q.vertex_count();
    // adjacency over masked edges, remembering direction
    struct Arc {
        int other;
        int delta; // +1 when crossing tail->head, -1 when head->tail
    };
    std::vector<std::vector<Arc>> adj(static_cast<size_t>(n));
    for (int i = 0; i < q.edge_count(); ++i) {
        if (!mask.test(i)) continue;
        const Edge& e = q.edge(i);
        adj[static_cast<size_t>(e.tail)].push_back({e.head, +1});
        adj[static_cast<size_t>(e.head)].push_back({e.tail, -1});
    }

    std::vector<long long> val(static_cast<size_t>(n), 0);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        seen[static_cast<size_t>(start)] = 1;
        val[static_cast<size_t>(start)] = 0;
        std::vector<int> queue{start}, members{start};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (const Arc& a : adj[static_cast<size_t>(v)]) {
                long long want = val[static_cast<size_t>(v)] + a.delta;
                if (!seen[static_cast<size_t>(a.other)]) {
                    seen[static_cast<size_t>(a.other)] = 1;
                    val[static_cast<size_t>(a.other)] = want;
                    queue.push_back(a.other);
                    members.push_back(a.other);
                } else if (val[static_cast<size_t>(a.other)] != want) {
                    return std::nullopt;
                }
            }
        }
        long long lo = std::numeric_limits<long long>::max();
        for (int v : members) lo = std::min(lo, val[static_cast<size_t>(v)]);
        for (int v : members) val[static_cast<size_t>(v)] -= lo;
    }
    return RankFunction{std::move(val)};
}

std::optional<RankFunction> find_rank_function(const Quiver& q) {
    return find_rank_function(q, EdgeMask::all(q.edge_count()));
}

namespace {

// Path from v up to the root of its forest tree, as a vertex list.
std::vector<int> path_to_root(int v, const std::vector<int>& parent) {
    std::vector<int> path{v};
    while (parent[static_cast<size_t>(v)] != -1) {
        v = parent[static_cast<size_t>(v)];
        path.push_back(v);
    }
    return path;
}

} // namespace

bool check_cycle_balance(const Quiver& q, const EdgeMask& mask) {
    if (!is_asymmetric(q, mask)) return false;

    const int n = q.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n)); // (other, edge idx)
    for (int i = 0; i < q.edge_count(); ++i) {
        if (!mask.test(i)) continue;
        adj[static_cast<size_t>(q.edge(i).tail)].emplace_back(q.edge(i).head, i);
        adj[static_cast<size_t>(q.edge(i).head)].emplace_back(q.edge(i).tail, i);
    }

    // BFS spanning forest
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<char> tree_edge(static_cast<size_t>(q.edge_count()), 0);
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        seen[static_cast<size_t>(start)] = 1;
        std::vector<int> queue{start};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (auto [w, e] : adj[static_cast<size_t>(v)]) {
                if (seen[static_cast<size_t>(w)]) continue;
                seen[static_cast<size_t>(w)] = 1;
                parent[static_cast<size_t>(w)] = v;
                tree_edge[static_cast<size_t>(e)] = 1;
                queue.push_back(w);
            }
        }
    }

    // Each non-tree edge closes one fundamental cycle; materialize it as a
    // closed vertex walk and count forward vs backward steps.
    for (int e = 0; e < q.edge_count(); ++e) {
        if (!mask.test(e) || tree_edge[static_cast<size_t>(e)]) continue;
        int u = q.edge(e).tail;
        int v = q.edge(e).head;
        auto pu = path_to_root(u, parent);
        auto pv = path_to_root(v, parent);
        // strip the common tail, keep the meeting vertex once
        while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
            pu.pop_back();
            pv.pop_back();
        }
        // closed walk: u .. lca .. v, then the edge (u,v) traversed v->u
        std::vector<int> walk = pu;
        for (size_t i = pv.size(); i-- > 1;) walk.push_back(pv[i - 1]);
        walk.push_back(u);

        int forward = 0, backward = 0;
        for (size_t i = 0; i + 1 < walk.size(); ++i) {
            int a = walk[i], b = walk[i + 1];
            auto fwd = q.edge_index(a, b);
            if (fwd && mask.test(*fwd))
                ++forward;
            else
                ++backward;
        }
        if (forward != backward) return false;
    }
    return true;
}

bool check_cycle_balance(const Quiver& q) {
    return check_cycle_balance(q, EdgeMask::all(q.edge_count()));
}

} // namespace qface
