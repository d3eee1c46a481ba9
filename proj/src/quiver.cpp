#include "qface/quiver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

namespace qface {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::UnknownFormat: return "UnknownFormat";
    case Errc::EmptyVertexSet: return "EmptyVertexSet";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::UnknownEdge: return "UnknownEdge";
    case Errc::NotComponentwiseFull: return "NotComponentwiseFull";
    case Errc::NoRankFunction: return "NoRankFunction";
    case Errc::ParentNotDouble: return "ParentNotDouble";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BadParams: return "BadParams";
    case Errc::ParseError: return "ParseError";
    }
    return "Error";
}

Quiver::Quiver(std::vector<VertexId> vertices, std::vector<std::pair<int, int>> edges)
    : vertices_(std::move(vertices)) {
    const int n = static_cast<int>(vertices_.size());
    std::sort(edges.begin(), edges.end());
    edges_.reserve(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [t, h] = edges[i];
        if (t < 0 || t >= n || h < 0 || h >= n)
            throw Error(Errc::UnknownVertex, "edge endpoint index out of range");
        if (t == h)
            throw Error(Errc::LoopEdge, "loop at vertex '" + vertices_[static_cast<size_t>(t)] + "'");
        if (i > 0 && edges[i] == edges[i - 1])
            throw Error(Errc::DuplicateEdge,
                        "duplicate edge '" + vertices_[static_cast<size_t>(t)] + " " +
                            vertices_[static_cast<size_t>(h)] + "'");
        edges_.push_back({t, h});
        edge_lookup_.emplace(std::make_pair(t, h), static_cast<int>(edges_.size()) - 1);
    }
}

Quiver Quiver::from_pairs(const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    std::vector<VertexId> verts;
    std::unordered_map<VertexId, int> index;
    auto intern = [&](const VertexId& id) {
        auto it = index.find(id);
        if (it != index.end()) return it->second;
        verts.push_back(id);
        int i = static_cast<int>(verts.size()) - 1;
        index.emplace(id, i);
        return i;
    };
    std::vector<std::pair<int, int>> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        int t = intern(a);
        int h = intern(b);
        edges.emplace_back(t, h);
    }
    return Quiver(std::move(verts), std::move(edges));
}

std::optional<int> Quiver::vertex_index(const VertexId& id) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (vertices_[static_cast<size_t>(i)] == id) return i;
    return std::nullopt;
}

std::optional<int> Quiver::edge_index(int tail, int head) const {
    auto it = edge_lookup_.find({tail, head});
    if (it == edge_lookup_.end()) return std::nullopt;
    return it->second;
}

EdgeMask EdgeMask::all(int nbits) {
    EdgeMask m(nbits);
    for (int i = 0; i < nbits; ++i) m.set(i);
    return m;
}

void EdgeMask::set(int i, bool value) {
    uint64_t bit = uint64_t{1} << (i % 64);
    if (value)
        words_[static_cast<size_t>(i) / 64] |= bit;
    else
        words_[static_cast<size_t>(i) / 64] &= ~bit;
}

int EdgeMask::count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool EdgeMask::is_subset_of(const EdgeMask& other) const {
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

EdgeMask EdgeMask::complement_within(const EdgeMask& ambient) const {
    EdgeMask out = ambient;
    for (size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~words_[i];
    return out;
}

std::vector<int> EdgeMask::indices() const {
    std::vector<int> out;
    for (int i = 0; i < nbits_; ++i)
        if (test(i)) out.push_back(i);
    return out;
}

size_t EdgeMask::hash() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<uint64_t>(nbits_));
    for (uint64_t w : words_) mix(w);
    return static_cast<size_t>(h);
}

EdgeSubset EdgeSubset::of_indices(const Quiver& q, const std::vector<int>& edge_indices) {
    EdgeMask m(q.edge_count());
    for (int i : edge_indices) {
        if (i < 0 || i >= q.edge_count())
            throw Error(Errc::UnknownEdge, "edge index out of range");
        m.set(i);
    }
    return {q, std::move(m)};
}

EdgeSubset EdgeSubset::of_id_pairs(const Quiver& q,
                                   const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    EdgeMask m(q.edge_count());
    for (const auto& [a, b] : pairs) {
        auto t = q.vertex_index(a);
        auto h = q.vertex_index(b);
        std::optional<int> e;
        if (t && h) e = q.edge_index(*t, *h);
        if (!e) throw Error(Errc::UnknownEdge, "'" + a + " " + b + "' is not an edge of the quiver");
        m.set(*e);
    }
    return {q, std::move(m)};
}

Graph::Graph(std::vector<VertexId> vertices, std::vector<std::pair<int, int>> edges)
    : vertices_(std::move(vertices)) {
    const int n = static_cast<int>(vertices_.size());
    for (auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw Error(Errc::UnknownVertex, "edge endpoint index out of range");
        if (a == b)
            throw Error(Errc::LoopEdge, "loop at vertex '" + vertices_[static_cast<size_t>(a)] + "'");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1]) throw Error(Errc::DuplicateEdge, "duplicate undirected edge");
    edges_ = std::move(edges);
}

Graph Graph::from_pairs(const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    std::vector<VertexId> verts;
    std::unordered_map<VertexId, int> index;
    auto intern = [&](const VertexId& id) {
        auto it = index.find(id);
        if (it != index.end()) return it->second;
        verts.push_back(id);
        int i = static_cast<int>(verts.size()) - 1;
        index.emplace(id, i);
        return i;
    };
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : pairs) edges.emplace_back(intern(a), intern(b));
    return Graph(std::move(verts), std::move(edges));
}

namespace {

ComponentDecomposition components_impl(int n, const std::vector<std::pair<int, int>>& undirected) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (auto [a, b] : undirected) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    ComponentDecomposition out;
    out.component_of.assign(static_cast<size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (out.component_of[static_cast<size_t>(start)] != -1) continue;
        int comp = static_cast<int>(out.components.size());
        std::vector<int> stack{start}, members;
        out.component_of[static_cast<size_t>(start)] = comp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : adj[static_cast<size_t>(v)]) {
                if (out.component_of[static_cast<size_t>(w)] == -1) {
                    out.component_of[static_cast<size_t>(w)] = comp;
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.components.push_back(std::move(members));
    }
    return out;
}

} // namespace

ComponentDecomposition components(const Quiver& q, const EdgeMask& mask) {
    std::vector<std::pair<int, int>> und;
    for (int i = 0; i < q.edge_count(); ++i)
        if (mask.test(i)) und.emplace_back(q.edge(i).tail, q.edge(i).head);
    return components_impl(q.vertex_count(), und);
}

ComponentDecomposition components(const Quiver& q) {
    return components(q, EdgeMask::all(q.edge_count()));
}

ComponentDecomposition components(const Graph& g) {
    return components_impl(g.vertex_count(), g.edges());
}

int component_count(const Quiver& q, const EdgeMask& mask) {
    return components(q, mask).count();
}

int coconnectivity(const Quiver& q, const EdgeMask& mask) {
    return q.vertex_count() - component_count(q, mask);
}

int coconnectivity(const Quiver& q) {
    return coconnectivity(q, EdgeMask::all(q.edge_count()));
}

bool is_componentwise_full(const Quiver& q, const EdgeMask& sub, const EdgeMask& ambient) {
    auto comp = components(q, sub);
    for (int i = 0; i < q.edge_count(); ++i) {
        if (!ambient.test(i)) continue;
        const Edge& e = q.edge(i);
        if (comp.component_of[static_cast<size_t>(e.tail)] ==
                comp.component_of[static_cast<size_t>(e.head)] &&
            !sub.test(i))
            return false;
    }
    return true;
}

bool is_full(const EdgeSubset& r, bool component_restricted) {
    const Quiver& q = *r.parent;
    if (component_restricted)
        return is_componentwise_full(q, r.mask, EdgeMask::all(q.edge_count()));
    // A lluf subquiver is full exactly when it keeps every parent edge.
    return r.mask == EdgeMask::all(q.edge_count());
}

namespace {

bool dag_check(int n, const std::vector<std::pair<int, int>>& edges) {
    for (auto [a, b] : edges)
        if (a == b) return false;
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (auto [a, b] : edges) adj[static_cast<size_t>(a)].push_back(b);
    // 0 unvisited, 1 on stack, 2 done
    std::vector<int> state(static_cast<size_t>(n), 0);
    std::vector<std::pair<int, size_t>> stack;
    for (int s = 0; s < n; ++s) {
        if (state[static_cast<size_t>(s)] != 0) continue;
        stack.emplace_back(s, 0);
        state[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < adj[static_cast<size_t>(v)].size()) {
                int w = adj[static_cast<size_t>(v)][next++];
                if (state[static_cast<size_t>(w)] == 1) return false;
                if (state[static_cast<size_t>(w)] == 0) {
                    state[static_cast<size_t>(w)] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                state[static_cast<size_t>(v)] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

} // namespace

bool is_directed_acyclic(const Quiver& q, const EdgeMask& mask) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < q.edge_count(); ++i)
        if (mask.test(i)) edges.emplace_back(q.edge(i).tail, q.edge(i).head);
    return dag_check(q.vertex_count(), edges);
}

bool is_directed_acyclic(const Quiver& q) {
    return is_directed_acyclic(q, EdgeMask::all(q.edge_count()));
}

bool is_directed_acyclic(const ContractedQuiver& c) {
    return dag_check(static_cast<int>(c.classes.size()), c.edges);
}

ContractedQuiver contract(const Quiver& q, const EdgeMask& sub, const EdgeMask& ambient) {
    if (!is_componentwise_full(q, sub, ambient))
        throw Error(Errc::NotComponentwiseFull,
                    "a connected component of the subquiver is not full");
    auto comp = components(q, sub);
    ContractedQuiver out;
    out.classes = std::move(comp.components);
    out.class_of = std::move(comp.component_of);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < q.edge_count(); ++i) {
        if (!ambient.test(i) || sub.test(i)) continue;
        const Edge& e = q.edge(i);
        edges.emplace_back(out.class_of[static_cast<size_t>(e.tail)],
                           out.class_of[static_cast<size_t>(e.head)]);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.edges = std::move(edges);
    return out;
}

ContractedQuiver contract(const EdgeSubset& r) {
    return contract(*r.parent, r.mask, EdgeMask::all(r.parent->edge_count()));
}

Quiver double_quiver(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * g.edges().size());
    for (auto [a, b] : g.edges()) {
        edges.emplace_back(a, b);
        edges.emplace_back(b, a);
    }
    return Quiver(g.vertices(), std::move(edges));
}

EdgeSubset spanning_polyforest(const Quiver& q) {
    std::vector<int> parent(static_cast<size_t>(q.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    EdgeMask m(q.edge_count());
    for (int i = 0; i < q.edge_count(); ++i) {
        int a = find(q.edge(i).tail);
        int b = find(q.edge(i).head);
        if (a != b) {
            parent[static_cast<size_t>(a)] = b;
            m.set(i);
        }
    }
    return {q, std::move(m)};
}

bool is_asymmetric(const Quiver& q, const EdgeMask& mask) {
    for (int i = 0; i < q.edge_count(); ++i) {
        if (!mask.test(i)) continue;
        auto rev = q.edge_index(q.edge(i).head, q.edge(i).tail);
        if (rev && mask.test(*rev)) return false;
    }
    return true;
}

} // namespace qface
