#ifndef QFACE_QUIVER_HPP
#define QFACE_QUIVER_HPP

#include "qface/errors.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qface {

using VertexId = std::string;

/// Directed edge as a pair of vertex indices into the owning quiver.
struct Edge {
    int tail = -1;
    int head = -1;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite quiver: no loops, no multiedges. Vertex ids are opaque strings;
/// internal indices follow the order of the vertex list. Edges are kept
/// sorted by (tail, head) so that edge masks are stable keys.
class Quiver {
public:
    Quiver() = default;

    /// Validating constructor; edges are index pairs into `vertices`.
    Quiver(std::vector<VertexId> vertices, std::vector<std::pair<int, int>> edges);

    /// Builds the vertex list from first appearance in `pairs`.
    static Quiver from_pairs(const std::vector<std::pair<VertexId, VertexId>>& pairs);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[static_cast<size_t>(i)]; }
    const VertexId& vertex(int i) const { return vertices_[static_cast<size_t>(i)]; }

    std::optional<int> vertex_index(const VertexId& id) const;
    std::optional<int> edge_index(int tail, int head) const;
    bool has_edge(int tail, int head) const { return edge_index(tail, head).has_value(); }

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    std::map<std::pair<int, int>, int> edge_lookup_;
};

/// Subset of a quiver's edges as a bitset over canonical edge indices.
class EdgeMask {
public:
    EdgeMask() = default;
    explicit EdgeMask(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static EdgeMask none(int nbits) { return EdgeMask(nbits); }
    static EdgeMask all(int nbits);

    int size() const { return nbits_; }
    bool test(int i) const { return (words_[static_cast<size_t>(i) / 64] >> (i % 64)) & 1u; }
    void set(int i, bool value = true);
    int count() const;
    bool empty() const { return count() == 0; }

    bool is_subset_of(const EdgeMask& other) const;
    EdgeMask complement_within(const EdgeMask& ambient) const;

    std::vector<int> indices() const;

    friend bool operator==(const EdgeMask&, const EdgeMask&) = default;
    friend auto operator<=>(const EdgeMask&, const EdgeMask&) = default;

    size_t hash() const;

private:
    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

struct EdgeMaskHash {
    size_t operator()(const EdgeMask& m) const { return m.hash(); }
};

/// Lluf subquiver of `parent`: all vertices, the masked edges.
struct EdgeSubset {
    const Quiver* parent = nullptr;
    EdgeMask mask;

    EdgeSubset() = default;
    EdgeSubset(const Quiver& q, EdgeMask m) : parent(&q), mask(std::move(m)) {}

    static EdgeSubset full(const Quiver& q) { return {q, EdgeMask::all(q.edge_count())}; }
    static EdgeSubset empty(const Quiver& q) { return {q, EdgeMask::none(q.edge_count())}; }
    static EdgeSubset of_indices(const Quiver& q, const std::vector<int>& edge_indices);
    /// Looks up each (tail id, head id) pair; throws UnknownEdge if absent.
    static EdgeSubset of_id_pairs(const Quiver& q,
                                  const std::vector<std::pair<VertexId, VertexId>>& pairs);
};

/// Connected components of the underlying undirected graph; isolated
/// vertices form singleton components. Component order follows the
/// smallest contained vertex index.
struct ComponentDecomposition {
    std::vector<std::vector<int>> components;
    std::vector<int> component_of;

    int count() const { return static_cast<int>(components.size()); }
};

/// Quotient of a quiver by the components of a subquiver: classes are the
/// component vertex sets, edges the surviving parent edges between classes
/// (deduplicated). A loop class-edge can only be present if the object was
/// assembled without the fullness check.
struct ContractedQuiver {
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;
    std::vector<std::pair<int, int>> edges;
};

/// Simple undirected graph; edges stored as (min,max) index pairs.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<VertexId> vertices, std::vector<std::pair<int, int>> edges);
    static Graph from_pairs(const std::vector<std::pair<VertexId, VertexId>>& pairs);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexId> vertices_;
    std::vector<std::pair<int, int>> edges_;
};

ComponentDecomposition components(const Quiver& q);
ComponentDecomposition components(const Quiver& q, const EdgeMask& mask);
ComponentDecomposition components(const Graph& g);

int component_count(const Quiver& q, const EdgeMask& mask);

/// |Q0| - |pi0(Q)|.
int coconnectivity(const Quiver& q);
int coconnectivity(const Quiver& q, const EdgeMask& mask);

/// With component_restricted set (the default), checks that every connected
/// component of r induces in the parent exactly r's edges within that
/// component. Without it, plain fullness of the lluf subquiver (mask == all).
bool is_full(const EdgeSubset& r, bool component_restricted = true);

/// Componentwise fullness of `sub` within the lluf subquiver `ambient`.
bool is_componentwise_full(const Quiver& q, const EdgeMask& sub, const EdgeMask& ambient);

bool is_directed_acyclic(const Quiver& q);
bool is_directed_acyclic(const Quiver& q, const EdgeMask& mask);
bool is_directed_acyclic(const ContractedQuiver& c);

/// Contraction by r; requires every component of r to be full in the parent.
ContractedQuiver contract(const EdgeSubset& r);
ContractedQuiver contract(const Quiver& q, const EdgeMask& sub, const EdgeMask& ambient);

/// The double D(G): both orientations of every undirected edge.
Quiver double_quiver(const Graph& g);

/// Edge subset whose underlying graph is a spanning forest, chosen greedily
/// in canonical edge order.
EdgeSubset spanning_polyforest(const Quiver& q);

bool is_asymmetric(const Quiver& q, const EdgeMask& mask);

} // namespace qface

#endif
