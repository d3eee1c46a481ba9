#ifndef QFACE_FACES_HPP
#define QFACE_FACES_HPP

#include "qface/quiver.hpp"
#include "qface/rank.hpp"
#include "qface/rational.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace qface {

/// Outcome of the facet test, with the condition that decided it.
struct FacetCheck {
    bool facet = false;
    int condition = 0; // 1 component split, 2 rank sign; 0 when not a facet
    std::string reason;

    explicit operator bool() const { return facet; }
};

/// Facet test for the lluf subquiver r of q: the dimension must drop by
/// exactly one, and either r splits one component of q (componentwise full,
/// acyclic contraction) or r spans with a rank function whose excluded-edge
/// values rho(tail)-rho(head)+1 are nonzero of constant sign.
FacetCheck is_facet(const Quiver& q, const EdgeSubset& r);
FacetCheck is_facet(const Quiver& q, const EdgeMask& ambient, const EdgeMask& r);

/// Face test for quivers with a rank function: every component of r full
/// and the contraction acyclic. r must be a proper subquiver. Throws
/// NoRankFunction when q has none.
bool is_face_ranked(const Quiver& q, const EdgeSubset& r);

/// All facets of DE(q), one mask each, sorted. Every edge subset is tried
/// when the edge count is at most the exhaustive threshold; above it a
/// pruned candidate search runs (component bipartitions for the split
/// condition, kernel edge sets of sign-consistent integer labelings for the
/// rank condition).
std::vector<EdgeMask> enumerate_facets(const Quiver& q);
std::vector<EdgeMask> enumerate_facets(const Quiver& q, const EdgeMask& ambient);

/// All faces keyed by edge mask, graded by dimension; includes the empty
/// face (dim -1) and the full polytope.
struct FaceLattice {
    int dim = -1;
    std::unordered_map<EdgeMask, int, EdgeMaskHash> dim_of;

    bool contains(const EdgeMask& m) const { return dim_of.count(m) > 0; }
    size_t size() const { return dim_of.size(); }
    /// Masks sorted for deterministic iteration.
    std::vector<EdgeMask> sorted_masks() const;
};

FaceLattice face_lattice(const Quiver& q);

/// Counts of proper nonempty faces by dimension, f_0 .. f_{dim-1}.
struct FVector {
    int dim = -1;
    std::vector<Int> counts;

    friend bool operator==(const FVector&, const FVector&) = default;
};

FVector f_vector(const Quiver& q);
FVector f_vector(const FaceLattice& lattice);

/// Euler relation for the proper part of the lattice.
bool euler_relation_holds(const FVector& f);

/// Facet test for a symmetric double: r spans as many components as D(g)
/// and some vertex labeling steps by exactly +1/-1/0 across each edge of g
/// according to the orientation kept in r. `potential` carries a witness on
/// success. Requires dim DE(r) = dim SE(g) - 1.
struct SymmetricFacetCheck {
    bool facet = false;
    std::optional<std::vector<long long>> potential;

    explicit operator bool() const { return facet; }
};

SymmetricFacetCheck is_facet_symmetric(const Graph& g, const EdgeSubset& r);

/// Validates a labeling against the two spanning-subgraph conditions for a
/// connected graph g: |rho(v)-rho(w)| <= 1 on every edge, and the tight
/// quiver E^rho = {(v,w) : rho(v) = rho(w)+1} connected and spanning.
/// Returns E^rho as a mask over double_quiver(g) on success.
struct HigashitaniResult {
    std::optional<EdgeMask> edge_set;
    std::string reject_reason;

    explicit operator bool() const { return edge_set.has_value(); }
};

HigashitaniResult higashitani_check(const Graph& g, const std::vector<long long>& rho);

} // namespace qface

#endif
