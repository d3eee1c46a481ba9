#ifndef QFACE_GEOMETRY_HPP
#define QFACE_GEOMETRY_HPP

#include "qface/quiver.hpp"
#include "qface/rational.hpp"

#include <cstdint>
#include <vector>

namespace qface {

/// Point of R^{Q0}, indexed by vertex.
using RationalVector = std::vector<Rational>;

Rational inner_product(const RationalVector& a, const RationalVector& b);

/// Indicator vector of a vertex subset.
RationalVector indicator(const Quiver& q, const std::vector<int>& vertex_set);

/// e_tail - e_head for the given edge index.
RationalVector edge_vector(const Quiver& q, int edge_index);

/// Vertex-by-edge matrix with +1 at the tail and -1 at the head of each
/// column; columns follow the canonical edge order.
struct IncidenceMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int8_t> entries; // row-major

    int at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
};

IncidenceMatrix incidence_matrix(const Quiver& q);

/// Rank over Q, by fraction-free (Bareiss) elimination after clearing
/// denominators column by column.
int matrix_rank(std::vector<std::vector<Rational>> rows);
int matrix_rank(const IncidenceMatrix& m);

/// Dimension of the affine hull: -1 for no points, 0 for a single point.
int affine_dim(const std::vector<RationalVector>& points);

/// Dimension of the directed edge polytope: coconnectivity minus one when a
/// rank function exists, coconnectivity otherwise. Empty edge set gives -1
/// (empty polytope).
int dim_de(const Quiver& q);
int dim_de(const Quiver& q, const EdgeMask& mask);

} // namespace qface

#endif
