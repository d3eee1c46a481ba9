#ifndef QFACE_RANK_HPP
#define QFACE_RANK_HPP

#include "qface/quiver.hpp"

#include <optional>
#include <vector>

namespace qface {

/// Vertex labeling with value(head) = value(tail) + 1 on every edge,
/// normalized so the minimum on each connected component is 0. Unique per
/// quiver under that normalization.
struct RankFunction {
    std::vector<long long> values; // indexed by vertex

    long long at(int v) const { return values[static_cast<size_t>(v)]; }
};

/// Normalized rank function of the (sub)quiver, or nullopt if none exists.
std::optional<RankFunction> find_rank_function(const Quiver& q);
std::optional<RankFunction> find_rank_function(const Quiver& q, const EdgeMask& mask);

/// True iff the quiver is asymmetric and every cycle of a fundamental cycle
/// basis of its underlying graph has equally many forward and backward
/// edges. Checks the cycles explicitly; does not propagate a potential.
bool check_cycle_balance(const Quiver& q);
bool check_cycle_balance(const Quiver& q, const EdgeMask& mask);

} // namespace qface

#endif
