#ifndef QFACE_CONFIG_HPP
#define QFACE_CONFIG_HPP

namespace qface {

inline constexpr const char* kVersion = "0.1.0";

/// Edge-count threshold up to which facet enumeration tries every edge
/// subset; above it the pruned candidate search is used instead.
/// Overridden by the QFACE_EDGE_LIMIT environment variable.
int exhaustive_edge_threshold();

/// Edge-count guard for the brute-force oracle (2^m subset probes).
/// Overridden by the QFACE_EDGE_LIMIT environment variable.
int oracle_edge_guard();

} // namespace qface

#endif
