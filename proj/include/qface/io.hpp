#ifndef QFACE_IO_HPP
#define QFACE_IO_HPP

#include "qface/quiver.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qface {

/// Accepts either format: edge-list text ("tail head" per line, '#'
/// comments, vertices implicit in first-appearance order) or a JSON object
/// {"vertices": [...], "edges": [[t,h], ...]} with explicit vertices.
Quiver parse_quiver(const std::string& text);

/// Edge pairs from inline text; pairs separated by commas, semicolons or
/// newlines. Used for the --sub argument.
std::vector<std::pair<VertexId, VertexId>> parse_edge_pairs(const std::string& text);

std::string to_edge_list(const Quiver& q);
std::string to_json_text(const Quiver& q);

/// Canonical serialization: vertices sorted by id, edges sorted by id
/// pairs. Identical for any input ordering of the same quiver.
std::string canonical_text(const Quiver& q);

/// FNV-1a hash of the canonical serialization, as fixed-width hex.
std::string input_digest(const Quiver& q);

} // namespace qface

#endif
