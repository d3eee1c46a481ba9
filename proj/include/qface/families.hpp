#ifndef QFACE_FAMILIES_HPP
#define QFACE_FAMILIES_HPP

#include "qface/faces.hpp"
#include "qface/quiver.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace qface {
namespace families {

/// Directed path 0 -> 1 -> ... -> n (n edges).
Quiver path(int n);

/// Orientation of an m-gon from a word over {+,-}: edge i joins vertices
/// i-1 and i (mod m), forward on '+', backward on '-'. Length >= 3.
Quiver polygon(const std::string& word);

/// D(C_m): the double of the m-cycle.
Quiver double_cycle(int m);

/// D(K_m): the double of the complete graph.
Quiver double_complete(int m);

/// Loop-free duplicate-free random quiver, reproducible from the seed.
Quiver random_quiver(int vertices, int edges, uint64_t seed);

Graph cycle_graph(int m);
Graph path_graph(int n);
Graph complete_graph(int m);

/// Family selector for the CLI and for the closed-form table.
struct Family {
    enum class Kind { Path, Polygon, DoubleCycle, DoubleComplete, Random } kind;
    int n = 0;          // size parameter
    std::string word;   // polygon only
    int edges = 0;      // random only
    uint64_t seed = 0;  // random only
};

Quiver generate(const Family& f);

/// Closed-form face counts where known: simplices for paths, the balanced
/// polygon formula, and the cycle-double formulas (even cycles use the
/// strict index bounds with the separate facet count; odd cycles count
/// vertex subsets of simplex facets, i.e. the inclusive bounds).
/// nullopt when no closed form is covered.
std::optional<FVector> closed_form_fvector(const Family& f);

} // namespace families
} // namespace qface

#endif
