#ifndef QFACE_LP_HPP
#define QFACE_LP_HPP

#include "qface/rational.hpp"

#include <optional>
#include <vector>

namespace qface {

/// Feasibility problem over free (sign-unrestricted) rational variables:
///   eq_lhs[i] . x  = eq_rhs[i]
///   ge_lhs[i] . x >= ge_rhs[i]
struct LPProblem {
    int num_vars = 0;
    std::vector<std::vector<Rational>> eq_lhs;
    std::vector<Rational> eq_rhs;
    std::vector<std::vector<Rational>> ge_lhs;
    std::vector<Rational> ge_rhs;
};

/// Exact phase-1 simplex with Bland's rule. Returns a feasible point, or
/// nullopt when the system is infeasible.
std::optional<std::vector<Rational>> lp_feasible_point(const LPProblem& p);

} // namespace qface

#endif
