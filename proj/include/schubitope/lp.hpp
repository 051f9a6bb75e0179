#ifndef SCHUBITOPE_LP_HPP
#define SCHUBITOPE_LP_HPP

#include <vector>

#include "schubitope/types.hpp"

namespace schub {

// Exact feasibility of { A x = b, x >= 0 }: phase-1 simplex over mpq with
// Bland's anti-cycling rule and lowest-index pivots.
bool lp_feasible(std::vector<std::vector<Rat>> a, std::vector<Rat> b);

// Is p a convex combination of the given points?
bool in_convex_hull(const std::vector<int>& p, const std::vector<std::vector<int>>& points);

}  // namespace schub

#endif
