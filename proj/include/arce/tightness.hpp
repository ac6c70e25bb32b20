#pragma once

#include <cstdint>
#include <utility>

#include "arce/prob.hpp"

namespace arce {

// Outcome of one hill-climbing run. best_ratio is the maximum over every
// in-budget pair whose total variation stayed within the budget; by the
// continuity bound it can never exceed 1 beyond rounding.
struct SearchResult {
    double best_ratio;
    JointDistribution best_p;
    JointDistribution best_q;
    std::uint64_t iterations;  // proposals generated (budget consumed)
    std::uint64_t evaluations; // proposals that passed the tv gate and were scored
    std::uint64_t seed;
};

// The saturating pair: q is a point mass at cell (1,1); p keeps 1-eps there
// and spreads eps evenly over the rest of column 1. Returned as (p, q).
std::pair<JointDistribution, JointDistribution> extremal_pair(std::size_t d, std::size_t ny,
                                                              double eps);

// |arce(p,alpha) - arce(q,alpha)| / gamma(alpha, eps, nx). eps = 0 demands
// p = q and returns 0 by convention.
double saturation_ratio(const JointDistribution& p, const JointDistribution& q, double alpha,
                        double eps);

// Steepest-ascent hill climbing over pairs: from each start, enumerate every
// single-cell transfer of size delta in p or q (delta sweeping 1e-1, 1e-2,
// 1e-3), apply the best improving move, restart from a fresh random pair when
// stuck, until budget proposals are spent. Deterministic in seed.
SearchResult search_sup_ratio(std::size_t nx, std::size_t ny, double alpha, double eps,
                              std::uint64_t budget, std::uint64_t seed,
                              bool seed_extremal = true);

} // namespace arce
