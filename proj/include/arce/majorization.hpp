#pragma once

#include <optional>

#include "arce/entropy.hpp"
#include "arce/prob.hpp"

namespace arce {

// Absolute tolerance for prefix-sum and total-sum comparisons.
inline constexpr double kMajTol = 1e-12;

struct MajorizationVerdict {
    bool holds = false;
    // first k (1-based) where the sorted prefix inequality fails
    std::optional<std::size_t> failing_prefix;
    // total(u) - total(v) when the sums disagree beyond tolerance
    std::optional<double> sum_mismatch;
};

// Verdict for u majorized-by v: sorted-descending prefix sums of u never
// exceed those of v, totals equal within kMajTol.
MajorizationVerdict majorizes(const std::vector<double>& u, const std::vector<double>& v);

// Verdict for q X-majorized-by p: equal Y-marginals (within 1e-10) and
// columnwise majorization of the unnormalized columns.
MajorizationVerdict x_majorizes(const JointDistribution& q, const JointDistribution& p);

// Moves s from v[i] to v[0] in a sorted non-increasing vector (0-based i >= 1).
// The input is majorized by the result.
std::vector<double> transfer_to_top(std::vector<double> v, std::size_t i, double s);

// Moves s from v[i] into an empty slot v[j] (0-based). The result is majorized
// by the input.
std::vector<double> spill_to_zero_slot(std::vector<double> v, std::size_t i, std::size_t j, double s);

// With v2 majorized by v and perp supported where both vanish, checks that
// v2 + perp is still majorized by v + perp. True under the preconditions.
bool check_orthogonal_padding(const std::vector<double>& v, const std::vector<double>& v2,
                              const std::vector<double>& perp);

// Requires x_majorizes(q, p).holds; returns arce(p,a) <= arce(q,a) + 1e-9,
// the marginal Schur-concavity of the ARCE. True under the precondition.
bool marginal_schur_concavity_witness(const JointDistribution& p, const JointDistribution& q,
                                      AlphaOrder a);

} // namespace arce
