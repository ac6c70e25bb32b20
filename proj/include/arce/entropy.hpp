#pragma once

#include "arce/prob.hpp"

namespace arce {

// Rényi order. alpha >= 0; the value 1 itself is rejected by the direct
// formulas (callers route to the Shannon forms instead).
struct AlphaOrder {
    double alpha;

    explicit AlphaOrder(double a) : alpha(a) {
        if (!(a >= 0.0)) throw OutOfRange("AlphaOrder: alpha must be >= 0");
    }
};

// Guard band around alpha = 1 where the direct formulas lose precision.
inline constexpr double kAlphaOneGuard = 1e-6;

// All entropies are in bits (logarithms base 2).

double shannon_entropy(const ProbVector& v);

// (1/(1-a)) log2 sum v^a; a = 0 returns log2 |supp(v)|.
double renyi_entropy(const ProbVector& v, AlphaOrder a);

// H(X|Y) = sum_y p_Y(y) H(p_{X|Y=y}); zero-marginal columns contribute 0.
double cond_shannon(const JointDistribution& p);

// Arimoto-Rényi conditional entropy
//   (a/(1-a)) log2 sum_y [sum_x p(x,y)^a]^{1/a},
// with the a = 0 convention log2 max_{y : p_Y(y)>0} |supp(p_{X|Y=y})|.
double arce(const JointDistribution& p, AlphaOrder a);

double binary_entropy(double eps);

} // namespace arce
