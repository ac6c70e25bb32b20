#pragma once

#include "arce/prob.hpp"

namespace arce {

struct BoundCertificate {
    double alpha = 0.0;
    double eps_budget = 0.0;
    std::size_t dimension = 0;
    double tv_actual = 0.0;
    double lhs = 0.0;   // |delta ARCE| in bits
    double rhs = 0.0;   // gamma(alpha, eps_budget, dimension) in bits
    double slack = 0.0; // rhs - lhs
    bool holds = false; // slack >= -1e-9
};

// The continuity bound
//   gamma(a, eps, d) = (1/(1-a)) log2((1-eps)^a + (d-1)^{1-a} eps^a),
// defined for a in [0,1), d >= 2, eps in [0, 1-1/d]; gamma(a,0,d) = 0.
double gamma(double alpha, double eps, std::size_t d);

// Shannon-limit form: eps*log2(d-1) + h(eps).
double shannon_limit_bound(double eps, std::size_t d);

// f(u) = log2[u^a + (d-1)^{1-a} t~^a] - log2[(u+t~)^a]; decreasing for
// u >= 1 - t~. Feeds the monotone step of the proof chain.
double f_step_e(double u, double alpha, std::size_t d, double t_tilde);

// g(u) = (1-u)^a + (d-1)^{1-a} u^a; increasing on (0, 1-1/d].
double g_mono(double u, double alpha, std::size_t d);

// Certifies |arce(p,a) - arce(q,a)| <= gamma(a, eps_budget, nx) for a pair
// within the TV budget. Throws TvBudgetExceeded when tv(p,q) > eps_budget.
BoundCertificate check_continuity_bound(const JointDistribution& p, const JointDistribution& q,
                                        double alpha, double eps_budget);

} // namespace arce
