#include "arce/bound.hpp"

#include <cmath>

#include "arce/entropy.hpp"

namespace arce {

namespace {

void require_alpha_below_one(double alpha, const char* what) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw AlphaOutOfRange(std::string(what) + ": alpha outside [0,1)");
}

void require_dim(std::size_t d, const char* what) {
    if (d < 2) throw EpsOutOfRange(std::string(what) + ": dimension must be >= 2");
}

} // namespace

double gamma(double alpha, double eps, std::size_t d) {
    require_alpha_below_one(alpha, "gamma");
    require_dim(d, "gamma");
    const double cap = 1.0 - 1.0 / static_cast<double>(d);
    if (!(eps >= 0.0 && eps <= cap)) throw EpsOutOfRange("gamma: eps outside [0, 1-1/d]");
    if (eps == 0.0) return 0.0;
    const double dm1 = static_cast<double>(d - 1);
    const double val = std::pow(1.0 - eps, alpha) + std::pow(dm1, 1.0 - alpha) * std::pow(eps, alpha);
    return std::log2(val) / (1.0 - alpha);
}

double shannon_limit_bound(double eps, std::size_t d) {
    require_dim(d, "shannon_limit_bound");
    const double cap = 1.0 - 1.0 / static_cast<double>(d);
    if (!(eps >= 0.0 && eps <= cap))
        throw EpsOutOfRange("shannon_limit_bound: eps outside [0, 1-1/d]");
    return eps * std::log2(static_cast<double>(d - 1)) + binary_entropy(eps);
}

double f_step_e(double u, double alpha, std::size_t d, double t_tilde) {
    if (!(u >= 0.0)) throw ParamOutOfRange("f_step_e: u must be >= 0");
    if (!(alpha >= 0.0 && alpha < 1.0)) throw ParamOutOfRange("f_step_e: alpha outside [0,1)");
    if (d < 2) throw ParamOutOfRange("f_step_e: dimension must be >= 2");
    const double cap = 1.0 - 1.0 / static_cast<double>(d);
    if (!(t_tilde > 0.0 && t_tilde <= cap))
        throw ParamOutOfRange("f_step_e: t_tilde outside (0, 1-1/d]");
    const double dm1 = static_cast<double>(d - 1);
    const double first = std::pow(u, alpha) + std::pow(dm1, 1.0 - alpha) * std::pow(t_tilde, alpha);
    return std::log2(first) - alpha * std::log2(u + t_tilde);
}

double g_mono(double u, double alpha, std::size_t d) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw ParamOutOfRange("g_mono: alpha outside [0,1)");
    if (d < 2) throw ParamOutOfRange("g_mono: dimension must be >= 2");
    const double cap = 1.0 - 1.0 / static_cast<double>(d);
    if (!(u > 0.0 && u <= cap)) throw ParamOutOfRange("g_mono: u outside (0, 1-1/d]");
    const double dm1 = static_cast<double>(d - 1);
    return std::pow(1.0 - u, alpha) + std::pow(dm1, 1.0 - alpha) * std::pow(u, alpha);
}

BoundCertificate check_continuity_bound(const JointDistribution& p, const JointDistribution& q,
                                        double alpha, double eps_budget) {
    if (p.nx() != q.nx() || p.ny() != q.ny())
        throw ShapeMismatch("check_continuity_bound: shapes differ");
    require_alpha_below_one(alpha, "check_continuity_bound");
    const std::size_t d = p.nx();
    require_dim(d, "check_continuity_bound");
    const double cap = 1.0 - 1.0 / static_cast<double>(d);
    if (!(eps_budget > 0.0 && eps_budget <= cap))
        throw EpsOutOfRange("check_continuity_bound: eps_budget outside (0, 1-1/d]");

    const double tv = tv_distance(p, q).value;
    if (tv > eps_budget + 1e-12)
        throw TvBudgetExceeded("check_continuity_bound: tv " + std::to_string(tv) +
                               " exceeds budget " + std::to_string(eps_budget));

    BoundCertificate cert;
    cert.alpha = alpha;
    cert.eps_budget = eps_budget;
    cert.dimension = d;
    cert.tv_actual = tv;
    const AlphaOrder a(alpha);
    cert.lhs = std::abs(arce(p, a) - arce(q, a));
    cert.rhs = gamma(alpha, eps_budget, d);
    cert.slack = cert.rhs - cert.lhs;
    cert.holds = cert.slack >= -1e-9;
    return cert;
}

} // namespace arce
