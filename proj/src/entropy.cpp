#include "arce/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace arce {

namespace {

void reject_alpha_one(double a, const char* what) {
    if (std::abs(a - 1.0) < kAlphaOneGuard)
        throw AlphaOne(std::string(what) + ": alpha = 1; use the Shannon form");
}

} // namespace

double shannon_entropy(const ProbVector& v) {
    double h = 0.0;
    for (double x : v.entries())
        if (x > 0.0) h -= x * std::log2(x);
    return h;
}

double renyi_entropy(const ProbVector& v, AlphaOrder a) {
    reject_alpha_one(a.alpha, "renyi_entropy");
    if (a.alpha == 0.0) {
        std::size_t supp = 0;
        for (double x : v.entries())
            if (x > 0.0) ++supp;
        return std::log2(static_cast<double>(supp));
    }
    // factor out the largest mass so the power sum neither overflows for
    // alpha near 0 nor underflows for large alpha
    double m = 0.0;
    for (double x : v.entries()) m = std::max(m, x);
    double s = 0.0;
    for (double x : v.entries())
        if (x > 0.0) s += std::pow(x / m, a.alpha);
    return (a.alpha * std::log2(m) + std::log2(s)) / (1.0 - a.alpha);
}

double cond_shannon(const JointDistribution& p) {
    // direct column form avoids the H(XY) - H(Y) cancellation
    double h = 0.0;
    for (std::size_t y = 0; y < p.ny(); ++y) {
        double py = 0.0;
        for (std::size_t x = 0; x < p.nx(); ++x) py += p(x, y);
        if (py <= 0.0) continue;
        for (std::size_t x = 0; x < p.nx(); ++x) {
            const double c = p(x, y);
            if (c > 0.0) h -= c * std::log2(c / py);
        }
    }
    return h;
}

double arce(const JointDistribution& p, AlphaOrder a) {
    reject_alpha_one(a.alpha, "arce");
    const double alpha = a.alpha;
    if (alpha == 0.0) {
        // limit of the formula as alpha -> 0+: the largest conditional support
        // among columns carrying probability
        std::size_t best = 0;
        for (std::size_t y = 0; y < p.ny(); ++y) {
            double py = 0.0;
            std::size_t supp = 0;
            for (std::size_t x = 0; x < p.nx(); ++x) {
                py += p(x, y);
                if (p(x, y) > 0.0) ++supp;
            }
            if (py > 0.0 && supp > best) best = supp;
        }
        return std::log2(static_cast<double>(best));
    }
    // work with log2 of each column term: [sum_x p^alpha]^(1/alpha) overflows
    // directly once 1/alpha is large, while its log stays small
    std::vector<double> col_logs;
    col_logs.reserve(p.ny());
    for (std::size_t y = 0; y < p.ny(); ++y) {
        double m = 0.0;
        for (std::size_t x = 0; x < p.nx(); ++x) m = std::max(m, p(x, y));
        if (m <= 0.0) continue; // empty column contributes nothing
        double inner = 0.0;     // sum of (c/m)^alpha, always in [1, nx]
        for (std::size_t x = 0; x < p.nx(); ++x) {
            const double c = p(x, y);
            if (c > 0.0) inner += std::pow(c / m, alpha);
        }
        col_logs.push_back(std::log2(m) + std::log2(inner) / alpha);
    }
    double top = col_logs.front();
    for (double l : col_logs) top = std::max(top, l);
    double outer = 0.0; // sum of 2^(l - top), always in [1, ny]
    for (double l : col_logs) outer += std::exp2(l - top);
    return (alpha / (1.0 - alpha)) * (top + std::log2(outer));
}

double binary_entropy(double eps) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw OutOfRange("binary_entropy: eps outside [0,1]");
    double h = 0.0;
    if (eps > 0.0) h -= eps * std::log2(eps);
    if (eps < 1.0) h -= (1.0 - eps) * std::log2(1.0 - eps);
    return h;
}

} // namespace arce
