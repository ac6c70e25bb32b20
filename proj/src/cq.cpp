#include "arce/cq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace arce {

namespace {

constexpr double kHermTol = 1e-12;
constexpr double kPsdTol = 1e-10;
constexpr double kSupportTol = 1e-10;
constexpr double kOffDiagStop = 1e-13;
constexpr int kMaxSweeps = 100;

void require_hermitian(const CMatrix& m, const char* what) {
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = i; j < m.dim(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > kHermTol)
                throw NotHermitian(std::string(what) + ": matrix is not Hermitian");
}

double off_diagonal_norm(const CMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j) s += std::norm(a(i, j));
    return std::sqrt(2.0 * s);
}

// One complex plane rotation zeroing a(p,q); a <- G^dagger a G, v <- v G.
void jacobi_rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double b = std::abs(apq);
    if (b == 0.0) return;
    const Complex phase = apq / b;
    const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * b);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t d = a.dim();
    for (std::size_t k = 0; k < d; ++k) { // a <- a G
        const Complex akp = a(k, p), akq = a(k, q);
        a(k, p) = c * akp - s * std::conj(phase) * akq;
        a(k, q) = s * phase * akp + c * akq;
    }
    for (std::size_t k = 0; k < d; ++k) { // a <- G^dagger a
        const Complex apk = a(p, k), aqk = a(q, k);
        a(p, k) = c * apk - s * phase * aqk;
        a(q, k) = s * std::conj(phase) * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);
    for (std::size_t k = 0; k < d; ++k) { // v <- v G
        const Complex vkp = v(k, p), vkq = v(k, q);
        v(k, p) = c * vkp - s * std::conj(phase) * vkq;
        v(k, q) = s * phase * vkp + c * vkq;
    }
}

} // namespace

std::size_t CMatrix::check_dim(std::size_t d) {
    if (d == 0) throw OutOfRange("CMatrix: dimension must be positive");
    return d;
}

CMatrix::CMatrix(std::size_t d, std::vector<Complex> entries)
    : d_(check_dim(d)), a_(std::move(entries)) {
    if (a_.size() != d_ * d_) throw ShapeMismatch("CMatrix: entry count does not match dimension");
}

CMatrix CMatrix::identity(std::size_t d) {
    CMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix multiply(const CMatrix& a, const CMatrix& b) {
    if (a.dim() != b.dim()) throw ShapeMismatch("multiply: dimensions differ");
    const std::size_t d = a.dim();
    CMatrix out(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < d; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

CMatrix adjoint(const CMatrix& a) {
    CMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = std::conj(a(j, i));
    return out;
}

Complex trace(const CMatrix& a) {
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
    return t;
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
    if (a.dim() != b.dim()) throw ShapeMismatch("frobenius_distance: dimensions differ");
    double s = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) s += std::norm(a.entries()[i] - b.entries()[i]);
    return std::sqrt(s);
}

Spectrum hermitian_eig(const CMatrix& m) {
    const std::size_t d = m.dim();
    if (d > 64) throw OutOfRange("hermitian_eig: dimension above 64");
    require_hermitian(m, "hermitian_eig");

    // iterate on the exactly Hermitian average of m and its adjoint
    CMatrix a(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
        a(i, i) = Complex(a(i, i).real(), 0.0);
    }
    CMatrix v = CMatrix::identity(d);

    int sweeps = 0;
    while (off_diagonal_norm(a) > kOffDiagStop) {
        if (++sweeps > kMaxSweeps) throw NoConvergence("hermitian_eig: sweep limit reached");
        for (std::size_t p = 0; p + 1 < d; ++p)
            for (std::size_t q = p + 1; q < d; ++q) jacobi_rotate(a, v, p, q);
    }

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });
    Spectrum out{std::vector<double>(d), CMatrix(d)};
    for (std::size_t k = 0; k < d; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < d; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

DensityMatrix::DensityMatrix(CMatrix m) : m_(std::move(m)) {
    require_hermitian(m_, "DensityMatrix");
    if (std::abs(trace(m_) - 1.0) > 1e-10) throw NotNormalized("DensityMatrix: trace is not 1");
    const Spectrum s = hermitian_eig(m_);
    if (s.eigenvalues.back() < -kPsdTol)
        throw NegativeEntry("DensityMatrix: negative eigenvalue");
}

CQState::CQState(ProbVector weights, std::vector<DensityMatrix> blocks)
    : weights_(std::move(weights)), blocks_(std::move(blocks)) {
    if (blocks_.empty() || blocks_.size() != weights_.size())
        throw ShapeMismatch("CQState: one block per weight required");
    for (const DensityMatrix& b : blocks_)
        if (b.dim() != blocks_.front().dim())
            throw ShapeMismatch("CQState: blocks have mixed dimensions");
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const Spectrum s = hermitian_eig(rho.matrix());
    double h = 0.0;
    for (double lam : s.eigenvalues)
        if (lam > 0.0) h -= lam * std::log2(lam);
    return h;
}

JointDistribution spectral_joint(const CQState& rho) {
    const std::size_t d = rho.d_a(), ny = rho.ny();
    std::vector<double> cells(d * ny, 0.0);
    for (std::size_t y = 0; y < ny; ++y) {
        const Spectrum s = hermitian_eig(rho.blocks()[y].matrix());
        for (std::size_t x = 0; x < d; ++x) cells[x * ny + y] = rho.weights()[y] * s.eigenvalues[x];
    }
    return JointDistribution(d, ny, std::move(cells));
}

double cond_entropy_cq(const CQState& rho) {
    double h = 0.0;
    for (std::size_t y = 0; y < rho.ny(); ++y)
        if (rho.weights()[y] > 0.0) h += rho.weights()[y] * von_neumann_entropy(rho.blocks()[y]);
    return h;
}

double cond_renyi_cq(const CQState& rho, AlphaOrder a) { return arce(spectral_joint(rho), a); }

double renyi_divergence(const DensityMatrix& rho, const DensityMatrix& sigma, AlphaOrder a) {
    if (rho.dim() != sigma.dim()) throw ShapeMismatch("renyi_divergence: dimensions differ");
    const double alpha = a.alpha;
    if (std::abs(alpha - 1.0) < kAlphaOneGuard)
        throw AlphaOne("renyi_divergence: alpha too close to 1");
    const std::size_t d = rho.dim();
    const Spectrum sr = hermitian_eig(rho.matrix());
    const Spectrum ss = hermitian_eig(sigma.matrix());

    // squared overlaps |<u_i|w_j>|^2 between the two eigenbases
    std::vector<double> ov(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Complex ip = 0.0;
            for (std::size_t k = 0; k < d; ++k)
                ip += std::conj(sr.eigenvectors(k, i)) * ss.eigenvectors(k, j);
            ov[i * d + j] = std::norm(ip);
        }

    double leak = 0.0; // rho-support weight landing in the kernel of sigma
    for (std::size_t i = 0; i < d; ++i) {
        if (sr.eigenvalues[i] <= kSupportTol) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (ss.eigenvalues[j] <= kSupportTol) leak += ov[i * d + j];
    }
    if (leak > 1e-9) return std::numeric_limits<double>::infinity();

    double total = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        if (sr.eigenvalues[i] <= kSupportTol) continue;
        const double ra = std::pow(sr.eigenvalues[i], alpha);
        for (std::size_t j = 0; j < d; ++j) {
            if (ss.eigenvalues[j] <= kSupportTol) continue;
            total += ra * std::pow(ss.eigenvalues[j], 1.0 - alpha) * ov[i * d + j];
        }
    }
    if (!(total > 0.0)) return std::numeric_limits<double>::infinity();
    return std::log2(total) / (alpha - 1.0);
}

JointDistribution dephase_conditional(const CQState& sigma, const CQState& basis_source) {
    if (sigma.d_a() != basis_source.d_a() || sigma.ny() != basis_source.ny())
        throw ShapeMismatch("dephase_conditional: shapes differ");
    const std::size_t d = sigma.d_a(), ny = sigma.ny();
    std::vector<double> cells(d * ny, 0.0);
    for (std::size_t y = 0; y < ny; ++y) {
        const Spectrum basis = hermitian_eig(basis_source.blocks()[y].matrix());
        const CMatrix& s = sigma.blocks()[y].matrix();
        for (std::size_t x = 0; x < d; ++x) {
            Complex val = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                Complex row = 0.0;
                for (std::size_t j = 0; j < d; ++j) row += s(i, j) * basis.eigenvectors(j, x);
                val += std::conj(basis.eigenvectors(i, x)) * row;
            }
            cells[x * ny + y] = sigma.weights()[y] * val.real();
        }
    }
    return JointDistribution(d, ny, std::move(cells));
}

double trace_distance(const CQState& rho, const CQState& sigma) {
    if (rho.d_a() != sigma.d_a() || rho.ny() != sigma.ny())
        throw ShapeMismatch("trace_distance: shapes differ");
    const std::size_t d = rho.d_a();
    double total = 0.0;
    for (std::size_t y = 0; y < rho.ny(); ++y) {
        CMatrix diff(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                diff(i, j) = rho.weights()[y] * rho.blocks()[y].matrix()(i, j) -
                             sigma.weights()[y] * sigma.blocks()[y].matrix()(i, j);
        for (double lam : hermitian_eig(diff).eigenvalues) total += std::abs(lam);
    }
    return 0.5 * total;
}

BoundCertificate check_cq_bound(const CQState& rho, const CQState& sigma, double alpha,
                                double eps_budget) {
    if (rho.d_a() != sigma.d_a() || rho.ny() != sigma.ny())
        throw ShapeMismatch("check_cq_bound: shapes differ");
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw AlphaOutOfRange("check_cq_bound: alpha outside [0,1)");
    const std::size_t d = rho.d_a();
    const double cap = 1.0 - 1.0 / static_cast<double>(d);
    if (!(eps_budget > 0.0 && eps_budget <= cap))
        throw EpsOutOfRange("check_cq_bound: eps_budget outside (0, 1-1/d]");
    const double td = trace_distance(rho, sigma);
    if (td > eps_budget + 1e-12)
        throw TraceBudgetExceeded("check_cq_bound: trace distance exceeds budget");

    const AlphaOrder a(alpha);
    const double hr = cond_renyi_cq(rho, a);
    const double hs = cond_renyi_cq(sigma, a);

    BoundCertificate cert;
    cert.alpha = alpha;
    cert.eps_budget = eps_budget;
    cert.dimension = d;
    cert.tv_actual = td;
    cert.lhs = std::abs(hr - hs);
    cert.rhs = gamma(alpha, eps_budget, d);
    cert.slack = cert.rhs - cert.lhs;
    cert.holds = cert.slack >= -1e-9;

    // Re-derive the route: pin the bases of the lower-entropy state, pinch
    // the other, then apply the classical bound to the resulting pair.
    const CQState& base = hr <= hs ? rho : sigma;
    const CQState& other = hr <= hs ? sigma : rho;
    const JointDistribution base_cl = spectral_joint(base);
    const JointDistribution other_cl = spectral_joint(other);
    const JointDistribution pinched = dephase_conditional(other, base);
    if (tv_distance(base_cl, pinched).value > td + 1e-10)
        throw ChainViolation("check_cq_bound: pinched pair drifted past the trace distance");
    if (arce(other_cl, a) > arce(pinched, a) + 1e-9)
        throw ChainViolation("check_cq_bound: pinching lowered the conditional entropy");
    if (std::abs(arce(pinched, a) - arce(base_cl, a)) > cert.rhs + 1e-9)
        throw ChainViolation("check_cq_bound: classical bound failed on the pinched pair");
    return cert;
}

} // namespace arce
