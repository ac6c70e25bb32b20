#pragma once

// Shared randomized-instance builders for the test binaries. Everything is
// driven by arce::Rng so failures reproduce from the printed seed.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "arce/cq.hpp"
#include "arce/prob.hpp"

namespace testutil {

using arce::CMatrix;
using arce::Complex;
using arce::CQState;
using arce::DensityMatrix;
using arce::JointDistribution;
using arce::ProbVector;
using arce::Rng;

inline std::vector<double> random_masses(Rng& rng, std::size_t n, double total = 1.0) {
    std::vector<double> v(n);
    double sum = 0.0;
    for (double& x : v) {
        x = rng.expo();
        sum += x;
    }
    for (double& x : v) x = x / sum * total;
    return v;
}

inline std::vector<double> sorted_masses(Rng& rng, std::size_t n, double total = 1.0) {
    std::vector<double> v = random_masses(rng, n, total);
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

// k random T-transforms; the result is majorized by the input.
inline std::vector<double> apply_t_transforms(Rng& rng, std::vector<double> v, int k) {
    for (int step = 0; step < k; ++step) {
        const std::size_t i = rng.index(v.size());
        std::size_t j = rng.index(v.size());
        while (j == i) j = rng.index(v.size());
        const double lam = rng.uniform();
        const double vi = v[i];
        const double vj = v[j];
        v[i] = lam * vi + (1.0 - lam) * vj;
        v[j] = (1.0 - lam) * vi + lam * vj;
    }
    return v;
}

// ---------------------------------------------------------------------------
// quantum builders
// ---------------------------------------------------------------------------

inline CMatrix random_complex(Rng& rng, std::size_t d) {
    CMatrix g(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            g(i, j) = Complex(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
    return g;
}

// G G^dag normalized to unit trace: a full-rank random density matrix.
inline DensityMatrix random_density(Rng& rng, std::size_t d) {
    const CMatrix g = random_complex(rng, d);
    CMatrix m = arce::multiply(g, arce::adjoint(g));
    const double tr = arce::trace(m).real();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = m(i, j) / tr;
    return DensityMatrix(std::move(m));
}

// Modified Gram-Schmidt on random columns.
inline CMatrix random_unitary(Rng& rng, std::size_t d) {
    CMatrix u(d);
    for (std::size_t col = 0; col < d; ++col) {
        while (true) {
            for (std::size_t r = 0; r < d; ++r)
                u(r, col) = Complex(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
            for (std::size_t prev = 0; prev < col; ++prev) {
                Complex dot(0.0, 0.0);
                for (std::size_t r = 0; r < d; ++r) dot += std::conj(u(r, prev)) * u(r, col);
                for (std::size_t r = 0; r < d; ++r) u(r, col) -= dot * u(r, prev);
            }
            double norm = 0.0;
            for (std::size_t r = 0; r < d; ++r) norm += std::norm(u(r, col));
            norm = std::sqrt(norm);
            if (norm > 1e-6) {
                for (std::size_t r = 0; r < d; ++r) u(r, col) = u(r, col) / norm;
                break;
            }
        }
    }
    return u;
}

// U diag(eigs) U^dag for a prescribed real spectrum.
inline CMatrix hermitian_with_spectrum(Rng& rng, const std::vector<double>& eigs) {
    const std::size_t d = eigs.size();
    const CMatrix u = random_unitary(rng, d);
    CMatrix m(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Complex acc(0.0, 0.0);
            for (std::size_t k = 0; k < d; ++k) acc += u(i, k) * eigs[k] * std::conj(u(j, k));
            m(i, j) = acc;
        }
    // force exact hermiticity so validation never trips on rounding
    for (std::size_t i = 0; i < d; ++i) {
        m(i, i) = Complex(m(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < d; ++j) {
            const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = avg;
            m(j, i) = std::conj(avg);
        }
    }
    return m;
}

inline CQState random_cq(Rng& rng, std::size_t d, std::size_t ny) {
    std::vector<DensityMatrix> blocks;
    blocks.reserve(ny);
    for (std::size_t y = 0; y < ny; ++y) blocks.push_back(random_density(rng, d));
    return CQState(ProbVector(random_masses(rng, ny)), std::move(blocks));
}

// sigma = (1 - lam) rho + lam tau on the full joint system, so the normalized
// trace distance between rho and sigma is at most lam.
inline std::pair<CQState, CQState> mixed_cq_pair(Rng& rng, std::size_t d, std::size_t ny,
                                                 double lam) {
    const CQState rho = random_cq(rng, d, ny);
    const CQState tau = random_cq(rng, d, ny);
    std::vector<double> weights(ny);
    std::vector<DensityMatrix> blocks;
    blocks.reserve(ny);
    for (std::size_t y = 0; y < ny; ++y) {
        const double wr = rho.weights()[y];
        const double wt = tau.weights()[y];
        const double v = (1.0 - lam) * wr + lam * wt;
        weights[y] = v;
        CMatrix m(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                m(i, j) = ((1.0 - lam) * wr * rho.blocks()[y].matrix()(i, j) +
                           lam * wt * tau.blocks()[y].matrix()(i, j)) /
                          v;
        blocks.emplace_back(std::move(m));
    }
    return {rho, CQState(ProbVector(std::move(weights)), std::move(blocks))};
}

// Diagonal embedding of a classical joint: weights p_Y, blocks diag(p_{X|Y=y}).
// Columns with zero marginal get a uniform dummy block (weight zero anyway).
inline CQState embed_classical(const JointDistribution& p) {
    std::vector<double> weights(p.ny(), 0.0);
    for (std::size_t y = 0; y < p.ny(); ++y)
        for (std::size_t x = 0; x < p.nx(); ++x) weights[y] += p(x, y);
    std::vector<DensityMatrix> blocks;
    blocks.reserve(p.ny());
    for (std::size_t y = 0; y < p.ny(); ++y) {
        CMatrix m(p.nx());
        if (weights[y] > 0.0) {
            for (std::size_t x = 0; x < p.nx(); ++x) m(x, x) = p(x, y) / weights[y];
        } else {
            for (std::size_t x = 0; x < p.nx(); ++x)
                m(x, x) = 1.0 / static_cast<double>(p.nx());
        }
        blocks.emplace_back(std::move(m));
    }
    return CQState(ProbVector(std::move(weights)), std::move(blocks));
}

// Block-diagonal matrix over the joint A (X) Y system: sum_y w_y |y><y| (x) B_y.
// Lays block y at offset y*d on the diagonal.
inline CMatrix block_diagonal(const std::vector<double>& w, const std::vector<CMatrix>& blocks) {
    const std::size_t d = blocks.front().dim();
    const std::size_t n = d * blocks.size();
    CMatrix big(n);
    for (std::size_t y = 0; y < blocks.size(); ++y)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                big(y * d + i, y * d + j) = w[y] * blocks[y](i, j);
    return big;
}

} // namespace testutil
