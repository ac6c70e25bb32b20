#pragma once

#include <complex>
#include <vector>

#include "arce/bound.hpp"
#include "arce/entropy.hpp"
#include "arce/prob.hpp"

namespace arce {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major.
class CMatrix {
  public:
    explicit CMatrix(std::size_t d) : d_(d), a_(check_dim(d) * d) {}
    CMatrix(std::size_t d, std::vector<Complex> entries);

    static CMatrix identity(std::size_t d);

    std::size_t dim() const { return d_; }
    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * d_ + j]; }
    Complex operator()(std::size_t i, std::size_t j) const { return a_[i * d_ + j]; }
    const std::vector<Complex>& entries() const { return a_; }

  private:
    static std::size_t check_dim(std::size_t d);
    std::size_t d_;
    std::vector<Complex> a_;
};

CMatrix multiply(const CMatrix& a, const CMatrix& b);
CMatrix adjoint(const CMatrix& a);
Complex trace(const CMatrix& a);
double frobenius_distance(const CMatrix& a, const CMatrix& b);

// Hermitian within 1e-12, eigenvalues >= -1e-10, trace 1 within 1e-10.
// Validation eigendecomposes once at construction.
class DensityMatrix {
  public:
    explicit DensityMatrix(CMatrix m);

    const CMatrix& matrix() const { return m_; }
    std::size_t dim() const { return m_.dim(); }

  private:
    CMatrix m_;
};

// Eigendecomposition of a Hermitian matrix: U diag(lambda) U^dagger.
struct Spectrum {
    std::vector<double> eigenvalues; // descending
    CMatrix eigenvectors;            // unitary, eigenvector per column
};

// Classical weights over Y, one density block of common dimension per symbol.
class CQState {
  public:
    CQState(ProbVector weights, std::vector<DensityMatrix> blocks);

    const ProbVector& weights() const { return weights_; }
    const std::vector<DensityMatrix>& blocks() const { return blocks_; }
    std::size_t d_a() const { return blocks_.front().dim(); }
    std::size_t ny() const { return blocks_.size(); }

  private:
    ProbVector weights_;
    std::vector<DensityMatrix> blocks_;
};

// Cyclic Jacobi with complex plane rotations; dimensions up to 64.
Spectrum hermitian_eig(const CMatrix& m);

double von_neumann_entropy(const DensityMatrix& rho);

// Classical joint induced by the blocks' spectra: cell (x,y) holds
// weight(y) * (x-th largest eigenvalue of block y).
JointDistribution spectral_joint(const CQState& rho);

// sum_y weight(y) * von Neumann entropy of block y.
double cond_entropy_cq(const CQState& rho);

// Conditional Rényi entropy of the c-q state; equals arce of spectral_joint.
double cond_renyi_cq(const CQState& rho, AlphaOrder a);

// (1/(a-1)) log2 Tr[rho^a sigma^(1-a)]. Returns +infinity when the support
// of rho leaks outside the support of sigma (eigenvalue threshold 1e-10).
double renyi_divergence(const DensityMatrix& rho, const DensityMatrix& sigma, AlphaOrder a);

// Pinches each block of sigma in the eigenbasis of the matching block of
// basis_source; returns the resulting classical joint. Dephasing a state in
// its own bases returns its spectral joint.
JointDistribution dephase_conditional(const CQState& sigma, const CQState& basis_source);

// Half the Schatten-1 norm of the block difference.
double trace_distance(const CQState& rho, const CQState& sigma);

// Continuity-bound certificate for a c-q pair within trace distance
// eps_budget, alpha in [0,1). Also re-derives the dephasing route (data
// processing on the distance, pinching never lowers the entropy, classical
// bound on the dephased pair) and throws ChainViolation if any part fails.
BoundCertificate check_cq_bound(const CQState& rho, const CQState& sigma, double alpha,
                                double eps_budget);

} // namespace arce
