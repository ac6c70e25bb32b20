#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "arce/errors.hpp"

namespace arce {

// Normalization tolerance shared by all probability objects. Entries in
// [-kNormTol, 0) are clamped to 0 on validation; |sum - 1| must stay within
// kNormTol.
inline constexpr double kNormTol = 1e-9;

// Non-negative real sequence summing to 1 within kNormTol.
class ProbVector {
  public:
    explicit ProbVector(std::vector<double> entries);

    const std::vector<double>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }

  private:
    std::vector<double> entries_;
};

// |X| x |Y| matrix of non-negative reals summing to 1 within kNormTol.
// Rows index X, columns index Y.
class JointDistribution {
  public:
    JointDistribution(std::size_t nx, std::size_t ny, std::vector<double> cells);

    std::size_t nx() const { return nx_; }
    std::size_t ny() const { return ny_; }
    double operator()(std::size_t x, std::size_t y) const { return cells_[x * ny_ + y]; }
    const std::vector<double>& cells() const { return cells_; }
    std::vector<std::vector<double>> rows() const;

  private:
    std::size_t nx_, ny_;
    std::vector<double> cells_; // row-major
};

struct TvDistance {
    double value; // in [0,1]
};

// Deterministic generator used by every sampler in the library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {
        // decorrelate small seeds
        next();
        next();
    }

    std::uint64_t next() {
        // splitmix64: stable across platforms, unlike <random> distributions
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; } // [0,1)
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }
    double expo(); // standard exponential, strictly positive

  private:
    std::uint64_t state_;
};

JointDistribution validate_joint(const std::vector<std::vector<double>>& matrix);

TvDistance tv_distance(const JointDistribution& p, const JointDistribution& q);

ProbVector marginal_y(const JointDistribution& p);

// p_{X|Y=y} for a 0-based column index y; requires p_Y(y) > 0.
ProbVector conditional_column(const JointDistribution& p, std::size_t y);

// Flat-Dirichlet joint: i.i.d. exponentials, normalized. Deterministic in seed.
JointDistribution sample_random_joint(std::size_t nx, std::size_t ny, std::uint64_t seed);

// Samples p, then moves total mass <= eps between cells; tv(p,q) <= eps.
std::pair<JointDistribution, JointDistribution>
sample_pair_within_tv(std::size_t nx, std::size_t ny, double eps, std::uint64_t seed);

} // namespace arce
