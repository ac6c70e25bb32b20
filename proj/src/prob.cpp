#include "arce/prob.hpp"

#include <cmath>
#include <string>

namespace arce {

namespace {

// Clamps tiny negatives to zero, rejects anything below -kNormTol, and checks
// the total. Shared by ProbVector and JointDistribution.
void validate_cells(std::vector<double>& cells, const char* what) {
    double sum = 0.0;
    for (double& c : cells) {
        if (c < -kNormTol)
            throw NegativeEntry(std::string(what) + ": entry " + std::to_string(c) + " < 0");
        if (c < 0.0) c = 0.0;
        sum += c;
    }
    if (std::abs(sum - 1.0) > kNormTol)
        throw NotNormalized(std::string(what) + ": total " + std::to_string(sum) + " != 1");
}

} // namespace

ProbVector::ProbVector(std::vector<double> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw NotNormalized("ProbVector: empty");
    validate_cells(entries_, "ProbVector");
}

JointDistribution::JointDistribution(std::size_t nx, std::size_t ny, std::vector<double> cells)
    : nx_(nx), ny_(ny), cells_(std::move(cells)) {
    if (nx_ < 1 || ny_ < 1) throw ShapeMismatch("JointDistribution: empty shape");
    if (cells_.size() != nx_ * ny_)
        throw ShapeMismatch("JointDistribution: cell count does not match shape");
    validate_cells(cells_, "JointDistribution");
}

std::vector<std::vector<double>> JointDistribution::rows() const {
    std::vector<std::vector<double>> out(nx_, std::vector<double>(ny_));
    for (std::size_t x = 0; x < nx_; ++x)
        for (std::size_t y = 0; y < ny_; ++y) out[x][y] = (*this)(x, y);
    return out;
}

double Rng::expo() {
    double u;
    do {
        u = uniform();
    } while (u <= 0.0);
    return -std::log(u);
}

JointDistribution validate_joint(const std::vector<std::vector<double>>& matrix) {
    if (matrix.empty() || matrix.front().empty())
        throw ShapeMismatch("validate_joint: empty matrix");
    const std::size_t nx = matrix.size();
    const std::size_t ny = matrix.front().size();
    std::vector<double> cells;
    cells.reserve(nx * ny);
    for (const auto& row : matrix) {
        if (row.size() != ny) throw ShapeMismatch("validate_joint: ragged rows");
        cells.insert(cells.end(), row.begin(), row.end());
    }
    return JointDistribution(nx, ny, std::move(cells));
}

TvDistance tv_distance(const JointDistribution& p, const JointDistribution& q) {
    if (p.nx() != q.nx() || p.ny() != q.ny())
        throw ShapeMismatch("tv_distance: shapes differ");
    double acc = 0.0;
    const auto& pc = p.cells();
    const auto& qc = q.cells();
    for (std::size_t i = 0; i < pc.size(); ++i) acc += std::abs(pc[i] - qc[i]);
    return TvDistance{0.5 * acc};
}

ProbVector marginal_y(const JointDistribution& p) {
    std::vector<double> m(p.ny(), 0.0);
    for (std::size_t x = 0; x < p.nx(); ++x)
        for (std::size_t y = 0; y < p.ny(); ++y) m[y] += p(x, y);
    return ProbVector(std::move(m));
}

ProbVector conditional_column(const JointDistribution& p, std::size_t y) {
    if (y >= p.ny()) throw OutOfRange("conditional_column: column index out of range");
    double py = 0.0;
    for (std::size_t x = 0; x < p.nx(); ++x) py += p(x, y);
    if (py <= 0.0) throw ZeroMarginal("conditional_column: p_Y(y) = 0");
    std::vector<double> col(p.nx());
    for (std::size_t x = 0; x < p.nx(); ++x) col[x] = p(x, y) / py;
    return ProbVector(std::move(col));
}

JointDistribution sample_random_joint(std::size_t nx, std::size_t ny, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> cells(nx * ny);
    double sum = 0.0;
    for (double& c : cells) {
        c = rng.expo();
        sum += c;
    }
    for (double& c : cells) c /= sum;
    return JointDistribution(nx, ny, std::move(cells));
}

std::pair<JointDistribution, JointDistribution>
sample_pair_within_tv(std::size_t nx, std::size_t ny, double eps, std::uint64_t seed) {
    if (eps < 0.0 || eps > 1.0) throw EpsOutOfRange("sample_pair_within_tv: eps outside [0,1]");
    JointDistribution p = sample_random_joint(nx, ny, seed);
    const std::size_t n = nx * ny;
    if (eps == 0.0 || n == 1) return {p, p};

    Rng rng(seed + 0x51ed270b0a9cd1full);
    std::vector<double> q = p.cells();
    const double budget = eps * rng.uniform();
    const std::size_t rounds = 1 + rng.index(n);
    for (std::size_t k = 0; k < rounds; ++k) {
        const std::size_t src = rng.index(n);
        std::size_t dst = rng.index(n - 1);
        if (dst >= src) ++dst;
        const double amount = std::min(budget / static_cast<double>(rounds), q[src]);
        q[src] -= amount;
        q[dst] += amount;
    }
    return {p, JointDistribution(nx, ny, std::move(q))};
}

} // namespace arce
