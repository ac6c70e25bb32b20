#include "arce/tightness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "arce/bound.hpp"
#include "arce/entropy.hpp"
#include "arce/errors.hpp"

namespace arce {

namespace {

double tv_cells(const std::vector<double>& a, const std::vector<double>& b) {
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) total += std::abs(a[i] - b[i]);
    return 0.5 * total;
}

} // namespace

// ---------------------------------------------------------------------------
// extremal pair
// ---------------------------------------------------------------------------

std::pair<JointDistribution, JointDistribution> extremal_pair(std::size_t d, std::size_t ny,
                                                              double eps) {
    if (d < 2) throw ParamOutOfRange("extremal_pair: alphabet size must be at least 2");
    if (ny < 1) throw ParamOutOfRange("extremal_pair: side alphabet must be nonempty");
    const double cap = 1.0 - 1.0 / static_cast<double>(d);
    if (!(eps > 0.0) || eps > cap)
        throw ParamOutOfRange("extremal_pair: eps must lie in (0, 1 - 1/d]");

    std::vector<double> pc(d * ny, 0.0);
    std::vector<double> qc(d * ny, 0.0);
    qc[0] = 1.0;
    pc[0] = 1.0 - eps;
    const double share = eps / static_cast<double>(d - 1);
    for (std::size_t x = 1; x < d; ++x) pc[x * ny] = share;
    return {JointDistribution(d, ny, std::move(pc)), JointDistribution(d, ny, std::move(qc))};
}

// ---------------------------------------------------------------------------
// saturation ratio
// ---------------------------------------------------------------------------

double saturation_ratio(const JointDistribution& p, const JointDistribution& q, double alpha,
                        double eps) {
    if (p.nx() != q.nx() || p.ny() != q.ny())
        throw ShapeMismatch("saturation_ratio: joints must share a shape");
    const double tv = tv_distance(p, q).value;
    if (eps == 0.0) {
        // The bound degenerates to 0 and only the identical pair stays legal.
        if (tv > 0.0) throw ZeroBound("saturation_ratio: eps = 0 requires identical joints");
        return 0.0;
    }
    if (tv > eps + 1e-12)
        throw TvBudgetExceeded("saturation_ratio: pair lies outside the eps ball");

    const double denom = gamma(alpha, eps, p.nx()); // validates alpha, eps, dimension
    const AlphaOrder order(alpha);
    return std::abs(arce(p, order) - arce(q, order)) / denom;
}

// ---------------------------------------------------------------------------
// hill climbing
// ---------------------------------------------------------------------------

SearchResult search_sup_ratio(std::size_t nx, std::size_t ny, double alpha, double eps,
                              std::uint64_t budget, std::uint64_t seed, bool seed_extremal) {
    if (budget < 1) throw ParamOutOfRange("search_sup_ratio: budget must be at least 1");
    if (ny < 1) throw ParamOutOfRange("search_sup_ratio: side alphabet must be nonempty");
    if (!(eps > 0.0)) throw EpsOutOfRange("search_sup_ratio: eps must be positive");
    const double denom = gamma(alpha, eps, nx); // validates alpha, eps cap, nx >= 2
    const AlphaOrder order(alpha);
    const std::size_t cells = nx * ny;
    constexpr double kDeltas[] = {1e-1, 1e-2, 1e-3};

    Rng rng(seed);

    auto entropy_of = [&](const std::vector<double>& flat) {
        return arce(JointDistribution(nx, ny, flat), order);
    };

    double best = -1.0;
    std::vector<double> best_p_cells;
    std::vector<double> best_q_cells;
    std::uint64_t iterations = 0;
    std::uint64_t evaluations = 0;

    auto score = [&](const std::vector<double>& pc, const std::vector<double>& qc, double hp,
                     double hq) {
        ++evaluations;
        const double ratio = std::abs(hp - hq) / denom;
        if (ratio > best) {
            best = ratio;
            best_p_cells = pc;
            best_q_cells = qc;
        }
        return ratio;
    };

    bool first_start = true;
    while (iterations < budget) {
        // Pick a start: the saturating pair once (if requested), then random
        // pairs already inside the eps ball.
        std::vector<double> pc;
        std::vector<double> qc;
        if (first_start && seed_extremal) {
            auto ex = extremal_pair(nx, ny, eps);
            pc = ex.first.cells();
            qc = ex.second.cells();
        } else {
            auto pair = sample_pair_within_tv(nx, ny, eps, rng.next());
            pc = pair.first.cells();
            qc = pair.second.cells();
        }
        first_start = false;

        double hp = entropy_of(pc);
        double hq = entropy_of(qc);
        double current = score(pc, qc, hp, hq);

        // Sweep move sizes coarse to fine; at each size take the single best
        // improving transfer until none remains.
        for (double delta : kDeltas) {
            bool improved = true;
            while (improved && iterations < budget) {
                improved = false;
                double move_best = current;
                int move_side = -1; // 0: p, 1: q
                std::size_t move_src = 0;
                std::size_t move_dst = 0;
                double move_entropy = 0.0;

                for (int side = 0; side < 2 && iterations < budget; ++side) {
                    std::vector<double>& m = (side == 0) ? pc : qc;
                    for (std::size_t src = 0; src < cells && iterations < budget; ++src) {
                        if (m[src] < delta) continue;
                        for (std::size_t dst = 0; dst < cells && iterations < budget; ++dst) {
                            if (dst == src) continue;
                            ++iterations;
                            // snapshot/restore keeps the trial exact; += after
                            // -= can leave rounding residue behind
                            const double save_src = m[src];
                            const double save_dst = m[dst];
                            m[src] = save_src - delta;
                            m[dst] = save_dst + delta;
                            if (tv_cells(pc, qc) <= eps) {
                                const double h = entropy_of(m);
                                const double ratio = (side == 0) ? score(pc, qc, h, hq)
                                                                 : score(pc, qc, hp, h);
                                if (ratio > move_best) {
                                    move_best = ratio;
                                    move_side = side;
                                    move_src = src;
                                    move_dst = dst;
                                    move_entropy = h;
                                }
                            }
                            m[src] = save_src;
                            m[dst] = save_dst;
                        }
                    }
                }

                if (move_side >= 0) {
                    std::vector<double>& m = (move_side == 0) ? pc : qc;
                    m[move_src] -= delta;
                    m[move_dst] += delta;
                    if (move_side == 0) {
                        hp = move_entropy;
                    } else {
                        hq = move_entropy;
                    }
                    current = move_best;
                    improved = true;
                }
            }
        }
    }

    return SearchResult{best,
                        JointDistribution(nx, ny, std::move(best_p_cells)),
                        JointDistribution(nx, ny, std::move(best_q_cells)),
                        iterations,
                        evaluations,
                        seed};
}

} // namespace arce
