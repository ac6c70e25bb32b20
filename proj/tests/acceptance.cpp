// Acceptance gate: every release-blocking criterion in one binary. Each
// criterion prints exactly one [PASS]/[FAIL] line with a short summary of the
// evidence; the exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "arce/bound.hpp"
#include "arce/cq.hpp"
#include "arce/entropy.hpp"
#include "arce/errors.hpp"
#include "arce/majorization.hpp"
#include "arce/pipeline.hpp"
#include "arce/prob.hpp"
#include "arce/tightness.hpp"

#include "helpers.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

double binary_entropy(double e) {
    double h = 0.0;
    if (e > 0.0) h -= e * std::log2(e);
    if (e < 1.0) h -= (1.0 - e) * std::log2(1.0 - e);
    return h;
}

double abs_gap(const arce::JointDistribution& p, const arce::JointDistribution& q,
               double alpha) {
    const arce::AlphaOrder order(alpha);
    return std::abs(arce::arce(p, order) - arce::arce(q, order));
}

// ---------------------------------------------------------------------------
// 1. The continuity bound holds on a large randomized sweep.
// ---------------------------------------------------------------------------

bool criterion_bound_sweep(std::string& detail) {
    const auto t0 = Clock::now();
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::uint64_t seed = 1000;
    double worst = -1e300; // max of lhs - rhs, should stay <= 0

    for (std::size_t nx = 2; nx <= 8; ++nx) {
        const double cap = 1.0 - 1.0 / static_cast<double>(nx);
        const double eps_grid[] = {0.1, 0.25, cap};
        for (std::size_t ny = 1; ny <= 8; ++ny) {
            for (double eps : eps_grid) {
                for (int rep = 0; rep < 6; ++rep) {
                    const auto [p, q] = arce::sample_pair_within_tv(nx, ny, eps, seed++);
                    if (arce::tv_distance(p, q).value > eps + 1e-12) {
                        ++violations; // sampler must respect its own budget
                        continue;
                    }
                    for (int ai = 0; ai <= 9; ++ai) {
                        const double alpha = ai / 10.0;
                        const double lhs = abs_gap(p, q, alpha);
                        const double rhs = arce::gamma(alpha, eps, nx);
                        worst = std::max(worst, lhs - rhs);
                        ++checks;
                        if (lhs > rhs + 1e-9) ++violations;
                    }
                }
            }
        }
    }

    const double elapsed = seconds_since(t0);
    detail = fmt("%.0f checks, %.0f violations, worst lhs-rhs %.2e", double(checks),
                 double(violations), worst) +
             fmt(", %.1fs", elapsed);
    return violations == 0 && checks >= 10000 && elapsed < 60.0;
}

// ---------------------------------------------------------------------------
// 2. Extremal pairs meet the bound with equality.
// ---------------------------------------------------------------------------

bool criterion_extremal_equality(std::string& detail) {
    std::uint64_t checks = 0;
    double worst = 0.0; // max |lhs - rhs|
    for (std::size_t d = 2; d <= 8; ++d) {
        const double cap = 1.0 - 1.0 / static_cast<double>(d);
        for (int k = 1; k <= 4; ++k) {
            const double eps = cap * (k / 4.0);
            const auto [p, q] = arce::extremal_pair(d, 1, eps);
            for (int ai = 0; ai <= 9; ++ai) {
                const double alpha = ai / 10.0;
                const double lhs = abs_gap(p, q, alpha);
                const double rhs = arce::gamma(alpha, eps, d);
                worst = std::max(worst, std::abs(lhs - rhs));
                ++checks;
            }
        }
    }
    detail = fmt("%.0f grid points, worst |lhs-rhs| %.2e", double(checks), worst);
    return worst <= 1e-10;
}

// ---------------------------------------------------------------------------
// 3. Near order one the bound and the entropy approach their Shannon forms.
// ---------------------------------------------------------------------------

bool criterion_order_one_limit(std::string& detail) {
    double worst_bound = 0.0;
    for (std::size_t d = 2; d <= 10; ++d) {
        const double cap = 1.0 - 1.0 / static_cast<double>(d);
        for (int k = 1; k <= 9; ++k) {
            const double eps = cap * (k / 10.0);
            const double near_one = arce::gamma(1.0 - 1e-4, eps, d);
            const double shannon_form =
                eps * std::log2(static_cast<double>(d - 1)) + binary_entropy(eps);
            worst_bound = std::max(worst_bound, std::abs(near_one - shannon_form));
        }
    }

    double worst_entropy = 0.0;
    arce::Rng rng(77);
    const arce::AlphaOrder near(0.9999);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t nx = 2 + rng.index(5);
        const std::size_t ny = 1 + rng.index(4);
        const arce::JointDistribution p =
            arce::sample_random_joint(nx, ny, 5000 + std::uint64_t(trial));
        worst_entropy =
            std::max(worst_entropy, std::abs(arce::arce(p, near) - arce::cond_shannon(p)));
    }

    detail = fmt("bound gap %.2e (tol 1e-2), entropy gap %.2e (tol 5e-3)", worst_bound,
                 worst_entropy);
    return worst_bound <= 1e-2 && worst_entropy <= 5e-3;
}

// ---------------------------------------------------------------------------
// 4. Proof chains on random pairs stay certified, monotone, and tv-constant.
// ---------------------------------------------------------------------------

bool criterion_proof_chains(std::string& detail) {
    const auto t0 = Clock::now();
    std::uint64_t chains = 0;
    std::uint64_t violations = 0;
    arce::Rng rng(99);

    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t nx = 2 + rng.index(5);
        const std::size_t ny = 1 + rng.index(4);
        const double alpha = 0.05 + 0.9 * rng.uniform();
        // keep the pair inside the chain's domain: tv at most 1 - 1/nx
        const double cap = 1.0 - 1.0 / static_cast<double>(nx);
        const double eps = cap * (0.1 + 0.85 * rng.uniform());
        const auto [p, q] = arce::sample_pair_within_tv(nx, ny, eps, 7000 + std::uint64_t(trial));
        ++chains;
        try {
            const arce::PipelineTrace trace = arce::verify_proof_chain(p, q, alpha);
            bool ok = true;
            for (const arce::StepSnapshot& step : trace.steps)
                for (const arce::NamedCheck& cert : step.certificates) ok = ok && cert.passed;
            for (std::size_t i = 1; i < trace.steps.size(); ++i) {
                if (trace.steps[i].delta_h < trace.steps[i - 1].delta_h - 1e-12) ok = false;
                if (std::abs(trace.steps[i].tv - trace.steps[0].tv) > 1e-12) ok = false;
            }
            if (!ok) ++violations;
        } catch (const arce::ChainViolation&) {
            ++violations;
        }
    }

    const double elapsed = seconds_since(t0);
    detail = fmt("%.0f chains, %.0f violations", double(chains), double(violations)) +
             fmt(", %.1fs", elapsed);
    return violations == 0 && elapsed < 30.0;
}

// ---------------------------------------------------------------------------
// 5. The mass-transfer steps and the bound's monotonicity never fail.
// ---------------------------------------------------------------------------

bool criterion_mass_transfer(std::string& detail) {
    std::uint64_t total = 0;
    std::uint64_t violations = 0;
    arce::Rng rng(11);

    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t n = 2 + rng.index(7);
        std::vector<double> v = testutil::sorted_masses(rng, n);
        const std::size_t i = 1 + rng.index(n - 1);
        const double s = v[i] * (1.0 - 0.5 * rng.uniform());
        ++total;
        // moving mass up to the top slot makes the vector dominate the original
        if (!arce::majorizes(v, arce::transfer_to_top(v, i, s)).holds) ++violations;
    }

    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t n = 3 + rng.index(6);
        std::vector<double> v = testutil::random_masses(rng, n);
        const std::size_t j = rng.index(n);
        v[j] = 0.0;
        std::size_t i = rng.index(n);
        while (i == j) i = rng.index(n);
        const double s = v[i] * (1.0 - 0.5 * rng.uniform());
        ++total;
        if (!arce::majorizes(arce::spill_to_zero_slot(v, i, j, s), v).holds) ++violations;
    }

    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t live = 2 + rng.index(4);
        const std::size_t pad = 1 + rng.index(3);
        const std::size_t n = live + pad;
        const double mu = 0.1 + 0.8 * rng.uniform();
        std::vector<double> v(n, 0.0);
        const std::vector<double> head = testutil::random_masses(rng, live, 1.0 - mu);
        std::copy(head.begin(), head.end(), v.begin());
        const double lambda = rng.uniform();
        const double mean = (1.0 - mu) / static_cast<double>(live);
        std::vector<double> v2(n, 0.0);
        for (std::size_t idx = 0; idx < live; ++idx)
            v2[idx] = (1.0 - lambda) * v[idx] + lambda * mean;
        std::vector<double> perp(n, 0.0);
        const std::vector<double> tail = testutil::random_masses(rng, pad, mu);
        std::copy(tail.begin(), tail.end(), perp.begin() + static_cast<std::ptrdiff_t>(live));
        ++total;
        if (!arce::check_orthogonal_padding(v, v2, perp)) ++violations;
    }

    // grid checks of the two monotone pieces behind the final inequality
    for (int ai = 1; ai <= 9; ++ai) {
        const double a = 0.1 * ai;
        for (std::size_t d = 2; d <= 6; ++d) {
            const double cap = 1.0 - 1.0 / static_cast<double>(d);
            for (const double tt : {0.1, cap}) {
                ++total;
                const double u0 = 1.0 - tt;
                bool ok = true;
                double prev = arce::f_step_e(u0, a, d, tt);
                for (int k = 1; k < 100; ++k) {
                    const double u = u0 + 3.0 * k / 99.0;
                    const double cur = arce::f_step_e(u, a, d, tt);
                    if (cur > prev + 1e-12) ok = false;
                    prev = cur;
                }
                if (!ok) ++violations;
            }
            ++total;
            bool ok = true;
            double prev = arce::g_mono(cap * (1.0 / 100.0), a, d);
            for (int k = 2; k <= 100; ++k) {
                const double cur = arce::g_mono(cap * (k / 100.0), a, d);
                if (cur < prev - 1e-12) ok = false;
                prev = cur;
            }
            if (!ok) ++violations;
        }
    }

    detail = fmt("%.0f cases, %.0f violations", double(total), double(violations));
    return violations == 0;
}

// ---------------------------------------------------------------------------
// 6. The continuity bound transfers to c-q states.
// ---------------------------------------------------------------------------

bool criterion_cq_bound(std::string& detail) {
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    arce::Rng rng(33);
    const double alpha_grid[] = {0.0, 0.25, 0.5, 0.75, 0.9};

    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t d = 2 + rng.index(3);
        const std::size_t ny = 1 + rng.index(3);
        const double cap = 1.0 - 1.0 / static_cast<double>(d);
        const double eps = cap * (0.1 + 0.8 * rng.uniform());
        const auto [rho, sigma] = testutil::mixed_cq_pair(rng, d, ny, eps);

        const double td = arce::trace_distance(rho, sigma);
        if (td > eps + 1e-10) {
            ++violations; // the mixing construction guarantees td <= eps
            continue;
        }
        for (double a : alpha_grid) {
            const arce::AlphaOrder order(a);
            const double lhs =
                std::abs(arce::cond_renyi_cq(rho, order) - arce::cond_renyi_cq(sigma, order));
            ++checks;
            if (lhs > arce::gamma(a, eps, d) + 1e-9) ++violations;
        }
        if (trial % 5 == 0) {
            // dephasing in a common basis can only shrink the distance
            const arce::JointDistribution dr = arce::dephase_conditional(rho, rho);
            const arce::JointDistribution ds = arce::dephase_conditional(sigma, rho);
            ++checks;
            if (arce::tv_distance(dr, ds).value > td + 1e-10) ++violations;
        }
    }

    // embedded extremal pairs keep the equality case
    double worst_slack = 0.0;
    for (std::size_t d = 2; d <= 4; ++d) {
        const double cap = 1.0 - 1.0 / static_cast<double>(d);
        for (int j = 1; j <= 3; ++j) {
            const double eps = cap * (j / 3.0);
            const auto [p, q] = arce::extremal_pair(d, 1, eps);
            const arce::CQState rho = testutil::embed_classical(p);
            const arce::CQState sigma = testutil::embed_classical(q);
            for (const double a : {0.0, 0.45, 0.9}) {
                const arce::BoundCertificate cert = arce::check_cq_bound(rho, sigma, a, eps);
                worst_slack = std::max(worst_slack, std::abs(cert.slack));
                ++checks;
                if (!cert.holds || std::abs(cert.slack) > 1e-10) ++violations;
            }
        }
    }

    detail = fmt("%.0f checks, %.0f violations, worst embedded slack %.2e", double(checks),
                 double(violations), worst_slack);
    return violations == 0;
}

// ---------------------------------------------------------------------------
// 7. Diagonal embeddings reproduce every classical quantity.
// ---------------------------------------------------------------------------

bool criterion_diagonal_embedding(std::string& detail) {
    std::uint64_t violations = 0;
    double worst = 0.0;
    arce::Rng rng(55);
    const double alpha_grid[] = {0.0, 0.5, 2.0};

    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t nx = 2 + rng.index(4);
        const std::size_t ny = 1 + rng.index(4);
        const arce::JointDistribution p =
            arce::sample_random_joint(nx, ny, 9000 + std::uint64_t(trial));
        const arce::JointDistribution q =
            arce::sample_random_joint(nx, ny, 9999 + std::uint64_t(trial));
        const arce::CQState cp = testutil::embed_classical(p);
        const arce::CQState cq = testutil::embed_classical(q);

        double gap = std::abs(arce::cond_entropy_cq(cp) - arce::cond_shannon(p));
        for (double a : alpha_grid) {
            const arce::AlphaOrder order(a);
            gap = std::max(gap, std::abs(arce::cond_renyi_cq(cp, order) - arce::arce(p, order)));
        }
        gap = std::max(gap,
                       std::abs(arce::trace_distance(cp, cq) - arce::tv_distance(p, q).value));
        worst = std::max(worst, gap);
        if (gap > 1e-10) ++violations;
    }

    detail = fmt("1000 instances, %.0f violations, worst gap %.2e", double(violations), worst);
    return violations == 0;
}

// ---------------------------------------------------------------------------
// 8. The eigensolver reconstructs its input and recovers known spectra.
// ---------------------------------------------------------------------------

bool criterion_eigensolver(std::string& detail) {
    std::uint64_t violations = 0;
    double worst_recon = 0.0;
    double worst_spectrum = 0.0;
    arce::Rng rng(66);

    for (int trial = 0; trial < 700; ++trial) {
        const std::size_t d = 1 + rng.index(16);
        arce::CMatrix g = testutil::random_complex(rng, d);
        arce::CMatrix m(d);
        for (std::size_t i = 0; i < d; ++i) {
            m(i, i) = arce::Complex(g(i, i).real(), 0.0);
            for (std::size_t j = i + 1; j < d; ++j) {
                const arce::Complex avg = 0.5 * (g(i, j) + std::conj(g(j, i)));
                m(i, j) = avg;
                m(j, i) = std::conj(avg);
            }
        }
        const arce::Spectrum spec = arce::hermitian_eig(m);
        arce::CMatrix recon(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                arce::Complex acc(0.0, 0.0);
                for (std::size_t k = 0; k < d; ++k)
                    acc += spec.eigenvectors(i, k) * spec.eigenvalues[k] *
                           std::conj(spec.eigenvectors(j, k));
                recon(i, j) = acc;
            }
        const double dist = arce::frobenius_distance(recon, m);
        worst_recon = std::max(worst_recon, dist);
        if (dist > 1e-10) ++violations;
    }

    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = 2 + rng.index(7);
        const std::vector<double> eigs = testutil::sorted_masses(rng, d);
        const arce::CMatrix m = testutil::hermitian_with_spectrum(rng, eigs);
        const arce::Spectrum spec = arce::hermitian_eig(m);
        for (std::size_t k = 0; k < d; ++k) {
            const double err = std::abs(spec.eigenvalues[k] - eigs[k]);
            worst_spectrum = std::max(worst_spectrum, err);
            if (err > 1e-11) ++violations;
        }
    }

    detail = fmt("worst reconstruction %.2e (tol 1e-10), worst eigenvalue %.2e (tol 1e-11)",
                 worst_recon, worst_spectrum) +
             fmt(", %.0f violations", double(violations));
    return violations == 0;
}

// ---------------------------------------------------------------------------
// 9. The saturation search finds ratio one and never beats the bound.
// ---------------------------------------------------------------------------

bool criterion_search(std::string& detail) {
    std::uint64_t proposals = 0;
    std::uint64_t violations = 0;
    double worst_low = 1e300;  // min best_ratio, must reach 1 - 1e-9
    double worst_high = 0.0;   // max best_ratio, must stay below 1 + 1e-9
    std::uint64_t seed = 900;

    for (std::size_t nx = 2; nx <= 4; ++nx) {
        const double eps = 0.8 * (1.0 - 1.0 / static_cast<double>(nx));
        for (std::size_t ny = 1; ny <= 2; ++ny) {
            for (const double alpha : {0.0, 0.5, 0.9}) {
                const arce::SearchResult result =
                    arce::search_sup_ratio(nx, ny, alpha, eps, 60000, seed++);
                proposals += result.iterations;
                worst_low = std::min(worst_low, result.best_ratio);
                worst_high = std::max(worst_high, result.best_ratio);
                if (result.best_ratio < 1.0 - 1e-9) ++violations;
                if (result.best_ratio > 1.0 + 1e-9) ++violations;
                if (result.iterations != 60000) ++violations;
            }
        }
    }

    detail = fmt("%.0f proposals, best ratios in [%.12f, %.12f]", double(proposals), worst_low,
                 worst_high) +
             fmt(", %.0f violations", double(violations));
    return violations == 0 && proposals >= 1000000;
}

struct Criterion {
    const char* name;
    bool (*run)(std::string&);
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {"continuity bound holds on randomized pairs", criterion_bound_sweep},
        {"extremal pairs achieve the bound with equality", criterion_extremal_equality},
        {"bound and entropy reach their Shannon forms near order one",
         criterion_order_one_limit},
        {"proof chains stay certified, monotone, and tv-constant", criterion_proof_chains},
        {"mass-transfer steps and monotone pieces never fail", criterion_mass_transfer},
        {"continuity bound transfers to c-q states", criterion_cq_bound},
        {"diagonal embeddings reproduce the classical quantities",
         criterion_diagonal_embedding},
        {"eigensolver reconstructs inputs and recovers spectra", criterion_eigensolver},
        {"saturation search reaches ratio one and never exceeds it", criterion_search},
    };

    int failures = 0;
    int index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("unexpected exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", index, c.name,
                    detail.c_str());
        std::fflush(stdout);
    }
    return failures;
}
