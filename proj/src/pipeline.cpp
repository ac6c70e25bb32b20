#include "arce/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "arce/bound.hpp"
#include "arce/entropy.hpp"
#include "arce/majorization.hpp"

namespace arce {

namespace {

using Matrix = std::vector<std::vector<double>>;

JointDistribution from_rows(const Matrix& m) {
    std::vector<double> flat;
    flat.reserve(m.size() * m.front().size());
    for (const auto& row : m) flat.insert(flat.end(), row.begin(), row.end());
    return JointDistribution(m.size(), m.front().size(), std::move(flat));
}

std::vector<double> column_sums(const Matrix& m) {
    std::vector<double> s(m.front().size(), 0.0);
    for (const auto& row : m)
        for (std::size_t y = 0; y < s.size(); ++y) s[y] += row[y];
    return s;
}

Matrix permute_columns(const Matrix& m, const std::vector<std::size_t>& order) {
    Matrix out(m.size(), std::vector<double>(order.size()));
    for (std::size_t x = 0; x < m.size(); ++x)
        for (std::size_t k = 0; k < order.size(); ++k) out[x][k] = m[x][order[k]];
    return out;
}

// sum over columns y of (sum_x m[x][y]^alpha)^(1/alpha); zero columns skipped
double column_norm_sum(const Matrix& m, double alpha) {
    double total = 0.0;
    for (std::size_t y = 0; y < m.front().size(); ++y) {
        double inner = 0.0;
        for (std::size_t x = 0; x < m.size(); ++x)
            if (m[x][y] > 0.0) inner += std::pow(m[x][y], alpha);
        if (inner > 0.0) total += std::pow(inner, 1.0 / alpha);
    }
    return total;
}

double mass(const Matrix& m) {
    double s = 0.0;
    for (const auto& row : m) s = std::accumulate(row.begin(), row.end(), s);
    return s;
}

StepSnapshot make_snapshot(char label, Matrix pm, Matrix qm, double alpha,
                           std::vector<NamedCheck> certs) {
    JointDistribution p = from_rows(pm);
    JointDistribution q = from_rows(qm);
    const AlphaOrder a(alpha);
    const double dh = arce(p, a) - arce(q, a);
    const double tv = tv_distance(p, q).value;
    return StepSnapshot{label, std::move(p), std::move(q), alpha, dh, tv, std::move(certs)};
}

void require_same_shape(const JointDistribution& p, const JointDistribution& q,
                        const char* what) {
    if (p.nx() != q.nx() || p.ny() != q.ny())
        throw ShapeMismatch(std::string(what) + ": shapes differ");
}

// Reordered layout: q-marginals non-increasing across columns; within each
// column the rows with q >= p form a prefix and q is non-increasing inside
// both the prefix and the remainder. Comparisons are exact because the
// reorder step only permutes cells.
void require_reordered(const Matrix& p, const Matrix& q) {
    const std::size_t nx = p.size(), ny = p.front().size();
    const std::vector<double> qY = column_sums(q);
    for (std::size_t y = 0; y + 1 < ny; ++y)
        if (qY[y + 1] > qY[y]) throw NotReordered("columns not sorted by q-marginal");
    for (std::size_t y = 0; y < ny; ++y) {
        bool in_prefix = true;
        for (std::size_t x = 0; x < nx; ++x) {
            const bool dominated = q[x][y] >= p[x][y];
            if (in_prefix && !dominated) in_prefix = false;
            else if (!in_prefix && dominated)
                throw NotReordered("dominated rows do not form a prefix");
            if (x + 1 < nx) {
                const bool next_dom = q[x + 1][y] >= p[x + 1][y];
                if (dominated == next_dom && q[x + 1][y] > q[x][y])
                    throw NotReordered("q not sorted inside a block");
            }
        }
    }
}

// Walked layout: columns whose top cell dominates p form a prefix; inside
// them q <= p below the top row; in the remaining columns all rows below the
// top are exactly zero.
void require_walked(const Matrix& p, const Matrix& q) {
    const std::size_t nx = p.size(), ny = p.front().size();
    bool in_prefix = true;
    for (std::size_t y = 0; y < ny; ++y) {
        const bool dominating = q[0][y] >= p[0][y];
        if (in_prefix && !dominating) in_prefix = false;
        else if (!in_prefix && dominating)
            throw NotWalked("dominating columns do not form a prefix");
        for (std::size_t x = 1; x < nx; ++x) {
            if (dominating) {
                if (q[x][y] > p[x][y]) throw NotWalked("excess below the top row");
            } else if (q[x][y] != 0.0) {
                throw NotWalked("drained column still has mass below the top row");
            }
        }
    }
}

} // namespace

StepSnapshot step_a_reorder(const JointDistribution& p, const JointDistribution& q,
                            double alpha) {
    require_same_shape(p, q, "step_a_reorder");
    const std::size_t nx = p.nx(), ny = p.ny();
    const Matrix pin = p.rows(), qin = q.rows();

    const std::vector<double> qY = column_sums(qin);
    std::vector<std::size_t> cols(ny);
    std::iota(cols.begin(), cols.end(), 0);
    std::stable_sort(cols.begin(), cols.end(),
                     [&](std::size_t a, std::size_t b) { return qY[a] > qY[b]; });
    Matrix pm = permute_columns(pin, cols);
    Matrix qm = permute_columns(qin, cols);

    for (std::size_t y = 0; y < ny; ++y) {
        std::vector<std::size_t> dominated, rest;
        for (std::size_t x = 0; x < nx; ++x)
            (qm[x][y] >= pm[x][y] ? dominated : rest).push_back(x);
        auto by_q_desc = [&](std::size_t a, std::size_t b) { return qm[a][y] > qm[b][y]; };
        std::stable_sort(dominated.begin(), dominated.end(), by_q_desc);
        std::stable_sort(rest.begin(), rest.end(), by_q_desc);
        dominated.insert(dominated.end(), rest.begin(), rest.end());
        std::vector<double> pc(nx), qc(nx);
        for (std::size_t i = 0; i < nx; ++i) {
            pc[i] = pm[dominated[i]][y];
            qc[i] = qm[dominated[i]][y];
        }
        for (std::size_t i = 0; i < nx; ++i) {
            pm[i][y] = pc[i];
            qm[i][y] = qc[i];
        }
    }

    const AlphaOrder a(alpha);
    const double hp_in = arce(p, a), hq_in = arce(q, a), tv_in = tv_distance(p, q).value;
    StepSnapshot snap = make_snapshot('A', std::move(pm), std::move(qm), alpha, {});
    snap.certificates = {
        {"arce_p_invariant", std::abs(arce(snap.p, a) - hp_in) <= 1e-12},
        {"arce_q_invariant", std::abs(arce(snap.q, a) - hq_in) <= 1e-12},
        {"tv_invariant", std::abs(snap.tv - tv_in) <= 1e-12},
    };
    return snap;
}

StepSnapshot step_b_walk(const StepSnapshot& reordered) {
    require_same_shape(reordered.p, reordered.q, "step_b_walk");
    const Matrix pm = reordered.p.rows();
    Matrix qm = reordered.q.rows();
    require_reordered(pm, qm);
    const std::size_t nx = pm.size(), ny = pm.front().size();
    const AlphaOrder a(reordered.alpha);
    const double hq_in = arce(reordered.q, a);
    const double tv_in = tv_distance(reordered.p, reordered.q).value;

    for (std::size_t y = 0; y < ny; ++y) {
        std::size_t ilen = 0;
        while (ilen < nx && qm[ilen][y] >= pm[ilen][y]) ++ilen;
        if (ilen > 0) {
            // dominated prefix: push each excess up to the top cell
            for (std::size_t x = 1; x < ilen; ++x) {
                qm[0][y] += qm[x][y] - pm[x][y];
                qm[x][y] = pm[x][y];
            }
        } else {
            // q < p everywhere: drain lower cells upward until p(1,y) is hit
            for (std::size_t x = 1; x < nx; ++x) {
                const double cap = pm[0][y] - qm[0][y];
                const double delta = std::min(qm[x][y], cap);
                if (delta <= 0.0) continue;
                if (delta == cap) qm[0][y] = pm[0][y]; // exact, keeps the split test crisp
                else qm[0][y] += delta;
                qm[x][y] -= delta;
            }
        }
    }

    // majorization certificate before the column permutation, so columns of
    // the old and new q still line up
    const bool walk_maj = x_majorizes(reordered.q, from_rows(qm)).holds;

    std::vector<std::size_t> order, back;
    for (std::size_t y = 0; y < ny; ++y) (qm[0][y] >= pm[0][y] ? order : back).push_back(y);
    const std::size_t nj = order.size();
    order.insert(order.end(), back.begin(), back.end());
    Matrix pout = permute_columns(pm, order);
    Matrix qout = permute_columns(qm, order);

    bool split_signs = true;
    double top_excess = 0.0;
    for (std::size_t y = 0; y < ny; ++y) {
        if (y < nj) {
            split_signs = split_signs && qout[0][y] >= pout[0][y];
            for (std::size_t x = 1; x < nx; ++x)
                split_signs = split_signs && qout[x][y] <= pout[x][y];
            top_excess += qout[0][y] - pout[0][y];
        } else {
            split_signs = split_signs && qout[0][y] < pout[0][y];
            for (std::size_t x = 1; x < nx; ++x)
                split_signs = split_signs && qout[x][y] == 0.0;
        }
    }

    StepSnapshot snap = make_snapshot('B', std::move(pout), std::move(qout), reordered.alpha, {});
    snap.certificates = {
        {"walk_majorization", walk_maj},
        {"arce_q_non_increasing", arce(snap.q, a) <= hq_in + 1e-9},
        {"tv_invariant", std::abs(snap.tv - tv_in) <= 1e-12},
        {"post_split_signs", split_signs},
        {"top_row_excess_equals_tv", std::abs(top_excess - tv_in) <= 1e-12},
    };
    return snap;
}

StepSnapshot step_c_enlarge(const StepSnapshot& walked) {
    require_same_shape(walked.p, walked.q, "step_c_enlarge");
    const Matrix pm = walked.p.rows(), qm = walked.q.rows();
    require_walked(pm, qm);
    const std::size_t nx = pm.size(), ny = pm.front().size();
    const std::size_t big = 2 * nx - 1;
    const AlphaOrder a(walked.alpha);
    const double hp_in = arce(walked.p, a);
    const double tv_in = tv_distance(walked.p, walked.q).value;

    Matrix psec(big, std::vector<double>(ny, 0.0));
    Matrix qpri(big, std::vector<double>(ny, 0.0));
    for (std::size_t y = 0; y < ny; ++y) {
        psec[0][y] = pm[0][y];
        for (std::size_t x = 1; x < nx; ++x) {
            qpri[x][y] = qm[x][y];
            psec[x][y] = qm[x][y];
            psec[nx + x - 1][y] = pm[x][y] - qm[x][y];
        }
        qpri[0][y] = qm[0][y];
    }

    double t_tilde = 0.0;
    for (std::size_t x = nx; x < big; ++x)
        for (std::size_t y = 0; y < ny; ++y) t_tilde += psec[x][y];
    double jc_gap = 0.0; // mass the drained columns failed to lift to the top
    for (std::size_t y = 0; y < ny; ++y)
        if (qm[0][y] < pm[0][y]) jc_gap += pm[0][y] - qm[0][y];

    Matrix p_embedded(big, std::vector<double>(ny, 0.0));
    for (std::size_t x = 0; x < nx; ++x) p_embedded[x] = pm[x];

    bool q_unchanged = true;
    for (std::size_t y = 0; y < ny; ++y)
        for (std::size_t x = 0; x < big; ++x)
            q_unchanged = q_unchanged && qpri[x][y] == (x < nx ? qm[x][y] : 0.0);

    StepSnapshot snap = make_snapshot('C', std::move(psec), std::move(qpri), walked.alpha, {});
    snap.certificates = {
        {"enlarge_majorization", x_majorizes(snap.p, from_rows(p_embedded)).holds},
        {"arce_p_non_decreasing", arce(snap.p, a) >= hp_in - 1e-9},
        {"q_unchanged", q_unchanged},
        {"tv_invariant", std::abs(snap.tv - tv_in) <= 1e-12},
        {"residual_mass_bound", t_tilde <= tv_in + 1e-12},
        {"residual_mass_identity", std::abs(t_tilde - (tv_in - jc_gap)) <= 1e-12},
    };
    return snap;
}

PipelineTrace verify_proof_chain(const JointDistribution& p_in, const JointDistribution& q_in,
                                 double alpha) {
    require_same_shape(p_in, q_in, "verify_proof_chain");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw AlphaOutOfRange("verify_proof_chain: alpha outside (0,1)");
    const AlphaOrder a(alpha);

    const JointDistribution* p = &p_in;
    const JointDistribution* q = &q_in;
    if (arce(*p, a) < arce(*q, a)) std::swap(p, q);
    const std::size_t nx = p->nx();
    const double t = tv_distance(*p, *q).value;
    const double cap = 1.0 - 1.0 / static_cast<double>(nx);
    if (t > cap + 1e-12)
        throw TvBudgetExceeded("verify_proof_chain: tv exceeds 1 - 1/nx");
    const double dh0 = arce(*p, a) - arce(*q, a);

    PipelineTrace trace;
    trace.alpha = alpha;
    trace.t = t;
    StepSnapshot after_a = step_a_reorder(*p, *q, alpha);
    StepSnapshot after_b = step_b_walk(after_a);
    StepSnapshot after_c = step_c_enlarge(after_b);
    const Matrix psec = after_c.p.rows();
    const std::size_t big = psec.size(), ny = psec.front().size();
    const std::size_t nxo = (big + 1) / 2;
    Matrix kept(psec.begin(), psec.begin() + nxo);
    Matrix residual(big > nxo ? Matrix(psec.begin() + nxo, psec.end())
                              : Matrix(1, std::vector<double>(ny, 0.0)));

    const double t_tilde = mass(residual);
    trace.t_tilde = t_tilde;
    trace.r_matrix = kept;

    const double dm1 = static_cast<double>(nxo - 1);
    const double big_norm = column_norm_sum(psec, alpha);
    const double kept_norm = column_norm_sum(kept, alpha);       // R
    const double residual_norm = column_norm_sum(residual, alpha);
    const double residual_term = std::pow(residual_norm, alpha); // (sum_y ||res_y||_a)^a
    const double schur_term = std::pow(dm1, 1.0 - alpha) * std::pow(t_tilde, alpha);
    const double kept_mass = mass(kept);

    const double h_psec = arce(after_c.p, a);
    const double h_qpri = arce(after_c.q, a);
    const double upper_psec = std::log2(std::pow(kept_norm, alpha) + schur_term) / (1.0 - alpha);
    const double lower_qpri = alpha / (1.0 - alpha) * std::log2(kept_norm + t_tilde);
    const double term_bound = upper_psec - lower_qpri;
    const double mono_bound =
        std::log2(std::pow(1.0 - t_tilde, alpha) + schur_term) / (1.0 - alpha);
    const double t_eff = std::min(std::max(t, t_tilde), cap);
    const double final_bound = nxo >= 2 ? gamma(alpha, t_eff, nxo) : 0.0;
    trace.final_bound = final_bound;

    std::vector<NamedCheck> d_certs = {
        {"kept_mass_complement", std::abs(kept_mass - (1.0 - t_tilde)) <= 1e-12},
        {"kept_norm_exceeds_mass", kept_norm >= (1.0 - t_tilde) - 1e-9},
        {"minkowski_split",
         std::pow(big_norm, alpha) <= std::pow(kept_norm, alpha) + residual_term + 1e-9},
        {"residual_schur_bound", residual_term <= schur_term + 1e-9},
        {"arce_psec_upper", h_psec <= upper_psec + 1e-9},
        {"arce_qpri_lower", h_qpri >= lower_qpri - 1e-9},
        {"term_gap_bound", h_psec - h_qpri <= term_bound + 1e-9},
    };
    std::vector<NamedCheck> e_certs = {
        {"f_monotone_step", term_bound <= mono_bound + 1e-9},
        {"g_monotone_step", mono_bound <= final_bound + 1e-9},
        {"final_bound_holds", dh0 <= final_bound + 1e-9},
    };
    trace.steps.reserve(5);
    trace.steps.push_back(std::move(after_a));
    trace.steps.push_back(std::move(after_b));
    trace.steps.push_back(after_c);
    trace.steps.push_back(StepSnapshot{'D', after_c.p, after_c.q, alpha, after_c.delta_h,
                                       after_c.tv, std::move(d_certs)});
    trace.steps.push_back(StepSnapshot{'E', std::move(after_c.p), std::move(after_c.q), alpha,
                                       after_c.delta_h, after_c.tv, std::move(e_certs)});

    trace.scalars = {
        {"delta_h_initial", dh0},
        {"t", t},
        {"t_tilde", t_tilde},
        {"t_effective", t_eff},
        {"kept_norm", kept_norm},
        {"kept_mass", kept_mass},
        {"enlarged_norm", big_norm},
        {"residual_term", residual_term},
        {"schur_term", schur_term},
        {"arce_enlarged_p", h_psec},
        {"arce_walked_q", h_qpri},
        {"upper_enlarged_p", upper_psec},
        {"lower_walked_q", lower_qpri},
        {"term_bound", term_bound},
        {"mono_bound", mono_bound},
        {"final_bound", final_bound},
    };

    // trace-level invariants: deltas never drop, tv constant through 'C'
    double prev = dh0;
    for (const StepSnapshot& s : trace.steps) {
        if (s.delta_h < prev - 1e-12)
            throw ChainViolation(std::string("delta_h dropped at step ") + s.label);
        prev = s.delta_h;
        if (std::abs(s.tv - t) > 1e-12)
            throw ChainViolation(std::string("tv drifted at step ") + s.label);
        for (const NamedCheck& c : s.certificates)
            if (!c.passed)
                throw ChainViolation(std::string("certificate failed at step ") + s.label + ": " +
                                     c.name);
    }
    return trace;
}

} // namespace arce
