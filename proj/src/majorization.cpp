#include "arce/majorization.hpp"

#include <algorithm>
#include <cmath>

namespace arce {

MajorizationVerdict majorizes(const std::vector<double>& u, const std::vector<double>& v) {
    if (u.size() != v.size()) throw LengthMismatch("majorizes: lengths differ");
    std::vector<double> su(u), sv(v);
    std::sort(su.begin(), su.end(), std::greater<double>());
    std::sort(sv.begin(), sv.end(), std::greater<double>());

    MajorizationVerdict verdict;
    verdict.holds = true;
    double cu = 0.0, cv = 0.0, tu = 0.0, tv = 0.0;
    for (double x : su) tu += x;
    for (double x : sv) tv += x;
    if (std::abs(tu - tv) > kMajTol) {
        verdict.holds = false;
        verdict.sum_mismatch = tu - tv;
    }
    for (std::size_t k = 0; k + 1 < su.size(); ++k) {
        cu += su[k];
        cv += sv[k];
        if (cu > cv + kMajTol) {
            verdict.holds = false;
            if (!verdict.failing_prefix) verdict.failing_prefix = k + 1;
        }
    }
    if (verdict.holds) {
        verdict.failing_prefix.reset();
        verdict.sum_mismatch.reset();
    }
    return verdict;
}

MajorizationVerdict x_majorizes(const JointDistribution& q, const JointDistribution& p) {
    if (q.nx() != p.nx() || q.ny() != p.ny())
        throw ShapeMismatch("x_majorizes: shapes differ");
    const ProbVector qY = marginal_y(q);
    const ProbVector pY = marginal_y(p);
    for (std::size_t y = 0; y < q.ny(); ++y) {
        if (std::abs(qY[y] - pY[y]) > 1e-10) {
            MajorizationVerdict verdict;
            verdict.holds = false;
            verdict.sum_mismatch = qY[y] - pY[y];
            return verdict;
        }
    }
    for (std::size_t y = 0; y < q.ny(); ++y) {
        std::vector<double> qc(q.nx()), pc(p.nx());
        for (std::size_t x = 0; x < q.nx(); ++x) {
            qc[x] = q(x, y);
            pc[x] = p(x, y);
        }
        MajorizationVerdict col = majorizes(qc, pc);
        if (!col.holds) return col;
    }
    return MajorizationVerdict{true, std::nullopt, std::nullopt};
}

std::vector<double> transfer_to_top(std::vector<double> v, std::size_t i, double s) {
    if (i < 1 || i >= v.size()) throw OutOfRange("transfer_to_top: source index out of range");
    for (std::size_t k = 0; k + 1 < v.size(); ++k)
        if (v[k] < v[k + 1]) throw NotSorted("transfer_to_top: input not non-increasing");
    if (!(s > 0.0) || s > v[i]) throw TransferTooLarge("transfer_to_top: s outside (0, v[i]]");
    v[0] += s;
    v[i] -= s;
    return v;
}

std::vector<double> spill_to_zero_slot(std::vector<double> v, std::size_t i, std::size_t j, double s) {
    if (i >= v.size() || j >= v.size() || i == j)
        throw OutOfRange("spill_to_zero_slot: bad indices");
    if (v[j] != 0.0) throw SlotNotZero("spill_to_zero_slot: target slot not zero");
    if (!(s > 0.0) || s > v[i]) throw TransferTooLarge("spill_to_zero_slot: s outside (0, v[i]]");
    v[i] -= s;
    v[j] = s;
    return v;
}

bool check_orthogonal_padding(const std::vector<double>& v, const std::vector<double>& v2,
                              const std::vector<double>& perp) {
    if (v.size() != v2.size() || v.size() != perp.size())
        throw LengthMismatch("check_orthogonal_padding: lengths differ");
    for (std::size_t k = 0; k < perp.size(); ++k)
        if (perp[k] != 0.0 && (v[k] != 0.0 || v2[k] != 0.0))
            throw SupportOverlap("check_orthogonal_padding: perp meets a live coordinate");
    std::vector<double> a(v2), b(v);
    for (std::size_t k = 0; k < perp.size(); ++k) {
        a[k] += perp[k];
        b[k] += perp[k];
    }
    return majorizes(a, b).holds;
}

bool marginal_schur_concavity_witness(const JointDistribution& p, const JointDistribution& q,
                                      AlphaOrder a) {
    if (!x_majorizes(q, p).holds)
        throw PreconditionNotMet("marginal_schur_concavity_witness: q is not X-majorized by p");
    return arce(p, a) <= arce(q, a) + 1e-9;
}

} // namespace arce
