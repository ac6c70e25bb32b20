#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arce/prob.hpp"

namespace arce {

// Named boolean result of one machine-checked proof obligation.
struct NamedCheck {
    std::string name;
    bool passed = false;
};

// State of the (p, q) pair after one transformation step, with the checks the
// step ran. delta_h and tv are recomputed from the stored matrices.
struct StepSnapshot {
    char label; // 'A' reorder, 'B' walk, 'C' enlarge, 'D'/'E' scalar bounds
    JointDistribution p;
    JointDistribution q;
    double alpha;   // order used for delta_h
    double delta_h; // arce(p, alpha) - arce(q, alpha)
    double tv;
    std::vector<NamedCheck> certificates;
};

// Record of one full bound-derivation run.
struct PipelineTrace {
    std::vector<StepSnapshot> steps;
    double alpha = 0.0;
    double t = 0.0;       // total variation distance of the input pair
    double t_tilde = 0.0; // mass parked on the extra rows by the enlargement
    // Kept block of the enlarged p: top row of the walked p, rows 2..nx of
    // the walked q. Carries mass 1 - t_tilde; not itself a distribution.
    std::vector<std::vector<double>> r_matrix;
    double final_bound = 0.0;
    // Diagnostic scalars (norm sums, per-stage bounds) in evaluation order.
    std::vector<std::pair<std::string, double>> scalars;
};

// Sorts columns of both matrices by descending q-marginal, then rows inside
// each column so cells with q >= p precede the rest, descending by q within
// each block, ties by original index. Entropies and tv are invariant.
StepSnapshot step_a_reorder(const JointDistribution& p, const JointDistribution& q, double alpha);

// Concentrates q: within each column, q-mass in excess of p moves to the top
// cell; in columns where q < p everywhere, lower cells drain upward, capped so
// the top cell never overtakes p. Columns whose top cell now dominates p move
// to the front. The old q is X-majorized by the new one, so arce(q) cannot
// increase. Requires a snapshot with the reordered layout.
StepSnapshot step_b_walk(const StepSnapshot& reordered);

// Embeds the pair into (2 nx - 1) x ny rows: q is zero-padded; p keeps its
// top row, copies q on rows 2..nx, and parks the remaining p - q mass on the
// new rows. The new p is X-majorized by the old one, so arce(p) cannot
// decrease. Requires a snapshot with the walked layout.
StepSnapshot step_c_enlarge(const StepSnapshot& walked);

// Runs the reorder / walk / enlarge steps, then numerically certifies the
// norm-splitting inequalities and the two scalar monotonicity steps that
// close the continuity bound. Throws ChainViolation if any certificate
// fails; that signals an implementation bug, never bad luck with inputs.
PipelineTrace verify_proof_chain(const JointDistribution& p, const JointDistribution& q,
                                 double alpha);

} // namespace arce
