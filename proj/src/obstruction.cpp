#include "bgc/obstruction.hpp"

#include "bgc/errors.hpp"

namespace bgc {

ObstructionTrace obstruction_sequence(const BigradedComplex& c, const GradedVector& eta,
                                      StructureAnalysis* ctx) {
    if (!apply_differential(c, eta).is_zero()) throw NotACocycle("D eta != 0");
    int k = eta.degree;

    ObstructionTrace trace;
    trace.input = eta;
    GradedVector current = eta;
    GradedVector accumulated = graded_zero(k - 1);

    for (int q = k; q >= 0; --q) {
        int p = k - q;
        ObstructionStep step;
        step.at = {p, q};
        step.representative = current;
        QVector x = zero_vector(c.dim(p, q));
        auto comp = current.components.find({p, q});
        if (comp != current.components.end()) x = comp->second;
        step.component = x;
        if (ctx) {
            const PreModules& pm = ctx->pre_modules(k, q);
            Subspace block = block_subspace(c, p, q);
            step.class_dim =
                intersection(pm.Z, block).dim() - intersection(pm.B, block).dim();
        }

        if (is_zero(x)) {
            step.class_vanishes = true;
            trace.steps.push_back(std::move(step));
            continue;
        }

        // The class of x dies in the stage quotient iff some coboundary D xi'
        // projects to exactly x under pi_q; such xi' clears the block without
        // touching anything above it.
        bool solvable = false;
        QVector lift;
        if (k >= 1) {
            GradedVector target_gv{k, {}};
            target_gv.components[{p, q}] = x;
            QVector target = flatten(c, target_gv);
            int keep = (q <= 0) ? c.total_dim(k)
                                : (q > k ? 0 : c.block_offset(k, k - q + 1));
            QMatrix system = c.total_differential(k - 1).submatrix_rows(0, keep);
            QVector rhs(target.begin(), target.begin() + keep);
            solvable = solve(system, rhs, lift);
        }
        step.class_vanishes = solvable;
        trace.steps.push_back(std::move(step));

        if (!solvable) {
            trace.vanished = false;
            trace.first_obstruction = {p, q};
            trace.obstruction_representative = x;
            return trace;
        }
        GradedVector xi = unflatten(c, k - 1, lift);
        current = sub(current, apply_differential(c, xi));
        accumulated = add(accumulated, xi);
    }

    if (!current.is_zero())
        throw CrossCheckFailure("all obstruction stages cleared but a residual remains");
    trace.vanished = true;
    trace.witness = accumulated;
    if (!(sub(apply_differential(c, trace.witness), eta).is_zero()))
        throw CrossCheckFailure("witness does not reproduce the input cocycle");
    return trace;
}

VanishingCertificate decide_vanishing(const BigradedComplex& c, const GradedVector& eta,
                                      StructureAnalysis* ctx) {
    ObstructionTrace t = obstruction_sequence(c, eta, ctx);
    return {t.vanished, std::move(t)};
}

}  // namespace bgc
