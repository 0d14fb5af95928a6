#pragma once

#include "bgc/structure.hpp"

namespace bgc {

// One stage of the descending walk: the component tested at (p,q), whether
// its class in (Z^k_q cap C^{p,q}) / (B^k_q cap C^{p,q}) vanished, and the
// representative the walk held before this stage (the audit trail).
struct ObstructionStep {
    Bidegree at;
    bool class_vanishes;
    QVector component;             // block-local component that was tested
    GradedVector representative;   // current representative entering the stage
    int class_dim = -1;            // dim of the stage quotient when available
};

struct ObstructionTrace {
    GradedVector input;
    std::vector<ObstructionStep> steps;
    bool vanished = false;
    GradedVector witness;           // D(witness) = input, exactly, when vanished
    Bidegree first_obstruction{};   // stage that refused, when !vanished
    QVector obstruction_representative;

    bool has_witness() const { return vanished; }
};

// Walks q = k down to 0. At stage q the current representative has no
// components above q; its (k-q, q) component is tested against B^k_q, and on
// success a coboundary clearing that block (and nothing above) is subtracted.
// Requires D eta = 0.
ObstructionTrace obstruction_sequence(const BigradedComplex& c, const GradedVector& eta,
                                      StructureAnalysis* ctx = nullptr);

struct VanishingCertificate {
    bool vanishes;
    ObstructionTrace trace;
};

VanishingCertificate decide_vanishing(const BigradedComplex& c, const GradedVector& eta,
                                      StructureAnalysis* ctx = nullptr);

}  // namespace bgc
