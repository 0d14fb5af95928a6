#pragma once

#include <map>
#include <string>

#include "bgc/structure.hpp"

namespace bgc {

// The named spaces of the degree-1/2/3 descriptions, each built directly from
// its own quantified formula (never through the generic projection machinery)
// and stored block-locally in the C^{p,q} it naturally lives in.
struct ExplicitSpaceSet {
    int k = 0;
    std::map<std::string, Subspace> spaces;
    std::map<std::string, Bidegree> blocks;

    const Subspace& at(const std::string& name) const;
};

// Builds every listed space for k in {1,2,3} and cross-checks each against
// its counterpart from the generic pre-module/diagram machinery; any
// disagreement throws CrossCheckFailure naming the space.
ExplicitSpaceSet explicit_spaces(const BigradedComplex& c, int k);
ExplicitSpaceSet explicit_spaces(StructureAnalysis& analysis, int k);

enum class SpecialCase { d2m1_zero, d01_zero };

// The degenerate-case formulas (double complex, resp. vanishing D01) for
// k in {1,2}: built from the simplified displays, then asserted equal to the
// general explicit_spaces output. Throws WrongSpecialization unless the named
// operator family is identically zero.
ExplicitSpaceSet specialize(const BigradedComplex& c, SpecialCase which);

// Second-page dimensions of a double complex computed as horizontal
// cohomology of vertical cohomology, entirely independent of the filtration
// machinery. Requires D2m1 = 0.
std::map<Bidegree, int> double_complex_e2_dims(const BigradedComplex& c);

}  // namespace bgc
