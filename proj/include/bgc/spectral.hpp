#pragma once

#include <map>

#include "bgc/complex.hpp"

namespace bgc {

// Z^{p,q}_r = F^p C^{p+q} cap D^{-1}(F^{p+r} C^{p+q+1}) and
// B^{p,q}_{r-1} = F^p C^{p+q} cap D(F^{p-r+1} C^{p+q-1}), both inside C^{p+q}.
struct ZrBr {
    Subspace Z;
    Subspace B;
};

ZrBr zr_br(const BigradedComplex& c, int p, int q, int r);

// Page r of the filtration spectral sequence. dims holds the nonzero entries;
// differentials holds d_r out of every (p,q) with dim E_r^{p,q} > 0, in the
// quotient bases chosen by extending the denominator basis (only dims and
// ranks are basis-independent).
struct SpectralPage {
    int r = 0;
    std::map<Bidegree, int> dims;
    std::map<Bidegree, QMatrix> differentials;

    int dim(Bidegree b) const {
        auto it = dims.find(b);
        return it == dims.end() ? 0 : it->second;
    }
};

SpectralPage compute_page(const BigradedComplex& c, int r);

struct EInfinity {
    int dim;
    int page_index_stabilized;  // max(p+1, q+2)
};

// dim E_N^{p,q} at the stabilization bound, cross-checked against the direct
// closed-form E_infinity quotient; disagreement throws MismatchAtInfinity.
EInfinity e_infinity(const BigradedComplex& c, int p, int q);

// Lazy page cache over one immutable complex.
class SpectralSequence {
public:
    explicit SpectralSequence(const BigradedComplex& c) : c_(&c) {}

    const SpectralPage& page(int r);
    EInfinity infinity(int p, int q) const { return e_infinity(*c_, p, q); }
    const BigradedComplex& complex_ref() const { return *c_; }

private:
    const BigradedComplex* c_;
    std::map<int, SpectralPage> cache_;
};

}  // namespace bgc
