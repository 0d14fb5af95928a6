#pragma once

#include "bgc/complex.hpp"

namespace bgc {

// A single-graded cochain complex in degrees 0..len-1: dims per degree and
// differentials d[i]: degree i -> i+1 (d.back() maps into the zero space and
// may be omitted). Also serves as the finite stand-in model for a manifold's
// de Rham complex.
struct SingleComplex {
    std::vector<int> dims;
    std::vector<QMatrix> d;

    int len() const { return static_cast<int>(dims.size()); }
    int dim(int i) const { return (i >= 0 && i < len()) ? dims[i] : 0; }
    QMatrix diff(int i) const;

    // Throws MalformedComplex unless shapes agree and d*d = 0.
    void check() const;
};

SingleComplex point_model();     // one generator in degree 0
SingleComplex circle_model();    // dims 1,1 with zero differential
SingleComplex interval_model();  // dims 2,1 with d = [-1 1]

// C^{p,q} = E^p (x) F^q with D01 = id (x) dF and D10 = (-1)^q dE (x) id; the
// sign twist makes the two operators anticommute. D2m1 = 0.
BigradedComplex tensor_product(const SingleComplex& e, const SingleComplex& f);

// Regrades a double complex (D2m1 = 0): block (s,t) moves to
// (s + 2t, T - t) with T = qmax, sending D01 to D2m1 and keeping D10. The
// result has D01 = 0 and the two remaining operators anticommute.
BigradedComplex regrade_to_d01_zero(const BigradedComplex& c);

// Conjugates a double complex by I + phi where phi acts on the single block
// C^{p0,q0} -> C^{p0+1,q0-1}. phi is strictly filtration-raising and
// square-zero, so the conjugated coboundary decomposes into exactly the three
// allowed components; the induced D2m1 is d10*phi resp. -phi*d10.
BigradedComplex conjugate_single_block(const BigradedComplex& c, int p0, int q0,
                                       const QMatrix& phi);

// One generator v at (0,1), one generator w at (2,0), D2m1 v = w.
BigradedComplex example_nz();
// Four one-dimensional blocks, all operators zero.
BigradedComplex example_torus();
// interval (x) interval, a contractible double complex.
BigradedComplex example_interval2();

}  // namespace bgc
