#pragma once

#include <array>
#include <map>

#include "bgc/build.hpp"
#include "bgc/complex.hpp"

namespace bgc {

// Polynomial multivector field on the plane: degree q in {0,1,2} with wedge
// bases {1}, {d/dy1, d/dy2}, {d/dy1 ^ d/dy2}. Keys are (m1, m2, component)
// for the monomial y1^m1 y2^m2; a term of polynomial degree m has Euler
// weight m - q.
struct PolyMultivector {
    int degree = 0;
    std::map<std::array<int, 3>, Rational> coeffs;  // nonzero only

    bool is_zero() const { return coeffs.empty(); }
    PolyMultivector& add_term(int m1, int m2, int comp, const Rational& v);
};

int wedge_components(int q);  // 1, 2, 1 for q = 0, 1, 2

PolyMultivector pm_add(const PolyMultivector& a, const PolyMultivector& b);
PolyMultivector pm_sub(const PolyMultivector& a, const PolyMultivector& b);
PolyMultivector pm_scale(const Rational& c, const PolyMultivector& a);
bool pm_equal(const PolyMultivector& a, const PolyMultivector& b);

// The two generating Poisson vector fields: the fiberwise Euler field
// z1 = y1 d1 + y2 d2 and the rotation field z2 = -y2 d1 + y1 d2.
PolyMultivector field_z1();
PolyMultivector field_z2();
// a1 * z1 + a2 * z2 for polynomial coefficients.
PolyMultivector combine_z(const PolyMultivector& a1, const PolyMultivector& a2);

// Lie derivatives along z1 (the fiberwise Euler operator) and z2, on
// polynomial functions.
PolyMultivector lie_z1(const PolyMultivector& f);
PolyMultivector lie_z2(const PolyMultivector& f);

// The Lichnerowicz coboundary of Psi = (y1^2 + y2^2) d1 ^ d2:
//   q=0:  f   |-> pi*(d1 f) d2 - pi*(d2 f) d1      (the Hamiltonian field)
//   q=1:  Y   |-> (pi * div Y - Y(pi)) d1 ^ d2
//   q=2:  everything dies (no 3-vectors on the plane).
// Signs fixed once; d_pi^2 = 0 identically and the Hamiltonian identities
// a1 = -L_{z2} h, a2 = L_{z1} h hold verbatim with this choice.
PolyMultivector d_pi(const PolyMultivector& a);

// Monomial basis of the weight-w piece in degree q, in a fixed order.
std::vector<std::array<int, 3>> weight_basis(int q, int w);

// Matrix of d_pi from weight-w q-vectors to weight-w (q+1)-vectors in the
// bases above. Needs -2 <= w <= cutoff.
QMatrix lichnerowicz_matrix(int q, int w, int cutoff);

// Basis of the truncated vertical space: all weights -2..W, ascending.
std::vector<std::pair<int, std::array<int, 3>>> vertical_basis(int q, int W);
QVector vertical_coordinates(const PolyMultivector& a, int W);
PolyMultivector from_vertical_coordinates(int q, const QVector& v, int W);

// Column complex: C^{0,q} = q-vectors of weight <= W, D01 = d_pi blockwise
// per weight, no horizontal operators.
BigradedComplex build_vertical_complex(int W);

struct PoissonDecomposition {
    PolyMultivector a1, a2;  // the unique Y = a1 z1 + a2 z2 coefficients
};

// Needs d_pi Y = 0. a1 = div(Y)/2; a2 comes from exact division by y1.
PoissonDecomposition decompose_poisson_field(const PolyMultivector& y);

// Inverts L_{z1} on polynomials vanishing at the origin: each homogeneous
// part of degree m picks up 1/m.
PolyMultivector euler_homotopy(const PolyMultivector& a2);

using MModel = SingleComplex;

// C^{p,q} = model^p (x) (weight-truncated q-vectors), D01 = id (x) d_pi,
// D10 = (-1)^q d_model (x) id, D2m1 = 0.
BigradedComplex build_product_complex(const MModel& m, int W);

}  // namespace bgc
