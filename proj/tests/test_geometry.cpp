#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bgc/geometry.hpp"
#include "bgc/structure.hpp"

using namespace bgc;

namespace {

PolyMultivector random_function(std::mt19937_64& rng, int max_degree, bool no_constant = false) {
    PolyMultivector f;
    f.degree = 0;
    for (int m1 = 0; m1 <= max_degree; ++m1)
        for (int m2 = 0; m1 + m2 <= max_degree; ++m2) {
            if (no_constant && m1 + m2 == 0) continue;
            if (rng() % 2 == 0) f.add_term(m1, m2, 0, Rational(static_cast<int>(rng() % 7) - 3));
        }
    return f;
}

PolyMultivector random_multivector(std::mt19937_64& rng, int q, int max_degree) {
    PolyMultivector a;
    a.degree = q;
    for (int m1 = 0; m1 <= max_degree; ++m1)
        for (int m2 = 0; m1 + m2 <= max_degree; ++m2)
            for (int comp = 0; comp < wedge_components(q); ++comp)
                if (rng() % 2 == 0)
                    a.add_term(m1, m2, comp, Rational(static_cast<int>(rng() % 7) - 3));
    return a;
}

}  // namespace

TEST_CASE("the euler and rotation fields are cocycles") {
    CHECK(d_pi(field_z1()).is_zero());
    CHECK(d_pi(field_z2()).is_zero());
}

TEST_CASE("the hamiltonian field of y1 is |y|^2 d2") {
    PolyMultivector h;
    h.degree = 0;
    h.add_term(1, 0, 0, Rational(1));  // h = y1
    PolyMultivector expected;
    expected.degree = 1;
    expected.add_term(2, 0, 1, Rational(1));
    expected.add_term(0, 2, 1, Rational(1));
    CHECK(pm_equal(d_pi(h), expected));
}

TEST_CASE("d_pi squares to zero on random multivectors") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        CHECK(d_pi(d_pi(random_function(rng, 4))).is_zero());
        CHECK(d_pi(d_pi(random_multivector(rng, 1, 4))).is_zero());
    }
}

TEST_CASE("cocycle condition is the divergence identity, per weight") {
    // d_pi Y = 0 iff y1 Y1 + y2 Y2 = (1/2)|y|^2 div Y; as matrices per weight.
    for (int w = -2; w <= 4; ++w) {
        auto basis = weight_basis(1, w);
        if (basis.empty()) continue;
        QMatrix lich = lichnerowicz_matrix(1, w, 4);
        // Matrix of Y |-> 2(y1 Y1 + y2 Y2) - |y|^2 div Y in the same bases;
        // this is exactly -(d_pi Y) coefficient-wise, so kernels must agree.
        Subspace via_lich = kernel_basis(lich);
        auto dst = weight_basis(2, w);
        std::map<std::array<int, 3>, int> index;
        for (std::size_t i = 0; i < dst.size(); ++i) index[dst[i]] = static_cast<int>(i);
        QMatrix ident(static_cast<int>(dst.size()), static_cast<int>(basis.size()));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            PolyMultivector y;
            y.degree = 1;
            y.add_term(basis[j][0], basis[j][1], basis[j][2], Rational(1));
            // 2(y1 Y1 + y2 Y2)
            PolyMultivector lhs;
            lhs.degree = 2;
            for (const auto& [key, v] : y.coeffs) {
                if (key[2] == 0) lhs.add_term(key[0] + 1, key[1], 0, Rational(2) * v);
                if (key[2] == 1) lhs.add_term(key[0], key[1] + 1, 0, Rational(2) * v);
            }
            // |y|^2 div Y
            PolyMultivector rhs;
            rhs.degree = 2;
            for (const auto& [key, v] : y.coeffs) {
                if (key[2] == 0 && key[0] > 0) {
                    rhs.add_term(key[0] + 1, key[1], 0, Rational(key[0]) * v);
                    rhs.add_term(key[0] - 1, key[1] + 2, 0, Rational(key[0]) * v);
                }
                if (key[2] == 1 && key[1] > 0) {
                    rhs.add_term(key[0] + 2, key[1] - 1, 0, Rational(key[1]) * v);
                    rhs.add_term(key[0], key[1] + 1, 0, Rational(key[1]) * v);
                }
            }
            PolyMultivector diff = pm_sub(lhs, rhs);
            for (const auto& [key, v] : diff.coeffs)
                ident.set(index.at(key), static_cast<int>(j), v);
        }
        CHECK(kernel_basis(ident) == via_lich);
    }
}

TEST_CASE("weight blocks compose to zero and match the symbolic operator") {
    for (int w = -2; w <= 4; ++w) {
        QMatrix d0 = lichnerowicz_matrix(0, w, 4);
        QMatrix d1 = lichnerowicz_matrix(1, w, 4);
        CHECK((d1 * d0).is_zero());
    }
    CHECK_THROWS_AS(lichnerowicz_matrix(0, -3, 4), InvalidDimensions);
    CHECK_THROWS_AS(lichnerowicz_matrix(0, 5, 4), InvalidDimensions);
}

TEST_CASE("vertical complex at W = 0 carries z1 and z2 as cocycles") {
    BigradedComplex c = build_vertical_complex(0);
    REQUIRE(c.is_valid());
    QVector z1 = vertical_coordinates(field_z1(), 0);
    QVector z2 = vertical_coordinates(field_z2(), 0);
    CHECK(is_zero(c.op(OpKind::d01, 0, 1).apply(z1)));
    CHECK(is_zero(c.op(OpKind::d01, 0, 1).apply(z2)));
}

TEST_CASE("vertical cohomology: constants in degree 0, z1 and z2 generate degree 1") {
    for (int w_cut = 0; w_cut <= 3; ++w_cut) {
        BigradedComplex c = build_vertical_complex(w_cut);
        CHECK(cohomology(c, 0).dim == 1);  // Casimirs are the constants

        CohomologyResult h1 = cohomology(c, 1);
        QVector z1 = vertical_coordinates(field_z1(), w_cut);
        QVector z2 = vertical_coordinates(field_z2(), w_cut);
        CHECK(h1.cocycles.contains(z1));
        CHECK(h1.cocycles.contains(z2));
        // Independence in cohomology: no combination is a coboundary.
        Subspace span_z = Subspace::span({z1, z2}, c.total_dim(1));
        CHECK(intersection(span_z, h1.coboundaries).dim() == 0);
        CHECK(h1.dim == 2);  // nothing else survives in the polynomial model
    }
}

TEST_CASE("vertical cohomology is additive across weights") {
    // The column splits as a direct sum of weight blocks, so the cohomology
    // must equal the sum of per-weight kernel/image counts taken straight
    // from the weight-block matrices.
    for (int W = 0; W <= 3; ++W) {
        BigradedComplex c = build_vertical_complex(W);
        for (int q = 0; q <= 2; ++q) {
            int expected = 0;
            for (int w = -2; w <= W; ++w) {
                int z = kernel_basis(lichnerowicz_matrix(q, w, W)).dim();
                int b = q >= 1 ? rank(lichnerowicz_matrix(q - 1, w, W)) : 0;
                expected += z - b;
            }
            CHECK(cohomology(c, q).dim == expected);
        }
    }
}

TEST_CASE("decompose_poisson_field on the generators and a hamiltonian field") {
    PoissonDecomposition d1 = decompose_poisson_field(field_z1());
    CHECK(pm_equal(d1.a1, PolyMultivector{0, {{{0, 0, 0}, Rational(1)}}}));
    CHECK(d1.a2.is_zero());

    PoissonDecomposition d2 = decompose_poisson_field(field_z2());
    CHECK(d2.a1.is_zero());
    CHECK(pm_equal(d2.a2, PolyMultivector{0, {{{0, 0, 0}, Rational(1)}}}));

    // Y = |y|^2 d2 is the hamiltonian field of y1: a1 = y2, a2 = y1.
    PolyMultivector h;
    h.degree = 0;
    h.add_term(1, 0, 0, Rational(1));
    PoissonDecomposition dh = decompose_poisson_field(d_pi(h));
    CHECK(pm_equal(dh.a1, PolyMultivector{0, {{{0, 1, 0}, Rational(1)}}}));
    CHECK(pm_equal(dh.a2, PolyMultivector{0, {{{1, 0, 0}, Rational(1)}}}));

    PolyMultivector bad;
    bad.degree = 1;
    bad.add_term(0, 0, 0, Rational(1));  // constant d1 is not Poisson
    CHECK_THROWS_AS(decompose_poisson_field(bad), NotPoisson);
}

TEST_CASE("hamiltonian identities a1 = -L_z2 h and a2 = L_z1 h") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        PolyMultivector h = random_function(rng, 4);
        PolyMultivector field = d_pi(h);
        if (field.is_zero()) continue;
        PoissonDecomposition d = decompose_poisson_field(field);
        CHECK(pm_equal(d.a1, pm_scale(Rational(-1), lie_z2(h))));
        CHECK(pm_equal(d.a2, lie_z1(h)));
    }
}

TEST_CASE("euler homotopy inverts L_z1 monomial-wise") {
    PolyMultivector a;
    a.degree = 0;
    a.add_term(1, 0, 0, Rational(1));  // y1
    CHECK(pm_equal(euler_homotopy(a), a));

    PolyMultivector b;
    b.degree = 0;
    b.add_term(1, 1, 0, Rational(1));  // y1 y2 -> half
    PolyMultivector expect;
    expect.degree = 0;
    expect.add_term(1, 1, 0, Rational(1, 2));
    CHECK(pm_equal(euler_homotopy(b), expect));

    CHECK(euler_homotopy(PolyMultivector{0, {}}).is_zero());

    PolyMultivector constant;
    constant.degree = 0;
    constant.add_term(0, 0, 0, Rational(1));
    CHECK_THROWS_AS(euler_homotopy(constant), NonVanishingConstantTerm);

    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        PolyMultivector a2 = random_function(rng, 4, /*no_constant=*/true);
        CHECK(pm_equal(lie_z1(euler_homotopy(a2)), a2));
    }
}

TEST_CASE("product with the point model is the vertical complex") {
    for (int w = 0; w <= 2; ++w) {
        BigradedComplex vert = build_vertical_complex(w);
        BigradedComplex prod = build_product_complex(point_model(), w);
        CHECK(prod == vert);
    }
}

TEST_CASE("product with the circle model: degree-0 and degree-1 classes") {
    BigradedComplex prod = build_product_complex(circle_model(), 0);
    REQUIRE(prod.is_valid());
    CHECK(cohomology(prod, 0).dim == 1);

    // theta (x) 1, 1 (x) z1, 1 (x) z2 are independent degree-1 classes.
    CohomologyResult h1 = cohomology(prod, 1);
    int v1 = prod.dim(0, 1);
    QVector z1 = vertical_coordinates(field_z1(), 0);
    QVector z2 = vertical_coordinates(field_z2(), 0);
    QVector c_z1 = zero_vector(prod.total_dim(1));
    QVector c_z2 = zero_vector(prod.total_dim(1));
    for (int i = 0; i < v1; ++i) {
        c_z1[prod.block_offset(1, 0) + i] = z1[i];
        c_z2[prod.block_offset(1, 0) + i] = z2[i];
    }
    QVector theta = zero_vector(prod.total_dim(1));
    theta[prod.block_offset(1, 1)] = Rational(1);  // generator of model^1 (x) 1
    CHECK(h1.cocycles.contains(c_z1));
    CHECK(h1.cocycles.contains(c_z2));
    CHECK(h1.cocycles.contains(theta));
    Subspace three = Subspace::span({c_z1, c_z2, theta}, prod.total_dim(1));
    CHECK(three.dim() == 3);
    CHECK(intersection(three, h1.coboundaries).dim() == 0);

    // Kunneth over the zero-differential circle model at every cutoff.
    for (int w = 0; w <= 2; ++w) {
        BigradedComplex vert = build_vertical_complex(w);
        BigradedComplex p = build_product_complex(circle_model(), w);
        CHECK(cohomology(p, 1).dim == cohomology(vert, 1).dim + cohomology(vert, 0).dim);
    }
}

TEST_CASE("the null rows of the product complex carry the base model's cohomology") {
    // With a flat product, the null subcomplex is (Casimirs of the fiber) (x)
    // the base model, and the fiber Casimirs are the constants; so the q = 0
    // null row reproduces the circle model's cohomology.
    BigradedComplex prod = build_product_complex(circle_model(), 2);
    StructureAnalysis an(prod);
    CHECK(an.null_cohomology(0, 0).dim == 1);
    CHECK(an.null_cohomology(0, 1).dim == 1);
}

TEST_CASE("degree-1 splitting of the product: base classes plus fiber classes") {
    // H^1 = H^1(N_0) + ker(rho_1)/B^1(C^{0,.}) with dims 1 and 2.
    for (int w = 0; w <= 2; ++w) {
        BigradedComplex prod = build_product_complex(circle_model(), w);
        CHECK(split_cohomology(prod, 1) == std::vector<int>{1, 2});
        CHECK(cohomology(prod, 1).dim == 3);
    }
}

TEST_CASE("varrho vanishes identically on J^1 for the product complex") {
    BigradedComplex prod = build_product_complex(circle_model(), 1);
    StructureAnalysis an(prod);
    Subspace j = an.j_space(1);
    for (int i = 0; i < j.dim(); ++i) {
        GradedVector v = unflatten(prod, 1, j.basis_vector(i));
        QVector block = zero_vector(prod.dim(0, 1));
        auto it = v.components.find({0, 1});
        if (it != v.components.end()) block = it->second;
        ObstructionClass cls = an.varrho(1, block);
        CHECK(cls.is_zero());
    }
    CHECK(an.ker_varrho(1) == an.j_space(1));
}
