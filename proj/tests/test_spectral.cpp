#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bgc/build.hpp"
#include "bgc/corpus.hpp"
#include "bgc/spectral.hpp"
#include "bgc/structure.hpp"

using namespace bgc;

TEST_CASE("filtration boundary cases") {
    BigradedComplex sq = example_interval2();
    for (int k = 0; k <= 2; ++k) {
        CHECK(filtration_subspace(sq, 0, k) == Subspace::full(sq.total_dim(k)));
        CHECK(filtration_subspace(sq, k + 1, k) == Subspace::zero(sq.total_dim(k)));
        // Deeper filtration steps nest.
        for (int p = 0; p <= k; ++p)
            CHECK(filtration_subspace(sq, p, k).contains(filtration_subspace(sq, p + 1, k)));
    }
}

TEST_CASE("zr_br on the zero-operator torus") {
    BigradedComplex torus = example_torus();
    for (int p = 0; p <= 1; ++p)
        for (int q = 0; q <= 1; ++q)
            for (int r = 0; r <= 3; ++r) {
                ZrBr zb = zr_br(torus, p, q, r);
                CHECK(zb.Z == filtration_subspace(torus, p, p + q));
                CHECK(zb.B.is_zero());
            }
}

TEST_CASE("zr_br on nz at (0,1)") {
    BigradedComplex nz = example_nz();
    // D v = w lands in F^2 C^2, so v survives to r = 2; F^3 C^2 = 0 kills it.
    CHECK(zr_br(nz, 0, 1, 2).Z.dim() == 1);
    CHECK(zr_br(nz, 0, 1, 3).Z.dim() == 0);
    CHECK(zr_br(nz, 0, 1, 0).Z == filtration_subspace(nz, 0, 1));
}

TEST_CASE("page zero reproduces the dimension table") {
    auto corpus = generate_corpus(42, 16);
    for (const auto& e : corpus) {
        SpectralPage p0 = compute_page(e.complex, 0);
        CHECK(p0.dims == e.complex.dims());
    }
}

TEST_CASE("nz page dims and the rank-one d2") {
    BigradedComplex nz = example_nz();
    SpectralPage p1 = compute_page(nz, 1);
    CHECK(p1.dim({0, 1}) == 1);
    CHECK(p1.dim({2, 0}) == 1);
    SpectralPage p2 = compute_page(nz, 2);
    CHECK(p2.dim({0, 1}) == 1);
    CHECK(p2.dim({2, 0}) == 1);
    REQUIRE(p2.differentials.count({0, 1}) == 1);
    CHECK(rank(p2.differentials.at({0, 1})) == 1);
    SpectralPage p3 = compute_page(nz, 3);
    CHECK(p3.dim({0, 1}) == 0);
    CHECK(p3.dim({2, 0}) == 0);
}

TEST_CASE("d_r composes to zero on every page") {
    auto corpus = generate_corpus(7, 12);
    for (const auto& e : corpus) {
        for (int r = 0; r <= 3; ++r) {
            SpectralPage page = compute_page(e.complex, r);
            for (const auto& [b, d] : page.differentials) {
                Bidegree t{b.p + r, b.q + 1 - r};
                auto next = page.differentials.find(t);
                if (next == page.differentials.end()) continue;
                CHECK((next->second * d).is_zero());
            }
        }
    }
}

TEST_CASE("next page dims equal kernel minus image of the induced differentials") {
    // dim E_{r+1}^{p,q} = dim ker(d_r out of (p,q)) - rank(d_r into (p,q));
    // this pins the induced matrices, not just their squares.
    auto corpus = generate_corpus(4242, 14);
    for (const auto& e : corpus) {
        const BigradedComplex& c = e.complex;
        for (int r = 0; r <= 2; ++r) {
            SpectralPage cur = compute_page(c, r);
            SpectralPage next = compute_page(c, r + 1);
            for (int p = 0; p <= c.pmax(); ++p) {
                for (int q = 0; q <= c.qmax(); ++q) {
                    Bidegree here{p, q};
                    int out_kernel = cur.dim(here);
                    auto out = cur.differentials.find(here);
                    if (out != cur.differentials.end())
                        out_kernel = kernel_basis(out->second).dim();
                    int in_rank = 0;
                    Bidegree source{p - r, q - 1 + r};
                    auto in = cur.differentials.find(source);
                    if (in != cur.differentials.end() &&
                        Bidegree{source.p + r, source.q + 1 - r} == here)
                        in_rank = rank(in->second);
                    CHECK(next.dim(here) == out_kernel - in_rank);
                }
            }
        }
    }
}

TEST_CASE("page dims never grow with r") {
    auto corpus = generate_corpus(8, 12);
    for (const auto& e : corpus) {
        SpectralPage prev = compute_page(e.complex, 0);
        for (int r = 1; r <= 4; ++r) {
            SpectralPage cur = compute_page(e.complex, r);
            for (const auto& [b, d] : cur.dims) CHECK(d <= prev.dim(b));
            prev = std::move(cur);
        }
    }
}

TEST_CASE("e_infinity on the torus and nz") {
    BigradedComplex torus = example_torus();
    for (int p = 0; p <= 1; ++p)
        for (int q = 0; q <= 1; ++q) CHECK(e_infinity(torus, p, q).dim == 1);
    CHECK(e_infinity(torus, 0, 0).page_index_stabilized == 2);

    BigradedComplex nz = example_nz();
    CHECK(e_infinity(nz, 0, 1).dim == 0);
    CHECK(e_infinity(nz, 2, 0).dim == 0);
    CHECK(e_infinity(nz, 0, 1).page_index_stabilized == 3);
}

TEST_CASE("convergence: infinity dims sum to cohomology") {
    auto corpus = generate_corpus(77, 20);
    for (const auto& e : corpus) {
        const BigradedComplex& c = e.complex;
        for (int k = 0; k <= c.kmax(); ++k) {
            int total = 0;
            for (int p = 0; p <= k; ++p) total += e_infinity(c, p, k - p).dim;
            CHECK(total == cohomology(c, k).dim);
        }
    }
}

TEST_CASE("infinity dims equal the projected cocycle quotients") {
    // dim E_inf^{p,q} = dim(pi_q Z^k cap C^{p,q}) - dim(pi_q B^k cap C^{p,q})
    auto corpus = generate_corpus(5150, 10);
    for (const auto& e : corpus) {
        const BigradedComplex& c = e.complex;
        StructureAnalysis an(c);
        for (int k = 0; k <= c.kmax(); ++k) {
            for (int p = 0; p <= k; ++p) {
                int q = k - p;
                if (q > c.qmax() || p > c.pmax()) continue;
                const PreModules& pm = an.pre_modules(k, q);
                Subspace block = block_subspace(c, p, q);
                int quotient =
                    intersection(pm.Z, block).dim() - intersection(pm.B, block).dim();
                CHECK(e_infinity(c, p, q).dim == quotient);
            }
        }
    }
}

TEST_CASE("the page cache is stable") {
    BigradedComplex nz = example_nz();
    SpectralSequence ss(nz);
    const SpectralPage& a = ss.page(2);
    const SpectralPage& b = ss.page(2);
    CHECK(&a == &b);
    CHECK(ss.infinity(0, 1).dim == 0);
}
