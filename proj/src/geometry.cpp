#include "bgc/geometry.hpp"

#include <cassert>

#include "bgc/errors.hpp"

namespace bgc {

int wedge_components(int q) {
    switch (q) {
        case 0: return 1;
        case 1: return 2;
        case 2: return 1;
        default: return 0;
    }
}

PolyMultivector& PolyMultivector::add_term(int m1, int m2, int comp, const Rational& v) {
    if (bgc::is_zero(v)) return *this;
    assert(m1 >= 0 && m2 >= 0 && comp >= 0 && comp < wedge_components(degree));
    std::array<int, 3> key{m1, m2, comp};
    auto it = coeffs.find(key);
    if (it == coeffs.end()) {
        coeffs.emplace(key, v);
    } else {
        it->second += v;
        if (bgc::is_zero(it->second)) coeffs.erase(it);
    }
    return *this;
}

PolyMultivector pm_add(const PolyMultivector& a, const PolyMultivector& b) {
    assert(a.degree == b.degree || a.is_zero() || b.is_zero());
    PolyMultivector out = a.is_zero() ? b : a;
    if (a.is_zero()) return out;
    for (const auto& [key, v] : b.coeffs) out.add_term(key[0], key[1], key[2], v);
    return out;
}

PolyMultivector pm_sub(const PolyMultivector& a, const PolyMultivector& b) {
    return pm_add(a, pm_scale(Rational(-1), b));
}

PolyMultivector pm_scale(const Rational& c, const PolyMultivector& a) {
    PolyMultivector out;
    out.degree = a.degree;
    if (bgc::is_zero(c)) return out;
    for (const auto& [key, v] : a.coeffs) out.coeffs.emplace(key, c * v);
    return out;
}

bool pm_equal(const PolyMultivector& a, const PolyMultivector& b) {
    return pm_sub(a, b).is_zero();
}

PolyMultivector field_z1() {
    PolyMultivector z;
    z.degree = 1;
    z.add_term(1, 0, 0, Rational(1));  // y1 d1
    z.add_term(0, 1, 1, Rational(1));  // y2 d2
    return z;
}

PolyMultivector field_z2() {
    PolyMultivector z;
    z.degree = 1;
    z.add_term(0, 1, 0, Rational(-1));  // -y2 d1
    z.add_term(1, 0, 1, Rational(1));   // y1 d2
    return z;
}

PolyMultivector combine_z(const PolyMultivector& a1, const PolyMultivector& a2) {
    assert(a1.degree == 0 && a2.degree == 0);
    PolyMultivector out;
    out.degree = 1;
    for (const auto& [key, v] : a1.coeffs) {  // a1 * (y1 d1 + y2 d2)
        out.add_term(key[0] + 1, key[1], 0, v);
        out.add_term(key[0], key[1] + 1, 1, v);
    }
    for (const auto& [key, v] : a2.coeffs) {  // a2 * (-y2 d1 + y1 d2)
        out.add_term(key[0], key[1] + 1, 0, -v);
        out.add_term(key[0] + 1, key[1], 1, v);
    }
    return out;
}

namespace {

// Polynomial helpers on a single wedge component.
using Poly = std::map<std::pair<int, int>, Rational>;

Poly component(const PolyMultivector& a, int comp) {
    Poly p;
    for (const auto& [key, v] : a.coeffs)
        if (key[2] == comp) p[{key[0], key[1]}] = v;
    return p;
}

void accumulate(PolyMultivector& out, int comp, const Poly& p, const Rational& scale = Rational(1)) {
    for (const auto& [key, v] : p) out.add_term(key.first, key.second, comp, scale * v);
}

Poly derivative(const Poly& p, int var) {
    Poly out;
    for (const auto& [key, v] : p) {
        auto [m1, m2] = key;
        if (var == 0 && m1 > 0) out[{m1 - 1, m2}] += Rational(m1) * v;
        if (var == 1 && m2 > 0) out[{m1, m2 - 1}] += Rational(m2) * v;
    }
    for (auto it = out.begin(); it != out.end();)
        it = bgc::is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

Poly shift(const Poly& p, int d1, int d2) {
    Poly out;
    for (const auto& [key, v] : p) out[{key.first + d1, key.second + d2}] = v;
    return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [key, v] : b) {
        out[key] += v;
        if (bgc::is_zero(out[key])) out.erase(key);
    }
    return out;
}

// Multiplication by pi = y1^2 + y2^2.
Poly times_pi(const Poly& p) { return poly_add(shift(p, 2, 0), shift(p, 0, 2)); }

}  // namespace

PolyMultivector lie_z1(const PolyMultivector& f) {
    assert(f.degree == 0);
    PolyMultivector out;
    out.degree = 0;
    for (const auto& [key, v] : f.coeffs)
        out.add_term(key[0], key[1], 0, Rational(key[0] + key[1]) * v);
    return out;
}

PolyMultivector lie_z2(const PolyMultivector& f) {
    assert(f.degree == 0);
    Poly p = component(f, 0);
    // L_{z2} f = -y2 d1 f + y1 d2 f
    Poly out_poly;
    for (const auto& [key, v] : shift(derivative(p, 0), 0, 1)) out_poly[key] -= v;
    out_poly = poly_add(out_poly, shift(derivative(p, 1), 1, 0));
    PolyMultivector out;
    out.degree = 0;
    accumulate(out, 0, out_poly);
    return out;
}

PolyMultivector d_pi(const PolyMultivector& a) {
    PolyMultivector out;
    out.degree = a.degree + 1;
    if (a.degree == 0) {
        Poly f = component(a, 0);
        accumulate(out, 0, times_pi(derivative(f, 1)), Rational(-1));  // -pi d2f on d1
        accumulate(out, 1, times_pi(derivative(f, 0)));                // +pi d1f on d2
    } else if (a.degree == 1) {
        Poly y1c = component(a, 0), y2c = component(a, 1);
        Poly div = poly_add(derivative(y1c, 0), derivative(y2c, 1));
        // Y(pi) = 2 y1 Y1 + 2 y2 Y2
        Poly ypi = poly_add(shift(y1c, 1, 0), shift(y2c, 0, 1));
        Poly res = times_pi(div);
        for (const auto& [key, v] : ypi) {
            res[key] -= Rational(2) * v;
            if (bgc::is_zero(res[key])) res.erase(key);
        }
        accumulate(out, 0, res);
    }
    // degree 2 -> 0 (no 3-vectors on the plane)
    return out;
}

std::vector<std::array<int, 3>> weight_basis(int q, int w) {
    std::vector<std::array<int, 3>> basis;
    int m = w + q;  // polynomial degree of the coefficients
    if (m < 0 || wedge_components(q) == 0) return basis;
    for (int m1 = m; m1 >= 0; --m1)
        for (int comp = 0; comp < wedge_components(q); ++comp) basis.push_back({m1, m - m1, comp});
    return basis;
}

QMatrix lichnerowicz_matrix(int q, int w, int cutoff) {
    if (w < -2 || w > cutoff) throw InvalidDimensions("lichnerowicz_matrix: weight out of range");
    auto src = weight_basis(q, w);
    auto dst = weight_basis(q + 1, w);
    std::map<std::array<int, 3>, int> index;
    for (std::size_t i = 0; i < dst.size(); ++i) index[dst[i]] = static_cast<int>(i);
    QMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j) {
        PolyMultivector unit;
        unit.degree = q;
        unit.add_term(src[j][0], src[j][1], src[j][2], Rational(1));
        PolyMultivector image = d_pi(unit);
        for (const auto& [key, v] : image.coeffs) {
            auto it = index.find(key);
            if (it == index.end())
                throw CrossCheckFailure("d_pi left the expected weight block");
            m.set(it->second, static_cast<int>(j), v);
        }
    }
    return m;
}

std::vector<std::pair<int, std::array<int, 3>>> vertical_basis(int q, int W) {
    std::vector<std::pair<int, std::array<int, 3>>> basis;
    for (int w = -2; w <= W; ++w)
        for (const auto& mono : weight_basis(q, w)) basis.emplace_back(w, mono);
    return basis;
}

QVector vertical_coordinates(const PolyMultivector& a, int W) {
    auto basis = vertical_basis(a.degree, W);
    std::map<std::array<int, 3>, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i].second] = static_cast<int>(i);
    QVector v = zero_vector(basis.size());
    for (const auto& [key, val] : a.coeffs) {
        auto it = index.find(key);
        if (it == index.end()) throw InvalidDimensions("multivector exceeds the weight cutoff");
        v[it->second] = val;
    }
    return v;
}

PolyMultivector from_vertical_coordinates(int q, const QVector& v, int W) {
    auto basis = vertical_basis(q, W);
    if (v.size() != basis.size()) throw InvalidDimensions("vertical coordinate length");
    PolyMultivector out;
    out.degree = q;
    for (std::size_t i = 0; i < basis.size(); ++i)
        out.add_term(basis[i].second[0], basis[i].second[1], basis[i].second[2], v[i]);
    return out;
}

BigradedComplex build_vertical_complex(int W) {
    if (W < 0) throw InvalidDimensions("weight cutoff must be >= 0");
    ComplexData data;
    std::array<int, 3> dims{};
    for (int q = 0; q <= 2; ++q) {
        dims[q] = static_cast<int>(vertical_basis(q, W).size());
        if (dims[q] > 0) data.dims[{0, q}] = dims[q];
    }
    for (int q = 0; q <= 1; ++q) {
        QMatrix d(dims[q + 1], dims[q]);
        int roff = 0, coff = 0;
        for (int w = -2; w <= W; ++w) {
            QMatrix blockm = lichnerowicz_matrix(q, w, W);
            for (int i = 0; i < blockm.rows(); ++i)
                for (const auto& [j, v] : blockm.row(i)) d.set(roff + i, coff + j, v);
            roff += blockm.rows();
            coff += blockm.cols();
        }
        if (!d.is_zero()) data.d01[{0, q}] = std::move(d);
    }
    BigradedComplex c = BigradedComplex::create(std::move(data));
    if (!c.is_valid())
        throw CrossCheckFailure("vertical complex fails validation: " +
                                c.validation().to_string());
    return c;
}

PoissonDecomposition decompose_poisson_field(const PolyMultivector& y) {
    if (y.degree != 1) throw InvalidDimensions("decompose_poisson_field needs a vector field");
    if (!d_pi(y).is_zero()) throw NotPoisson("d_pi Y != 0");

    Poly y1c = component(y, 0), y2c = component(y, 1);
    Poly div = poly_add(derivative(y1c, 0), derivative(y2c, 1));
    PoissonDecomposition out;
    out.a1.degree = 0;
    accumulate(out.a1, 0, div, Rational(1) / 2);

    // a2 y1 = Y2 - a1 y2; the difference vanishes on the line y1 = 0, so the
    // division is exact on polynomials.
    PolyMultivector rem;
    rem.degree = 0;
    accumulate(rem, 0, y2c);
    for (const auto& [key, v] : out.a1.coeffs) rem.add_term(key[0], key[1] + 1, 0, -v);
    out.a2.degree = 0;
    for (const auto& [key, v] : rem.coeffs) {
        if (key[0] == 0) throw DivisionFailure("remainder after dividing by y1");
        out.a2.add_term(key[0] - 1, key[1], 0, v);
    }

    if (!pm_equal(combine_z(out.a1, out.a2), y))
        throw CrossCheckFailure("decomposition does not recombine to Y");
    if (!pm_add(lie_z1(out.a1), lie_z2(out.a2)).is_zero())
        throw CrossCheckFailure("decomposition violates L_z1 a1 + L_z2 a2 = 0");
    return out;
}

PolyMultivector euler_homotopy(const PolyMultivector& a2) {
    if (a2.degree != 0) throw InvalidDimensions("euler_homotopy needs a function");
    PolyMultivector h;
    h.degree = 0;
    for (const auto& [key, v] : a2.coeffs) {
        int m = key[0] + key[1];
        if (m == 0) throw NonVanishingConstantTerm("a2 has a nonzero constant term");
        h.add_term(key[0], key[1], 0, v / Rational(m));
    }
    return h;
}

BigradedComplex build_product_complex(const MModel& m, int W) {
    m.check();
    if (W < 0) throw InvalidDimensions("weight cutoff must be >= 0");
    BigradedComplex vertical = build_vertical_complex(W);

    ComplexData data;
    for (int p = 0; p < m.len(); ++p)
        for (int q = 0; q <= 2; ++q)
            if (m.dim(p) * vertical.dim(0, q) > 0) data.dims[{p, q}] = m.dim(p) * vertical.dim(0, q);
    for (int p = 0; p < m.len(); ++p) {
        for (int q = 0; q <= 2; ++q) {
            int vq = vertical.dim(0, q);
            if (m.dim(p) * vq == 0) continue;
            if (vertical.dim(0, q + 1) > 0) {
                QMatrix d01 =
                    QMatrix::kron(QMatrix::identity(m.dim(p)), vertical.op(OpKind::d01, 0, q));
                if (!d01.is_zero()) data.d01[{p, q}] = std::move(d01);
            }
            if (m.dim(p + 1) > 0) {
                QMatrix d10 = QMatrix::kron(m.diff(p), QMatrix::identity(vq));
                if (q % 2 != 0) d10 = -d10;
                if (!d10.is_zero()) data.d10[{p, q}] = std::move(d10);
            }
        }
    }
    BigradedComplex c = BigradedComplex::create(std::move(data));
    if (!c.is_valid())
        throw CrossCheckFailure("product complex fails validation: " + c.validation().to_string());
    return c;
}

}  // namespace bgc
