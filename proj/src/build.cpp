#include "bgc/build.hpp"

#include "bgc/errors.hpp"

namespace bgc {

QMatrix SingleComplex::diff(int i) const {
    if (i >= 0 && i < static_cast<int>(d.size())) return d[i];
    return QMatrix::zero(dim(i + 1), dim(i));
}

void SingleComplex::check() const {
    for (int i = 0; i < len(); ++i) {
        QMatrix m = diff(i);
        if (m.rows() != dim(i + 1) || m.cols() != dim(i))
            throw MalformedComplex("single complex differential shape at degree " +
                                   std::to_string(i));
        if (!(diff(i + 1) * m).is_zero())
            throw MalformedComplex("single complex d*d != 0 at degree " + std::to_string(i));
    }
}

SingleComplex point_model() { return SingleComplex{{1}, {}}; }

SingleComplex circle_model() { return SingleComplex{{1, 1}, {QMatrix::zero(1, 1)}}; }

SingleComplex interval_model() { return SingleComplex{{2, 1}, {QMatrix::from_rows({{-1, 1}})}}; }

BigradedComplex tensor_product(const SingleComplex& e, const SingleComplex& f) {
    e.check();
    f.check();
    ComplexData data;
    for (int p = 0; p < e.len(); ++p)
        for (int q = 0; q < f.len(); ++q)
            if (e.dim(p) * f.dim(q) > 0) data.dims[{p, q}] = e.dim(p) * f.dim(q);
    for (int p = 0; p < e.len(); ++p) {
        for (int q = 0; q < f.len(); ++q) {
            if (e.dim(p) * f.dim(q) == 0) continue;
            if (e.dim(p) * f.dim(q + 1) > 0) {
                QMatrix d01 = QMatrix::kron(QMatrix::identity(e.dim(p)), f.diff(q));
                if (!d01.is_zero()) data.d01[{p, q}] = std::move(d01);
            }
            if (e.dim(p + 1) * f.dim(q) > 0) {
                QMatrix d10 = QMatrix::kron(e.diff(p), QMatrix::identity(f.dim(q)));
                if (q % 2 != 0) d10 = -d10;
                if (!d10.is_zero()) data.d10[{p, q}] = std::move(d10);
            }
        }
    }
    return BigradedComplex::create(std::move(data));
}

BigradedComplex regrade_to_d01_zero(const BigradedComplex& c) {
    for (int p = 0; p <= c.pmax(); ++p)
        for (int q = 0; q <= c.qmax(); ++q)
            if (!c.op(OpKind::d2m1, p, q).is_zero())
                throw MalformedComplex("regrade_to_d01_zero needs a double complex");
    int T = c.qmax();
    ComplexData data;
    for (const auto& [b, n] : c.dims()) data.dims[{b.p + 2 * b.q, T - b.q}] = n;
    for (int s = 0; s <= c.pmax(); ++s) {
        for (int t = 0; t <= c.qmax(); ++t) {
            if (c.dim(s, t) == 0) continue;
            Bidegree here{s + 2 * t, T - t};
            QMatrix d10 = c.op(OpKind::d10, s, t);
            if (!d10.is_zero()) data.d10[here] = std::move(d10);
            QMatrix d01 = c.op(OpKind::d01, s, t);  // (s,t+1) sits at (p+2, q-1)
            if (!d01.is_zero()) data.d2m1[here] = std::move(d01);
        }
    }
    return BigradedComplex::create(std::move(data));
}

BigradedComplex conjugate_single_block(const BigradedComplex& c, int p0, int q0,
                                       const QMatrix& phi) {
    if (q0 < 1) throw InvalidDimensions("conjugation block needs q0 >= 1");
    if (phi.rows() != c.dim(p0 + 1, q0 - 1) || phi.cols() != c.dim(p0, q0))
        throw InvalidDimensions("conjugation block shape");
    for (int p = 0; p <= c.pmax(); ++p)
        for (int q = 0; q <= c.qmax(); ++q)
            if (!c.op(OpKind::d2m1, p, q).is_zero())
                throw MalformedComplex("conjugate_single_block needs a double complex");

    ComplexData data;
    data.dims = c.dims();
    auto put = [](std::map<Bidegree, QMatrix>& table, Bidegree b, QMatrix m) {
        if (!m.is_zero()) table[b] = std::move(m);
    };
    for (const auto& [b, n] : c.dims()) {
        QMatrix d01 = c.op(OpKind::d01, b.p, b.q);
        QMatrix d10 = c.op(OpKind::d10, b.p, b.q);
        QMatrix d2m1 = QMatrix::zero(c.dim(b.p + 2, b.q - 1), n);
        if (b.p == p0 && b.q == q0) {
            // D' x = D x + D(phi x) on the conjugated block
            d10 = d10 + c.op(OpKind::d01, p0 + 1, q0 - 1) * phi;
            d2m1 = d2m1 + c.op(OpKind::d10, p0 + 1, q0 - 1) * phi;
        }
        if (b.p == p0 && b.q == q0 - 1) d10 = d10 - phi * c.op(OpKind::d01, b.p, b.q);
        if (b.p == p0 - 1 && b.q == q0) d2m1 = d2m1 - phi * c.op(OpKind::d10, b.p, b.q);
        put(data.d01, b, std::move(d01));
        put(data.d10, b, std::move(d10));
        put(data.d2m1, b, std::move(d2m1));
    }
    return BigradedComplex::create(std::move(data));
}

BigradedComplex example_nz() {
    ComplexData data;
    data.dims[{0, 1}] = 1;
    data.dims[{2, 0}] = 1;
    data.d2m1[{0, 1}] = QMatrix::from_rows({{1}});
    return BigradedComplex::create(std::move(data));
}

BigradedComplex example_torus() {
    ComplexData data;
    data.dims[{0, 0}] = 1;
    data.dims[{1, 0}] = 1;
    data.dims[{0, 1}] = 1;
    data.dims[{1, 1}] = 1;
    return BigradedComplex::create(std::move(data));
}

BigradedComplex example_interval2() { return tensor_product(interval_model(), interval_model()); }

}  // namespace bgc
