#include "bgc/complex.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "bgc/errors.hpp"

namespace bgc {

std::string ValidationReport::to_string() const {
    if (ok()) return "valid";
    std::ostringstream os;
    for (const auto& v : violations)
        os << "(Cob" << v.identity << ") violated at " << bgc::to_string(v.at) << ": " << v.detail
           << "\n";
    return os.str();
}

namespace {

const std::map<Bidegree, QMatrix>* op_table(const ComplexData& d, OpKind k) {
    switch (k) {
        case OpKind::d01: return &d.d01;
        case OpKind::d10: return &d.d10;
        default: return &d.d2m1;
    }
}

}  // namespace

BigradedComplex BigradedComplex::create(ComplexData data) {
    BigradedComplex c;

    for (auto it = data.dims.begin(); it != data.dims.end();) {
        const auto& [b, n] = *it;
        if (n < 0) throw MalformedComplex("negative dimension at " + to_string(b));
        if (n > 0 && (b.p < 0 || b.q < 0))
            throw MalformedComplex("nonzero space outside the first quadrant at " + to_string(b));
        it = (n == 0) ? data.dims.erase(it) : ++it;
    }
    c.pmax_ = c.qmax_ = 0;
    for (const auto& [b, n] : data.dims) {
        c.pmax_ = std::max(c.pmax_, b.p);
        c.qmax_ = std::max(c.qmax_, b.q);
    }
    c.data_ = std::move(data);

    for (OpKind kind : {OpKind::d01, OpKind::d10, OpKind::d2m1}) {
        for (const auto& [b, m] : *op_table(c.data_, kind)) {
            if (b.p < 0 || b.q < 0)
                throw MalformedComplex(std::string(op_name(kind)) +
                                       " stored outside the first quadrant at " + to_string(b));
            Bidegree t = shifted(b, kind);
            int src = c.dim(b), dst = c.dim(t);
            if (m.rows() != dst || m.cols() != src)
                throw MalformedComplex(std::string(op_name(kind)) + " at " + to_string(b) +
                                       " has shape " + std::to_string(m.rows()) + "x" +
                                       std::to_string(m.cols()) + ", expected " +
                                       std::to_string(dst) + "x" + std::to_string(src));
        }
    }

    // Total differentials for every degree in the box.
    c.totals_.reserve(c.kmax() + 2);
    for (int k = 0; k <= c.kmax() + 1; ++k) {
        int nk = 0, nk1 = 0;
        for (int p = 0; p <= k; ++p) nk += c.dim(p, k - p);
        for (int p = 0; p <= k + 1; ++p) nk1 += c.dim(p, k + 1 - p);
        QMatrix total(nk1, nk);
        int col0 = 0;
        for (int p = 0; p <= k; ++p) {
            int q = k - p;
            int src = c.dim(p, q);
            if (src == 0) continue;
            for (OpKind kind : {OpKind::d01, OpKind::d10, OpKind::d2m1}) {
                Bidegree t = shifted({p, q}, kind);
                if (t.q < 0 || c.dim(t) == 0) continue;
                int row0 = 0;
                for (int tp = 0; tp < t.p; ++tp) row0 += c.dim(tp, k + 1 - tp);
                QMatrix block = c.op(kind, p, q);
                for (int i = 0; i < block.rows(); ++i)
                    for (const auto& [j, v] : block.row(i)) total.set(row0 + i, col0 + j, v);
            }
            col0 += src;
        }
        c.totals_.push_back(std::move(total));
    }

    // The five bigraded components of D^2 = 0, checked at every bidegree.
    auto check = [&c](int identity, Bidegree at, const QMatrix& residual) {
        if (!residual.is_zero())
            c.report_.violations.push_back({identity, at, "residual " + residual.to_string()});
    };
    for (int p = 0; p <= c.pmax_; ++p) {
        for (int q = 0; q <= c.qmax_; ++q) {
            if (c.dim(p, q) == 0) continue;
            auto d01 = [&](int a, int b) { return c.op(OpKind::d01, a, b); };
            auto d10 = [&](int a, int b) { return c.op(OpKind::d10, a, b); };
            auto d2m1 = [&](int a, int b) { return c.op(OpKind::d2m1, a, b); };
            check(1, {p, q}, d2m1(p + 2, q - 1) * d2m1(p, q));
            check(2, {p, q}, d2m1(p + 1, q) * d10(p, q) + d10(p + 2, q - 1) * d2m1(p, q));
            check(3, {p, q},
                  d2m1(p, q + 1) * d01(p, q) + d01(p + 2, q - 1) * d2m1(p, q) +
                      d10(p + 1, q) * d10(p, q));
            check(4, {p, q}, d10(p, q + 1) * d01(p, q) + d01(p + 1, q) * d10(p, q));
            check(5, {p, q}, d01(p, q + 1) * d01(p, q));
        }
    }
    return c;
}

int BigradedComplex::dim(Bidegree b) const {
    auto it = data_.dims.find(b);
    return it == data_.dims.end() ? 0 : it->second;
}

QMatrix BigradedComplex::op(OpKind kind, int p, int q) const {
    Bidegree b{p, q};
    Bidegree t = shifted(b, kind);
    const auto* table = op_table(data_, kind);
    auto it = table->find(b);
    if (it != table->end()) return it->second;
    int dst = (t.p < 0 || t.q < 0) ? 0 : dim(t);
    int src = (p < 0 || q < 0) ? 0 : dim(b);
    return QMatrix::zero(dst, src);
}

int BigradedComplex::total_dim(int k) const {
    if (k < 0) return 0;
    int n = 0;
    for (int p = 0; p <= k; ++p) n += dim(p, k - p);
    return n;
}

int BigradedComplex::block_offset(int k, int p) const {
    assert(p >= 0 && p <= k);
    int off = 0;
    for (int i = 0; i < p; ++i) off += dim(i, k - i);
    return off;
}

const QMatrix& BigradedComplex::total_differential(int k) const {
    static const QMatrix empty(0, 0);
    if (k < 0 || k >= static_cast<int>(totals_.size())) {
        // Outside the stored window both C^k and C^{k+1} are zero at the
        // upper end; at k > kmax+1 the matrix is 0x0 or 0xN with N = 0.
        assert(k < 0 || total_dim(k) == 0);
        return empty;
    }
    return totals_[k];
}

bool BigradedComplex::operator==(const BigradedComplex& other) const {
    return data_.dims == other.data_.dims && data_.d01 == other.data_.d01 &&
           data_.d10 == other.data_.d10 && data_.d2m1 == other.data_.d2m1;
}

bool GradedVector::is_zero() const {
    for (const auto& [b, v] : components)
        if (!bgc::is_zero(v)) return false;
    return true;
}

GradedVector graded_zero(int degree) { return GradedVector{degree, {}}; }

GradedVector unflatten(const BigradedComplex& c, int k, const QVector& v) {
    if (static_cast<int>(v.size()) != c.total_dim(k))
        throw InvalidDimensions("unflatten: length vs total_dim");
    GradedVector out{k, {}};
    int off = 0;
    for (int p = 0; p <= k; ++p) {
        int n = c.dim(p, k - p);
        if (n > 0) {
            QVector block(v.begin() + off, v.begin() + off + n);
            if (!is_zero(block)) out.components[{p, k - p}] = std::move(block);
        }
        off += n;
    }
    return out;
}

QVector flatten(const BigradedComplex& c, const GradedVector& v) {
    QVector out = zero_vector(c.total_dim(v.degree));
    for (const auto& [b, block] : v.components) {
        if (b.p + b.q != v.degree) throw InvalidDimensions("flatten: component off the diagonal");
        if (static_cast<int>(block.size()) != c.dim(b))
            throw InvalidDimensions("flatten: block length at " + to_string(b));
        int off = c.block_offset(v.degree, b.p);
        for (std::size_t i = 0; i < block.size(); ++i) out[off + i] = block[i];
    }
    return out;
}

GradedVector add(const GradedVector& a, const GradedVector& b) {
    assert(a.degree == b.degree);
    GradedVector out{a.degree, a.components};
    for (const auto& [bd, v] : b.components) {
        auto it = out.components.find(bd);
        if (it == out.components.end())
            out.components[bd] = v;
        else
            it->second = bgc::add(it->second, v);
    }
    return out;
}

GradedVector sub(const GradedVector& a, const GradedVector& b) {
    GradedVector neg{b.degree, {}};
    for (const auto& [bd, v] : b.components) neg.components[bd] = scale(Rational(-1), v);
    return add(a, neg);
}

GradedVector apply_differential(const BigradedComplex& c, const GradedVector& v) {
    GradedVector out{v.degree + 1, {}};
    auto accumulate = [&](Bidegree target, QVector&& piece) {
        if (piece.empty()) return;
        auto it = out.components.find(target);
        if (it == out.components.end())
            out.components[target] = std::move(piece);
        else
            it->second = bgc::add(it->second, piece);
    };
    for (const auto& [b, block] : v.components) {
        for (OpKind kind : {OpKind::d01, OpKind::d10, OpKind::d2m1}) {
            Bidegree t = shifted(b, kind);
            if (t.q < 0 || c.dim(t) == 0) continue;
            accumulate(t, c.op(kind, b.p, b.q).apply(block));
        }
    }
    return out;
}

GradedVector project_pi_q(const GradedVector& v, int q) {
    GradedVector out{v.degree, {}};
    for (const auto& [b, block] : v.components)
        if (b.q >= q) out.components[b] = block;
    return out;
}

CohomologyResult cohomology(const BigradedComplex& c, int k) {
    Subspace z = kernel_basis(c.total_differential(k));
    Subspace b = k >= 1 ? image_basis(c.total_differential(k - 1)) : Subspace::zero(c.total_dim(k));
    return {z.dim() - b.dim(), std::move(z), std::move(b)};
}

QMatrix pi_q_matrix(const BigradedComplex& c, int k, int q) {
    int n = c.total_dim(k);
    QMatrix m(n, n);
    // Blocks with second index >= q are exactly those with first index <= k-q.
    int keep;
    if (q <= 0)
        keep = n;
    else if (q > k)
        keep = 0;
    else
        keep = c.block_offset(k, k - q + 1);
    for (int i = 0; i < keep; ++i) m.set(i, i, Rational(1));
    return m;
}

Subspace filtration_subspace(const BigradedComplex& c, int p, int k) {
    int n = c.total_dim(k);
    if (p <= 0) return Subspace::full(n);
    if (p > k) return Subspace::zero(n);
    int off = c.block_offset(k, p);
    return Subspace::coordinate_range(n, off, n - off);
}

Subspace block_subspace(const BigradedComplex& c, int p, int q) {
    int k = p + q;
    int n = c.total_dim(k);
    if (p < 0 || q < 0 || c.dim(p, q) == 0) return Subspace::zero(n);
    return Subspace::coordinate_range(n, c.block_offset(k, p), c.dim(p, q));
}

}  // namespace bgc
