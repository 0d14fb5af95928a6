#include "bgc/subspace.hpp"

#include <algorithm>
#include <cassert>

#include "bgc/errors.hpp"

namespace bgc {

Subspace Subspace::full(int ambient) {
    std::vector<int> piv(ambient);
    for (int i = 0; i < ambient; ++i) piv[i] = i;
    return Subspace(ambient, QMatrix::identity(ambient), std::move(piv));
}

Subspace Subspace::span_of_rows(const QMatrix& m) {
    RrefResult r = rref(m);
    int rank = static_cast<int>(r.pivot_columns.size());
    return Subspace(m.cols(), r.matrix.submatrix_rows(0, rank), std::move(r.pivot_columns));
}

Subspace Subspace::span(const std::vector<QVector>& vectors, int ambient) {
    return span_of_rows(QMatrix::from_dense_rows(vectors, ambient));
}

Subspace Subspace::coordinate_range(int ambient, int offset, int count) {
    assert(offset >= 0 && count >= 0 && offset + count <= ambient);
    QMatrix b(count, ambient);
    std::vector<int> piv(count);
    for (int i = 0; i < count; ++i) {
        b.set(i, offset + i, Rational(1));
        piv[i] = offset + i;
    }
    return Subspace(ambient, std::move(b), std::move(piv));
}

bool Subspace::contains(const QVector& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw InvalidDimensions("contains: vector length");
    // Reduce v against the RREF basis; membership iff the residual vanishes.
    QVector w = v;
    for (int i = 0; i < basis_.rows(); ++i) {
        const Rational& c = w[pivots_[i]];
        if (bgc::is_zero(c)) continue;
        Rational f = c;
        for (const auto& [col, val] : basis_.row(i)) w[col] -= f * val;
    }
    return bgc::is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw InvalidDimensions("contains: ambient mismatch");
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

std::optional<QVector> Subspace::coordinates_of(const QVector& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw InvalidDimensions("coordinates_of: vector length");
    QVector w = v;
    QVector coeff = zero_vector(dim());
    for (int i = 0; i < basis_.rows(); ++i) {
        const Rational c = w[pivots_[i]];
        if (bgc::is_zero(c)) continue;
        coeff[i] = c;
        for (const auto& [col, val] : basis_.row(i)) w[col] -= c * val;
    }
    if (!bgc::is_zero(w)) return std::nullopt;
    return coeff;
}

QMatrix Subspace::annihilator() const {
    // a annihilates the subspace iff (basis) a = 0; over a field the double
    // annihilator recovers the subspace, so K v = 0 tests membership.
    return kernel_basis(basis_).basis();
}

Subspace kernel_basis(const QMatrix& m) {
    RrefResult r = rref(m);
    int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int p : r.pivot_columns) is_pivot[p] = true;
    std::vector<QVector> gens;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        QVector v = zero_vector(n);
        v[f] = Rational(1);
        for (std::size_t i = 0; i < r.pivot_columns.size(); ++i)
            v[r.pivot_columns[i]] = -r.matrix.at(static_cast<int>(i), f);
        gens.push_back(std::move(v));
    }
    return Subspace::span(gens, n);
}

Subspace image_basis(const QMatrix& m) { return Subspace::span_of_rows(m.transpose()); }

Subspace preimage_basis(const QMatrix& m, const Subspace& target) {
    if (target.ambient_dim() != m.rows())
        throw InvalidDimensions("preimage: target ambient " +
                                std::to_string(target.ambient_dim()) + " vs rows " +
                                std::to_string(m.rows()));
    return kernel_basis(target.annihilator() * m);
}

Subspace map_subspace(const QMatrix& m, const Subspace& s) {
    if (s.ambient_dim() != m.cols()) throw InvalidDimensions("map_subspace: ambient vs cols");
    std::vector<QVector> images;
    images.reserve(s.dim());
    for (int i = 0; i < s.dim(); ++i) images.push_back(m.apply(s.basis_vector(i)));
    return Subspace::span(images, m.rows());
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw InvalidDimensions("sum: ambient mismatch");
    return Subspace::span_of_rows(QMatrix::vstack(a.basis(), b.basis()));
}

Subspace intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw InvalidDimensions("intersection: ambient mismatch");
    // Zassenhaus: rref of [A A; B 0]; rows with zero left half carry the
    // intersection in their right half.
    int n = a.ambient_dim();
    QMatrix top = QMatrix::hstack(a.basis(), a.basis());
    QMatrix bottom = QMatrix::hstack(b.basis(), QMatrix::zero(b.dim(), n));
    RrefResult r = rref(QMatrix::vstack(top, bottom));
    std::vector<QVector> gens;
    for (int i = 0; i < r.matrix.rows(); ++i) {
        const auto& row = r.matrix.row(i);
        if (row.empty() || row.front().first < n) continue;
        QVector v = zero_vector(n);
        for (const auto& [c, val] : row) v[c - n] = val;
        gens.push_back(std::move(v));
    }
    return Subspace::span(gens, n);
}

SubspaceOps subspace_ops(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw InvalidDimensions("subspace_ops: ambient mismatch");
    SubspaceOps out;
    out.sum = sum(a, b);
    out.intersection = intersection(a, b);
    out.a_contains_b = (out.sum == a);
    out.quotient_dim_of_a_by_intersection = a.dim() - out.intersection.dim();
    return out;
}

std::vector<QVector> extend_basis(const Subspace& sub, const Subspace& sup) {
    if (!sup.contains(sub)) throw InvalidDimensions("extend_basis: sub not inside sup");
    std::vector<QVector> extra;
    QMatrix acc = sub.basis();
    int r = sub.dim();
    for (int i = 0; i < sup.dim() && r < sup.dim(); ++i) {
        QVector cand = sup.basis_vector(i);
        QMatrix trial = QMatrix::vstack(acc, QMatrix::from_dense_rows({cand}, sup.ambient_dim()));
        RrefResult rr = rref(trial);
        if (static_cast<int>(rr.pivot_columns.size()) > r) {
            extra.push_back(cand);
            acc = std::move(rr.matrix);
            ++r;
        }
    }
    assert(r == sup.dim());
    return extra;
}

Subspace embed_at_offset(const Subspace& s, int ambient, int offset) {
    assert(offset >= 0 && offset + s.ambient_dim() <= ambient);
    std::vector<QVector> gens;
    gens.reserve(s.dim());
    for (int i = 0; i < s.dim(); ++i) {
        QVector v = zero_vector(ambient);
        QVector b = s.basis_vector(i);
        for (int j = 0; j < s.ambient_dim(); ++j) v[offset + j] = b[j];
        gens.push_back(std::move(v));
    }
    return Subspace::span(gens, ambient);
}

Subspace restrict_to_range(const Subspace& s, int offset, int count) {
    std::vector<QVector> gens;
    gens.reserve(s.dim());
    for (int i = 0; i < s.dim(); ++i) {
        QVector b = s.basis_vector(i);
        for (int j = 0; j < s.ambient_dim(); ++j)
            if ((j < offset || j >= offset + count) && !is_zero(b[j]))
                throw InvalidDimensions("restrict_to_range: vector not supported in range");
        gens.push_back(QVector(b.begin() + offset, b.begin() + offset + count));
    }
    return Subspace::span(gens, count);
}

}  // namespace bgc
