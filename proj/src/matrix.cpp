#include "bgc/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "bgc/errors.hpp"

namespace bgc {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rational(1));
    return m;
}

QMatrix QMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    QMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        assert(static_cast<int>(row.size()) == c);
        int j = 0;
        for (int v : row) {
            if (v != 0) m.data_[i].emplace_back(j, Rational(v));
            ++j;
        }
        ++i;
    }
    return m;
}

QMatrix QMatrix::from_dense_rows(const std::vector<QVector>& rows, int cols) {
    QMatrix m(static_cast<int>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        assert(static_cast<int>(rows[i].size()) == cols);
        for (int j = 0; j < cols; ++j)
            if (!bgc::is_zero(rows[i][j])) m.data_[i].emplace_back(j, rows[i][j]);
    }
    return m;
}

Rational QMatrix::at(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    const Row& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return Rational(0);
}

void QMatrix::set(int r, int c, const Rational& v) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    Row& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (bgc::is_zero(v))
            row.erase(it);
        else
            it->second = v;
    } else if (!bgc::is_zero(v)) {
        row.insert(it, {c, v});
    }
}

QVector QMatrix::dense_row(int r) const {
    QVector v = zero_vector(cols_);
    for (const auto& [c, x] : data_[r]) v[c] = x;
    return v;
}

QVector QMatrix::dense_col(int c) const {
    QVector v = zero_vector(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

bool QMatrix::is_zero() const {
    for (const auto& row : data_)
        if (!row.empty()) return false;
    return true;
}

int QMatrix::nonzero_count() const {
    int n = 0;
    for (const auto& row : data_) n += static_cast<int>(row.size());
    return n;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
    return t;  // column order within rows is already ascending in r
}

QVector QMatrix::apply(const QVector& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw InvalidDimensions("apply: vector length " + std::to_string(x.size()) +
                                " vs cols " + std::to_string(cols_));
    QVector y = zero_vector(rows_);
    for (int r = 0; r < rows_; ++r) {
        Rational acc(0);
        for (const auto& [c, v] : data_[r]) acc += v * x[c];
        y[r] = acc;
    }
    return y;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_)
        throw InvalidDimensions("product: " + std::to_string(a.cols_) + " vs " +
                                std::to_string(b.rows_));
    QMatrix c(a.rows_, b.cols_);
    QVector acc;
    for (int i = 0; i < a.rows_; ++i) {
        if (a.data_[i].empty()) continue;
        acc.assign(b.cols_, Rational(0));
        for (const auto& [k, av] : a.data_[i])
            for (const auto& [j, bv] : b.data_[k]) acc[j] += av * bv;
        for (int j = 0; j < b.cols_; ++j)
            if (!is_zero(acc[j])) c.data_[i].emplace_back(j, acc[j]);
    }
    return c;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidDimensions("sum shape mismatch");
    QMatrix c(a.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        auto ia = a.data_[i].begin(), ea = a.data_[i].end();
        auto ib = b.data_[i].begin(), eb = b.data_[i].end();
        while (ia != ea || ib != eb) {
            if (ib == eb || (ia != ea && ia->first < ib->first)) {
                c.data_[i].push_back(*ia++);
            } else if (ia == ea || ib->first < ia->first) {
                c.data_[i].push_back(*ib++);
            } else {
                Rational v = ia->second + ib->second;
                if (!is_zero(v)) c.data_[i].emplace_back(ia->first, v);
                ++ia, ++ib;
            }
        }
    }
    return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) { return a + (-b); }

QMatrix QMatrix::operator-() const { return scaled(Rational(-1)); }

QMatrix QMatrix::scaled(const Rational& c) const {
    QMatrix m(rows_, cols_);
    if (bgc::is_zero(c)) return m;
    m.data_ = data_;
    for (auto& row : m.data_)
        for (auto& e : row) e.second *= c;
    return m;
}

bool QMatrix::operator==(const QMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

QMatrix QMatrix::vstack(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.cols_) throw InvalidDimensions("vstack column mismatch");
    QMatrix m(a.rows_ + b.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i) m.data_[i] = a.data_[i];
    for (int i = 0; i < b.rows_; ++i) m.data_[a.rows_ + i] = b.data_[i];
    return m;
}

QMatrix QMatrix::hstack(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_) throw InvalidDimensions("hstack row mismatch");
    QMatrix m(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        m.data_[i] = a.data_[i];
        for (const auto& [c, v] : b.data_[i]) m.data_[i].emplace_back(a.cols_ + c, v);
    }
    return m;
}

QMatrix QMatrix::kron(const QMatrix& a, const QMatrix& b) {
    QMatrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (const auto& [j, av] : a.data_[i])
            for (int k = 0; k < b.rows_; ++k)
                for (const auto& [l, bv] : b.data_[k])
                    m.set(i * b.rows_ + k, j * b.cols_ + l, av * bv);
    return m;
}

QMatrix QMatrix::submatrix_rows(int first, int count) const {
    assert(first >= 0 && first + count <= rows_);
    QMatrix m(count, cols_);
    for (int i = 0; i < count; ++i) m.data_[i] = data_[first + i];
    return m;
}

std::string QMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).get_str();
    }
    os << "] (" << rows_ << "x" << cols_ << ")";
    return os.str();
}

namespace {

// Dense elimination; used for narrow matrices where sparse bookkeeping
// costs more than it saves.
RrefResult rref_dense(const QMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<QVector> a(rows);
    for (int i = 0; i < rows; ++i) a[i] = m.dense_row(i);

    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero(a[i][col])) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        Rational inv = 1 / a[r][col];
        for (int j = col; j < cols; ++j) a[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || is_zero(a[i][col])) continue;
            Rational f = a[i][col];
            for (int j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    return {QMatrix::from_dense_rows(a, cols), pivots};
}

}  // namespace

struct RrefWorker {
    // Sparse elimination, pivot row chosen by fewest nonzeros (Markowitz-style
    // row count) to limit fill-in. Output is the unique RREF either way.
    static RrefResult run(const QMatrix& m) {
        int rows = m.rows(), cols = m.cols();
        std::vector<QMatrix::Row> a = m.data_;
        std::vector<int> pivots;
        int r = 0;
        for (int col = 0; col < cols && r < rows; ++col) {
            int best = -1;
            std::size_t best_nnz = 0;
            for (int i = r; i < rows; ++i) {
                auto it = find_col(a[i], col);
                if (it == a[i].end()) continue;
                if (best < 0 || a[i].size() < best_nnz) {
                    best = i;
                    best_nnz = a[i].size();
                }
            }
            if (best < 0) continue;
            std::swap(a[r], a[best]);
            normalize(a[r], col);
            for (int i = 0; i < rows; ++i) {
                if (i == r) continue;
                auto it = find_col(a[i], col);
                if (it == a[i].end()) continue;
                axpy(a[i], -it->second, a[r]);
            }
            pivots.push_back(col);
            ++r;
        }
        QMatrix out(rows, cols);
        for (int i = 0; i < rows; ++i) out.data_[i] = std::move(a[i]);
        return {std::move(out), std::move(pivots)};
    }

    static QMatrix::Row::iterator find_col(QMatrix::Row& row, int col) {
        auto it = std::lower_bound(row.begin(), row.end(), col,
                                   [](const QMatrix::Entry& e, int c) { return e.first < c; });
        if (it != row.end() && it->first == col) return it;
        return row.end();
    }

    static void normalize(QMatrix::Row& row, int col) {
        auto it = find_col(row, col);
        Rational inv = 1 / it->second;
        for (auto& e : row) e.second *= inv;
    }

    // row += c * other, keeping sorted nonzero form.
    static void axpy(QMatrix::Row& row, const Rational& c, const QMatrix::Row& other) {
        QMatrix::Row out;
        out.reserve(row.size() + other.size());
        auto ia = row.begin(), ea = row.end();
        auto ib = other.begin(), eb = other.end();
        while (ia != ea || ib != eb) {
            if (ib == eb || (ia != ea && ia->first < ib->first)) {
                out.push_back(*ia++);
            } else if (ia == ea || ib->first < ia->first) {
                out.emplace_back(ib->first, c * ib->second);
                ++ib;
            } else {
                Rational v = ia->second + c * ib->second;
                if (!is_zero(v)) out.emplace_back(ia->first, v);
                ++ia, ++ib;
            }
        }
        row = std::move(out);
    }
};

RrefResult rref(const QMatrix& m) {
    if (m.cols() < 32) return rref_dense(m);
    return RrefWorker::run(m);
}

int rank(const QMatrix& m) { return static_cast<int>(rref(m).pivot_columns.size()); }

bool solve(const QMatrix& m, const QVector& b, QVector& out) {
    if (static_cast<int>(b.size()) != m.rows()) throw InvalidDimensions("solve rhs length");
    QMatrix rhs(m.rows(), 1);
    for (int i = 0; i < m.rows(); ++i) rhs.set(i, 0, b[i]);
    RrefResult r = rref(QMatrix::hstack(m, rhs));
    for (int p : r.pivot_columns)
        if (p == m.cols()) return false;
    out = zero_vector(m.cols());
    for (std::size_t i = 0; i < r.pivot_columns.size(); ++i)
        out[r.pivot_columns[i]] = r.matrix.at(static_cast<int>(i), m.cols());
    return true;
}

}  // namespace bgc
