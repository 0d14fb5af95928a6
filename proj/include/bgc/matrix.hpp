#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bgc/rational.hpp"

namespace bgc {

// Sparse rational matrix, row major. Each row is a column-sorted list of
// nonzero entries; absent means zero. Values are never stored as zero.
class QMatrix {
public:
    using Entry = std::pair<int, Rational>;  // (col, value)
    using Row = std::vector<Entry>;

    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    static QMatrix identity(int n);
    static QMatrix zero(int rows, int cols) { return QMatrix(rows, cols); }
    // Row-literal constructor for tests and small fixed operators.
    static QMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
    static QMatrix from_dense_rows(const std::vector<QVector>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational at(int r, int c) const;
    void set(int r, int c, const Rational& v);

    const Row& row(int r) const { return data_[r]; }
    QVector dense_row(int r) const;
    QVector dense_col(int c) const;

    bool is_zero() const;
    int nonzero_count() const;

    QMatrix transpose() const;
    QVector apply(const QVector& x) const;  // A * x

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    QMatrix operator-() const;
    QMatrix scaled(const Rational& c) const;

    bool operator==(const QMatrix& other) const;

    // Stacks b below a (column counts must agree).
    static QMatrix vstack(const QMatrix& a, const QMatrix& b);
    // Places b to the right of a (row counts must agree).
    static QMatrix hstack(const QMatrix& a, const QMatrix& b);
    // Kronecker product: kron(a, b)(i*br + k, j*bc + l) = a(i,j) * b(k,l).
    static QMatrix kron(const QMatrix& a, const QMatrix& b);

    QMatrix submatrix_rows(int first, int count) const;

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Row> data_;

    friend struct RrefWorker;
};

// Reduced row echelon form together with the pivot columns. The RREF of a
// matrix is unique, which is what makes Subspace comparison canonical.
struct RrefResult {
    QMatrix matrix;
    std::vector<int> pivot_columns;
};

RrefResult rref(const QMatrix& m);

int rank(const QMatrix& m);

// Particular solution of m x = b, if any.
bool solve(const QMatrix& m, const QVector& b, QVector& out);

}  // namespace bgc
