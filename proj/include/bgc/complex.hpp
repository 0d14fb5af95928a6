#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "bgc/subspace.hpp"

namespace bgc {

struct Bidegree {
    int p = 0;
    int q = 0;
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

inline std::string to_string(Bidegree b) {
    return "(" + std::to_string(b.p) + "," + std::to_string(b.q) + ")";
}

// The three components of the coboundary operator, by bidegree shift.
enum class OpKind { d01, d10, d2m1 };

inline Bidegree shifted(Bidegree b, OpKind k) {
    switch (k) {
        case OpKind::d01: return {b.p, b.q + 1};
        case OpKind::d10: return {b.p + 1, b.q};
        default: return {b.p + 2, b.q - 1};
    }
}

inline const char* op_name(OpKind k) {
    switch (k) {
        case OpKind::d01: return "d01";
        case OpKind::d10: return "d10";
        default: return "d2m1";
    }
}

struct ComplexData {
    std::map<Bidegree, int> dims;
    std::map<Bidegree, QMatrix> d01, d10, d2m1;
};

struct Violation {
    int identity;  // 1..5, the five components of D^2 = 0
    Bidegree at;   // source bidegree of the failing composite
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// First-quadrant bigraded complex with D = D01 + D10 + D2m1. Immutable once
// built; create() rejects shape problems, while violations of the five
// coboundary identities are recorded in the validation report so that tests
// can construct deliberately broken complexes.
class BigradedComplex {
public:
    static BigradedComplex create(ComplexData data);

    int dim(Bidegree b) const;
    int dim(int p, int q) const { return dim(Bidegree{p, q}); }
    int pmax() const { return pmax_; }
    int qmax() const { return qmax_; }
    int kmax() const { return pmax_ + qmax_; }
    const std::map<Bidegree, int>& dims() const { return data_.dims; }

    // Matrix of the named operator out of C^{p,q}, materialized with the
    // correct shape even when absent (absent = zero).
    QMatrix op(OpKind kind, int p, int q) const;

    const ValidationReport& validation() const { return report_; }
    bool is_valid() const { return report_.ok(); }

    int total_dim(int k) const;
    // Start of block (p, k-p) inside C^k; blocks are ordered by increasing p.
    int block_offset(int k, int p) const;
    // Block matrix C^k -> C^{k+1} of the full coboundary D.
    const QMatrix& total_differential(int k) const;

    bool operator==(const BigradedComplex& other) const;

private:
    BigradedComplex() = default;

    ComplexData data_;
    int pmax_ = -1, qmax_ = -1;
    std::vector<QMatrix> totals_;  // totals_[k] = total differential at degree k
    ValidationReport report_;
};

inline const ValidationReport& validate(const BigradedComplex& c) { return c.validation(); }

// Element of C^k by bigraded components. Missing blocks are zero; stored
// blocks must have the block's exact length.
struct GradedVector {
    int degree = 0;
    std::map<Bidegree, QVector> components;

    bool is_zero() const;
};

GradedVector graded_zero(int degree);
GradedVector unflatten(const BigradedComplex& c, int k, const QVector& v);
QVector flatten(const BigradedComplex& c, const GradedVector& v);

GradedVector add(const GradedVector& a, const GradedVector& b);
GradedVector sub(const GradedVector& a, const GradedVector& b);

// D applied blockwise: (Dv)_{i,j} = D01 v_{i,j-1} + D10 v_{i-1,j} + D2m1 v_{i-2,j+1}.
GradedVector apply_differential(const BigradedComplex& c, const GradedVector& v);

// pi_q zeroes every component with second index < q (identity for q <= 0).
GradedVector project_pi_q(const GradedVector& v, int q);

struct CohomologyResult {
    int dim;
    Subspace cocycles;      // kernel of D at degree k, inside C^k
    Subspace coboundaries;  // image of D from degree k-1
};

CohomologyResult cohomology(const BigradedComplex& c, int k);

// The projection matrix of pi_q on C^k coordinates.
QMatrix pi_q_matrix(const BigradedComplex& c, int k, int q);

// F^p C^k (blocks with first index >= p) as a coordinate subspace of C^k.
Subspace filtration_subspace(const BigradedComplex& c, int p, int k);

// C^{p,q} as a coordinate subspace of C^{p+q}.
Subspace block_subspace(const BigradedComplex& c, int p, int q);

}  // namespace bgc
