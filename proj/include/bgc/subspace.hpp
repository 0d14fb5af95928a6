#pragma once

#include <optional>
#include <vector>

#include "bgc/matrix.hpp"

namespace bgc {

// A subspace of Q^n held by its reduced row-echelon basis (rows). RREF is
// unique, so two Subspaces are equal iff their basis matrices are identical;
// that is what makes every cross-module identity in this library a plain
// equality test.
class Subspace {
public:
    Subspace() : ambient_(0) {}

    static Subspace zero(int ambient) { return Subspace(ambient, QMatrix(0, ambient), {}); }
    static Subspace full(int ambient);
    // Span of the rows of m inside Q^cols(m).
    static Subspace span_of_rows(const QMatrix& m);
    static Subspace span(const std::vector<QVector>& vectors, int ambient);
    // Coordinate subspace spanned by e_offset .. e_{offset+count-1}.
    static Subspace coordinate_range(int ambient, int offset, int count);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const QMatrix& basis() const { return basis_; }
    const std::vector<int>& pivot_columns() const { return pivots_; }
    QVector basis_vector(int i) const { return basis_.dense_row(i); }

    bool is_zero() const { return basis_.rows() == 0; }
    bool contains(const QVector& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& other) const {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }

    // Coefficients of v in this basis, if v lies in the subspace.
    std::optional<QVector> coordinates_of(const QVector& v) const;

    // Rows annihilating the subspace: K v = 0 iff v in the subspace.
    QMatrix annihilator() const;

private:
    Subspace(int ambient, QMatrix basis, std::vector<int> pivots)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    int ambient_;
    QMatrix basis_;
    std::vector<int> pivots_;
};

Subspace kernel_basis(const QMatrix& m);  // {x : m x = 0} in the domain
Subspace image_basis(const QMatrix& m);   // column span in the codomain
// {x : m x in target}; needs target.ambient_dim == m.rows.
Subspace preimage_basis(const QMatrix& m, const Subspace& target);
// Span of {m v : v in s}.
Subspace map_subspace(const QMatrix& m, const Subspace& s);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

struct SubspaceOps {
    Subspace sum;
    Subspace intersection;
    bool a_contains_b;
    int quotient_dim_of_a_by_intersection;
};
SubspaceOps subspace_ops(const Subspace& a, const Subspace& b);

// Vectors of sup extending a basis of sub to one of sup; requires sub ⊆ sup.
// Their classes are a basis of sup/sub.
std::vector<QVector> extend_basis(const Subspace& sub, const Subspace& sup);

// Widens a subspace of a coordinate block to the ambient space, placing block
// coordinate i at ambient coordinate offset + i.
Subspace embed_at_offset(const Subspace& s, int ambient, int offset);
// Inverse of embed_at_offset; requires every basis vector supported there.
Subspace restrict_to_range(const Subspace& s, int offset, int count);

}  // namespace bgc
