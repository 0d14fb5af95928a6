#pragma once

#include <vector>

#include "bgc/subspace.hpp"

namespace bgc {

// Compiles a quantified set definition ("all values of L(x) over solutions x
// of some linear conditions") into one kernel computation plus a projection.
// Variables are declared with dimensions; conditions are linear combinations
// of matrices applied to variables, required either to vanish or to lie in a
// given subspace.
class ConstrainedSpan {
public:
    struct Term {
        int var;
        QMatrix coeff;
    };

    int add_var(int dim);

    void require_zero(const std::vector<Term>& terms);
    void require_member(const std::vector<Term>& terms, const Subspace& target);

    // Span of {sum_t coeff_t x_{var_t} : x solves all conditions}.
    Subspace image_of(const std::vector<Term>& terms, int out_dim) const;
    Subspace project(int var) const;

private:
    QMatrix assemble(const std::vector<Term>& terms, int out_rows) const;

    std::vector<int> offsets_;
    std::vector<int> dims_;
    int total_ = 0;
    std::vector<QMatrix> constraints_;
};

}  // namespace bgc
