#include "bgc/linsys.hpp"

#include "bgc/errors.hpp"

namespace bgc {

int ConstrainedSpan::add_var(int dim) {
    offsets_.push_back(total_);
    dims_.push_back(dim);
    total_ += dim;
    return static_cast<int>(offsets_.size()) - 1;
}

QMatrix ConstrainedSpan::assemble(const std::vector<Term>& terms, int out_rows) const {
    QMatrix m(out_rows, total_);
    for (const auto& t : terms) {
        if (t.coeff.rows() != out_rows || t.coeff.cols() != dims_[t.var])
            throw InvalidDimensions("ConstrainedSpan term shape");
        int off = offsets_[t.var];
        for (int i = 0; i < t.coeff.rows(); ++i)
            for (const auto& [j, v] : t.coeff.row(i)) m.set(i, off + j, m.at(i, off + j) + v);
    }
    return m;
}

void ConstrainedSpan::require_zero(const std::vector<Term>& terms) {
    int out = terms.empty() ? 0 : terms.front().coeff.rows();
    constraints_.push_back(assemble(terms, out));
}

void ConstrainedSpan::require_member(const std::vector<Term>& terms, const Subspace& target) {
    int out = terms.empty() ? 0 : terms.front().coeff.rows();
    if (target.ambient_dim() != out) throw InvalidDimensions("require_member ambient");
    constraints_.push_back(target.annihilator() * assemble(terms, out));
}

Subspace ConstrainedSpan::image_of(const std::vector<Term>& terms, int out_dim) const {
    QMatrix stacked(0, total_);
    for (const auto& c : constraints_) stacked = QMatrix::vstack(stacked, c);
    Subspace solutions = kernel_basis(stacked);
    return map_subspace(assemble(terms, out_dim), solutions);
}

Subspace ConstrainedSpan::project(int var) const {
    return image_of({{var, QMatrix::identity(dims_[var])}}, dims_[var]);
}

}  // namespace bgc
