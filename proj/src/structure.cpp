#include "bgc/structure.hpp"

#include <cassert>
#include <sstream>

#include "bgc/errors.hpp"

namespace bgc {

const Subspace& NullSubcomplex::at(const BigradedComplex& c, Bidegree b) const {
    auto it = bases.find(b);
    if (it != bases.end()) return it->second;
    static thread_local std::map<int, Subspace> zeros;
    int n = c.dim(b);
    auto z = zeros.find(n);
    if (z == zeros.end()) z = zeros.emplace(n, Subspace::zero(n)).first;
    return z->second;
}

NullSubcomplex null_subcomplex(const BigradedComplex& c) {
    NullSubcomplex n;
    for (const auto& [b, d] : c.dims()) {
        QMatrix stacked =
            QMatrix::vstack(c.op(OpKind::d01, b.p, b.q), c.op(OpKind::d2m1, b.p, b.q));
        n.bases[b] = kernel_basis(stacked);
    }
    for (const auto& [b, basis] : n.bases) {
        Bidegree t{b.p + 1, b.q};
        auto target = n.bases.find(t);
        int tdim = target == n.bases.end() ? 0 : target->second.dim();
        QMatrix d10 = c.op(OpKind::d10, b.p, b.q);
        QMatrix induced(tdim, basis.dim());
        for (int i = 0; i < basis.dim(); ++i) {
            QVector w = d10.apply(basis.basis_vector(i));
            if (target == n.bases.end() || tdim == 0) {
                if (!is_zero(w))
                    throw ClosureFailure("d10 leaves the null subcomplex at " + to_string(b));
                continue;
            }
            auto coords = target->second.coordinates_of(w);
            if (!coords)
                throw ClosureFailure("d10 leaves the null subcomplex at " + to_string(b));
            for (int r = 0; r < tdim; ++r) induced.set(r, i, (*coords)[r]);
        }
        n.dbar[b] = std::move(induced);
    }
    // dbar * dbar = 0 comes with (Cob1)-(Cob5); cheap to confirm.
    for (const auto& [b, m] : n.dbar) {
        auto next = n.dbar.find({b.p + 1, b.q});
        if (next != n.dbar.end() && !(next->second * m).is_zero())
            throw ClosureFailure("dbar^2 != 0 at " + to_string(b));
    }
    return n;
}

StructureAnalysis::StructureAnalysis(const BigradedComplex& c)
    : c_(&c), null_(null_subcomplex(c)) {}

Subspace StructureAnalysis::null_coboundaries(int q, int k) const {
    int p = k - q;
    int n = c_->dim(p, q);
    if (p < 0 || q < 0) return Subspace::zero(n);
    Bidegree source{p - 1, q};
    if (p - 1 < 0 || null_.dim(source) == 0) return Subspace::zero(n);
    return map_subspace(c_->op(OpKind::d10, p - 1, q), null_.bases.at(source));
}

Subspace StructureAnalysis::null_cocycles(int q, int k) const {
    int p = k - q;
    int n = c_->dim(p, q);
    if (p < 0 || q < 0 || c_->dim(p, q) == 0) return Subspace::zero(n);
    const Subspace& block = null_.at(*c_, {p, q});
    return intersection(block, kernel_basis(c_->op(OpKind::d10, p, q)));
}

NullCohomology StructureAnalysis::null_cohomology(int q, int k) const {
    Subspace z = null_cocycles(q, k);
    Subspace b = null_coboundaries(q, k);
    return {z.dim() - b.dim(), std::move(z), std::move(b)};
}

const CohomologyResult& StructureAnalysis::total_cohomology(int k) {
    auto it = cohomology_.find(k);
    if (it == cohomology_.end()) it = cohomology_.emplace(k, cohomology(*c_, k)).first;
    return it->second;
}

const PreModules& StructureAnalysis::pre_modules(int k, int q) {
    auto key = std::make_pair(k, q);
    auto it = pre_.find(key);
    if (it != pre_.end()) return it->second;

    const CohomologyResult& h = total_cohomology(k);
    QMatrix pi = pi_q_matrix(*c_, k, q);
    PreModules out;
    out.Z = map_subspace(pi, h.cocycles);
    out.B = map_subspace(pi, h.coboundaries);

    // Second route through M^k: eta such that each block of D eta with second
    // index below q is a dbar-coboundary of its null row and the rest vanish.
    const QMatrix& total = c_->total_differential(k);
    QMatrix stacked(0, c_->total_dim(k));
    for (int i = 0; i <= k + 1; ++i) {
        int j = k + 1 - i;
        int rows = c_->dim(i, j);
        if (rows == 0) continue;
        QMatrix block = total.submatrix_rows(c_->block_offset(k + 1, i), rows);
        if (j >= q) {
            stacked = QMatrix::vstack(stacked, block);
        } else {
            Subspace w = null_coboundaries(j, k + 1);
            stacked = QMatrix::vstack(stacked, w.annihilator() * block);
        }
    }
    Subspace via_m = map_subspace(pi, kernel_basis(stacked));
    if (!(via_m == out.Z))
        throw PrecocycleMismatch("Z^" + std::to_string(k) + "_" + std::to_string(q) +
                                 ": projection of cocycles has dim " + std::to_string(out.Z.dim()) +
                                 ", solution-space route has dim " + std::to_string(via_m.dim()));

    return pre_.emplace(key, std::move(out)).first->second;
}

Subspace StructureAnalysis::g1_solution_space(int k, bool with_coboundary_condition) {
    // Solutions eta in C^k of pi_1(D eta) = 0, optionally with the (k+1,0)
    // block of D eta constrained into B^{k+1}(N_0, dbar).
    const QMatrix& total = c_->total_differential(k);
    QMatrix stacked(0, c_->total_dim(k));
    for (int i = 0; i <= k + 1; ++i) {
        int j = k + 1 - i;
        int rows = c_->dim(i, j);
        if (rows == 0) continue;
        QMatrix block = total.submatrix_rows(c_->block_offset(k + 1, i), rows);
        if (j >= 1) {
            stacked = QMatrix::vstack(stacked, block);
        } else if (with_coboundary_condition) {
            Subspace w = null_coboundaries(0, k + 1);
            stacked = QMatrix::vstack(stacked, w.annihilator() * block);
        }
    }
    return kernel_basis(stacked);
}

Subspace StructureAnalysis::a_space(int k) {
    return map_subspace(pi_q_matrix(*c_, k, 1), g1_solution_space(k, false));
}

Subspace StructureAnalysis::ker_rho(int k) {
    return map_subspace(pi_q_matrix(*c_, k, 1), g1_solution_space(k, true));
}

Subspace StructureAnalysis::j_space(int k) {
    return intersection(a_space(k), block_subspace(*c_, k - 1, 1));
}

Subspace StructureAnalysis::ker_varrho(int k) {
    return intersection(ker_rho(k), block_subspace(*c_, k - 1, 1));
}

ObstructionClass StructureAnalysis::rho(int k, const GradedVector& xi) {
    if (xi.degree != k) throw InvalidDimensions("rho: degree mismatch");
    for (const auto& [b, v] : xi.components)
        if (b.q < 1 && !is_zero(v)) throw NotInA("xi has a component below G^1 at " + to_string(b));

    // Blocks of D xi with second index >= 2 must vanish outright; they do not
    // involve the witness.
    GradedVector dxi = apply_differential(*c_, xi);
    for (const auto& [b, v] : dxi.components)
        if (b.q >= 2 && !is_zero(v))
            throw NotInA("pi_2(D xi) != 0 at " + to_string(b));

    // Solve D01 eta_{k,0} = -(D10 xi_{k-1,1} + D2m1 xi_{k-2,2}).
    int nk0 = c_->dim(k, 0);
    QVector rhs = zero_vector(c_->dim(k, 1));
    auto at_k1 = dxi.components.find({k, 1});
    if (at_k1 != dxi.components.end()) rhs = scale(Rational(-1), at_k1->second);
    QVector witness;
    if (!solve(c_->op(OpKind::d01, k, 0), rhs, witness))
        throw NotInA("no witness eta_{k,0} exists for xi");

    QVector rep = c_->op(OpKind::d10, k, 0).apply(witness);
    auto xik11 = xi.components.find({k - 1, 1});
    if (xik11 != xi.components.end())
        rep = bgc::add(rep, c_->op(OpKind::d2m1, k - 1, 1).apply(xik11->second));

    ObstructionClass out{k, {k + 1, 0}, std::move(rep), null_coboundaries(0, k + 1)};
    if (!null_cocycles(0, k + 1).contains(out.representative))
        throw CrossCheckFailure("rho representative is not a dbar-cocycle of the null row");

    // Witness independence: shift by a kernel element of D01 when one exists.
    Subspace ker01 = kernel_basis(c_->op(OpKind::d01, k, 0));
    if (ker01.dim() > 0 && nk0 > 0) {
        QVector alt = bgc::add(witness, ker01.basis_vector(0));
        QVector rep2 = c_->op(OpKind::d10, k, 0).apply(alt);
        if (xik11 != xi.components.end())
            rep2 = bgc::add(rep2, c_->op(OpKind::d2m1, k - 1, 1).apply(xik11->second));
        if (!out.coboundaries.contains(sub(rep2, out.representative)))
            throw CrossCheckFailure("rho value depends on the witness choice");
    }
    return out;
}

ObstructionClass StructureAnalysis::varrho(int k, const QVector& xi_block) {
    if (static_cast<int>(xi_block.size()) != c_->dim(k - 1, 1))
        throw InvalidDimensions("varrho: expected a vector in C^{k-1,1}");
    if (!is_zero(c_->op(OpKind::d01, k - 1, 1).apply(xi_block)))
        throw NotInJ("D01 xi != 0");
    GradedVector xi{k, {}};
    if (!is_zero(xi_block)) xi.components[{k - 1, 1}] = xi_block;
    try {
        return rho(k, xi);
    } catch (const NotInA& e) {
        throw NotInJ(e.what());
    }
}

namespace {

// Kernel of pi_{q+1} on C^k as a coordinate subspace: blocks with second
// index <= q, i.e. first index >= k-q.
Subspace pi_kernel_coords(const BigradedComplex& c, int k, int q) {
    int n = c.total_dim(k);
    if (q + 1 <= 0) return Subspace::zero(n);
    if (q + 1 > k) return Subspace::full(n);
    int off = c.block_offset(k, k - q);
    return Subspace::coordinate_range(n, off, n - off);
}

}  // namespace

DiagramReport StructureAnalysis::diagram(int k, int q) {
    if (q < 0 || q > k) throw InvalidDimensions("diagram needs 0 <= q <= k");
    int p = k - q;
    const PreModules& here = pre_modules(k, q);
    const PreModules& next = pre_modules(k, q + 1);

    DiagramReport r;
    r.k = k;
    r.q = q;
    r.p = p;
    Subspace block = block_subspace(*c_, p, q);
    r.B_corner = intersection(here.B, block);
    r.Z_corner = intersection(here.Z, block);
    r.B_mid = here.B;
    r.Z_mid = here.Z;
    r.B_next = next.B;
    r.Z_next = next.Z;
    r.h_corner = r.Z_corner.dim() - r.B_corner.dim();
    r.h_mid = r.Z_mid.dim() - r.B_mid.dim();
    r.h_next = r.Z_next.dim() - r.B_next.dim();

    QMatrix pi_next = pi_q_matrix(*c_, k, q + 1);
    Subspace kerpi = pi_kernel_coords(*c_, k, q);
    r.row_B_kernel_matches = (intersection(here.B, kerpi) == r.B_corner);
    r.row_B_surjects = (map_subspace(pi_next, here.B) == next.B);
    r.row_Z_kernel_matches = (intersection(here.Z, kerpi) == r.Z_corner);
    r.row_Z_surjects = (map_subspace(pi_next, here.Z) == next.Z);
    r.columns_are_subspaces = r.Z_corner.contains(r.B_corner) && r.Z_mid.contains(r.B_mid) &&
                              r.Z_next.contains(r.B_next);
    r.bottom_row_dims_exact = (r.h_corner + r.h_next == r.h_mid);
    return r;
}

std::string DiagramReport::failure_summary() const {
    if (all_ok()) return "exact";
    std::ostringstream os;
    os << "diagram (k=" << k << ", q=" << q << "):";
    if (!row_B_kernel_matches) os << " B-row kernel mismatch;";
    if (!row_B_surjects) os << " pi_{q+1} not onto B^k_{q+1};";
    if (!row_Z_kernel_matches) os << " Z-row kernel mismatch;";
    if (!row_Z_surjects) os << " pi_{q+1} not onto Z^k_{q+1};";
    if (!columns_are_subspaces) os << " coboundaries not inside cocycles;";
    if (!bottom_row_dims_exact) os << " bottom row dims do not add up;";
    return os.str();
}

std::vector<int> StructureAnalysis::split_cohomology(int k) {
    std::vector<int> parts;
    int zsum = 0, bsum = 0;
    for (int q = 0; q <= k; ++q) {
        const PreModules& pm = pre_modules(k, q);
        Subspace block = block_subspace(*c_, k - q, q);
        int zc = intersection(pm.Z, block).dim();
        int bc = intersection(pm.B, block).dim();
        parts.push_back(zc - bc);
        zsum += zc;
        bsum += bc;
    }
    const CohomologyResult& h = total_cohomology(k);
    int hsum = 0;
    for (int x : parts) hsum += x;
    if (hsum != h.dim || zsum != h.cocycles.dim() || bsum != h.coboundaries.dim())
        throw ExactnessFailure("splitting sums disagree with the total spaces at degree " +
                               std::to_string(k));
    return parts;
}

NullCohomology null_cohomology(const BigradedComplex& c, int q, int k) {
    return StructureAnalysis(c).null_cohomology(q, k);
}

PreModules pre_modules(const BigradedComplex& c, int k, int q) {
    StructureAnalysis a(c);
    return a.pre_modules(k, q);
}

ObstructionClass rho(const BigradedComplex& c, int k, const GradedVector& xi) {
    StructureAnalysis a(c);
    return a.rho(k, xi);
}

ObstructionClass varrho(const BigradedComplex& c, int k, const QVector& xi_block) {
    StructureAnalysis a(c);
    return a.varrho(k, xi_block);
}

DiagramReport diagram(const BigradedComplex& c, int k, int q) {
    StructureAnalysis a(c);
    return a.diagram(k, q);
}

std::vector<int> split_cohomology(const BigradedComplex& c, int k) {
    StructureAnalysis a(c);
    return a.split_cohomology(k);
}

}  // namespace bgc
