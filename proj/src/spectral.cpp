#include "bgc/spectral.hpp"

#include <cassert>

#include "bgc/errors.hpp"

namespace bgc {

ZrBr zr_br(const BigradedComplex& c, int p, int q, int r) {
    if (r < 0) throw InvalidDimensions("zr_br needs r >= 0");
    int k = p + q;
    int n = c.total_dim(k);
    Subspace fp = filtration_subspace(c, p, k);

    Subspace z = intersection(
        fp, preimage_basis(c.total_differential(k), filtration_subspace(c, p + r, k + 1)));

    Subspace b = Subspace::zero(n);
    if (k >= 1) {
        Subspace source = filtration_subspace(c, p - r + 1, k - 1);
        b = intersection(fp, map_subspace(c.total_differential(k - 1), source));
    }
    return {std::move(z), std::move(b)};
}

namespace {

struct PageBlock {
    Subspace denominator;          // B_{r-1} + F^{p+1}, inside C^{p+q}
    std::vector<QVector> reps;     // representatives spanning E_r^{p,q}
};

PageBlock page_block(const BigradedComplex& c, int p, int q, int r) {
    int k = p + q;
    ZrBr zb = zr_br(c, p, q, r);
    Subspace fp1 = filtration_subspace(c, p + 1, k);
    PageBlock out;
    out.denominator = sum(zb.B, fp1);
    // Z_r + denominator = Z_r + F^{p+1}, so a complement of Z_r cap denom
    // inside Z_r represents the page entry.
    Subspace inter = intersection(zb.Z, out.denominator);
    out.reps = extend_basis(inter, zb.Z);
    return out;
}

}  // namespace

SpectralPage compute_page(const BigradedComplex& c, int r) {
    SpectralPage page;
    page.r = r;
    std::map<Bidegree, PageBlock> blocks;
    for (int p = 0; p <= c.pmax(); ++p) {
        for (int q = 0; q <= c.qmax(); ++q) {
            if (c.total_dim(p + q) == 0) continue;
            PageBlock b = page_block(c, p, q, r);
            if (!b.reps.empty()) page.dims[{p, q}] = static_cast<int>(b.reps.size());
            blocks[{p, q}] = std::move(b);
        }
    }
    for (const auto& [b, block] : blocks) {
        if (block.reps.empty()) continue;
        int k = b.p + b.q;
        Bidegree target{b.p + r, b.q + 1 - r};
        int target_dim = page.dim(target);
        QMatrix d(target_dim, static_cast<int>(block.reps.size()));
        if (target_dim > 0) {
            const PageBlock& tb = blocks.at(target);
            // Coordinates in span(reps) + denominator; the split is direct.
            QMatrix basis(c.total_dim(k + 1), 0);
            for (const auto& w : tb.reps)
                basis = QMatrix::hstack(
                    basis, QMatrix::from_dense_rows({w}, c.total_dim(k + 1)).transpose());
            basis = QMatrix::hstack(basis, tb.denominator.basis().transpose());
            for (std::size_t j = 0; j < block.reps.size(); ++j) {
                QVector w = c.total_differential(k).apply(block.reps[j]);
                QVector coords;
                bool ok = solve(basis, w, coords);
                if (!ok)
                    throw MismatchAtInfinity("page differential image escapes the target page at " +
                                             to_string(b));
                for (int i = 0; i < target_dim; ++i) d.set(i, static_cast<int>(j), coords[i]);
            }
        } else {
            // Target entry is zero; D of each representative must already lie
            // in the target denominator. Nothing to record.
        }
        page.differentials[b] = std::move(d);
    }
    return page;
}

EInfinity e_infinity(const BigradedComplex& c, int p, int q) {
    int k = p + q;
    int big = std::max(p + 1, q + 2);

    ZrBr zb = zr_br(c, p, q, big);
    Subspace fp1 = filtration_subspace(c, p + 1, k);
    int via_page = sum(zb.Z, fp1).dim() - sum(zb.B, fp1).dim();

    Subspace fp = filtration_subspace(c, p, k);
    CohomologyResult h = cohomology(c, k);
    int direct = sum(intersection(h.cocycles, fp), fp1).dim() -
                 sum(intersection(h.coboundaries, fp), fp1).dim();

    if (via_page != direct)
        throw MismatchAtInfinity("stabilized page dim " + std::to_string(via_page) +
                                 " vs direct quotient " + std::to_string(direct) + " at (" +
                                 std::to_string(p) + "," + std::to_string(q) + ")");
    return {direct, big};
}

const SpectralPage& SpectralSequence::page(int r) {
    auto it = cache_.find(r);
    if (it == cache_.end()) it = cache_.emplace(r, compute_page(*c_, r)).first;
    return it->second;
}

}  // namespace bgc
