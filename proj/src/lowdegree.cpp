#include "bgc/lowdegree.hpp"

#include "bgc/errors.hpp"
#include "bgc/linsys.hpp"

namespace bgc {

const Subspace& ExplicitSpaceSet::at(const std::string& name) const {
    auto it = spaces.find(name);
    if (it == spaces.end()) throw Error("no explicit space named '" + name + "'");
    return it->second;
}

namespace {

// Restriction of a C^k-ambient subspace supported in one block to that
// block's own coordinates.
Subspace block_part(const BigradedComplex& c, const Subspace& s, int k, Bidegree b) {
    Subspace cut = intersection(s, block_subspace(c, b.p, b.q));
    return restrict_to_range(cut, c.block_offset(k, b.p), c.dim(b));
}

struct SpaceBuilder {
    StructureAnalysis& an;
    const BigradedComplex& c;
    ExplicitSpaceSet set;

    explicit SpaceBuilder(StructureAnalysis& a, int k)
        : an(a), c(a.complex_ref()) {
        set.k = k;
    }

    void store(const std::string& name, Bidegree where, Subspace value,
               const Subspace& expected) {
        if (!(value == expected))
            throw CrossCheckFailure("explicit space " + name + " (dim " +
                                    std::to_string(value.dim()) +
                                    ") differs from the structure module (dim " +
                                    std::to_string(expected.dim()) + ")");
        set.blocks[name] = where;
        set.spaces[name] = std::move(value);
    }

    void store_unchecked(const std::string& name, Bidegree where, Subspace value) {
        set.blocks[name] = where;
        set.spaces[name] = std::move(value);
    }

    QMatrix d01(int p, int q) const { return c.op(OpKind::d01, p, q); }
    QMatrix d10(int p, int q) const { return c.op(OpKind::d10, p, q); }
    QMatrix d2m1(int p, int q) const { return c.op(OpKind::d2m1, p, q); }

    // Z^j(N_0) and the dbar-coboundary blocks used in membership conditions.
    Subspace dbar_image(int q, int k) const { return an.null_coboundaries(q, k); }

    Subspace corner(PreModules const& pm, int k, Bidegree b, bool coboundary) const {
        return block_part(c, coboundary ? pm.B : pm.Z, k, b);
    }
};

}  // namespace

ExplicitSpaceSet explicit_spaces(StructureAnalysis& an, int k) {
    if (k < 1 || k > 3) throw InvalidDimensions("explicit_spaces covers k = 1, 2, 3");
    const BigradedComplex& c = an.complex_ref();
    SpaceBuilder b(an, k);

    if (k == 1) {
        const PreModules& pm0 = an.pre_modules(1, 0);
        const PreModules& pm1 = an.pre_modules(1, 1);

        {  // B^1(N_0) = {d10 f : f in C^{0,0}, d01 f = 0}
            ConstrainedSpan sys;
            int f = sys.add_var(c.dim(0, 0));
            sys.require_zero({{f, b.d01(0, 0)}});
            b.store("B1_N0", {1, 0}, sys.image_of({{f, b.d10(0, 0)}}, c.dim(1, 0)),
                    block_part(c, pm0.B, 1, {1, 0}));
        }
        b.store("B1_C0col", {0, 1}, image_basis(b.d01(0, 0)), block_part(c, pm1.B, 1, {0, 1}));
        {  // A^1 = {Y : d01 Y = 0, exists alpha with d01 alpha + d10 Y = 0}
            ConstrainedSpan sys;
            int y = sys.add_var(c.dim(0, 1));
            int alpha = sys.add_var(c.dim(1, 0));
            sys.require_zero({{y, b.d01(0, 1)}});
            sys.require_zero({{alpha, b.d01(1, 0)}, {y, b.d10(0, 1)}});
            b.store("A1", {0, 1}, sys.project(y), block_part(c, an.a_space(1), 1, {0, 1}));
        }
        b.store("Z1_N0", {1, 0},
                intersection(kernel_basis(b.d01(1, 0)), kernel_basis(b.d10(1, 0))),
                block_part(c, pm0.Z, 1, {1, 0}));
        {  // ker rho_1: the membership lands in C^{2,0}, so the coboundary
           // test happens in B^2(N_0), not in the printed B^1.
            ConstrainedSpan sys;
            int y = sys.add_var(c.dim(0, 1));
            int alpha = sys.add_var(c.dim(1, 0));
            sys.require_zero({{y, b.d01(0, 1)}});
            sys.require_zero({{alpha, b.d01(1, 0)}, {y, b.d10(0, 1)}});
            sys.require_member({{y, b.d2m1(0, 1)}, {alpha, b.d10(1, 0)}}, b.dbar_image(0, 2));
            b.store("ker_rho1", {0, 1}, sys.project(y), block_part(c, pm1.Z, 1, {0, 1}));
        }
        return std::move(b.set);
    }

    if (k == 2) {
        const PreModules& pm0 = an.pre_modules(2, 0);
        const PreModules& pm1 = an.pre_modules(2, 1);
        const PreModules& pm2 = an.pre_modules(2, 2);

        {  // B^2 cap C^{2,0} = {d10 a + d2m1 Y : d01 a + d10 Y = 0, d01 Y = 0}
            ConstrainedSpan sys;
            int a = sys.add_var(c.dim(1, 0));
            int y = sys.add_var(c.dim(0, 1));
            sys.require_zero({{a, b.d01(1, 0)}, {y, b.d10(0, 1)}});
            sys.require_zero({{y, b.d01(0, 1)}});
            b.store("B2_cap_C20", {2, 0},
                    sys.image_of({{a, b.d10(1, 0)}, {y, b.d2m1(0, 1)}}, c.dim(2, 0)),
                    b.corner(pm0, 2, {2, 0}, true));
        }
        {  // B^2_1 cap C^{1,1} = {d10 Y + d01 a : d01 Y = 0}
            ConstrainedSpan sys;
            int a = sys.add_var(c.dim(1, 0));
            int y = sys.add_var(c.dim(0, 1));
            sys.require_zero({{y, b.d01(0, 1)}});
            b.store("B2_1_cap_C11", {1, 1},
                    sys.image_of({{y, b.d10(0, 1)}, {a, b.d01(1, 0)}}, c.dim(1, 1)),
                    b.corner(pm1, 2, {1, 1}, true));
        }
        b.store("B2_C0col", {0, 2}, image_basis(b.d01(0, 1)), b.corner(pm2, 2, {0, 2}, true));
        {  // J^2
            ConstrainedSpan sys;
            int qv = sys.add_var(c.dim(1, 1));
            int beta = sys.add_var(c.dim(2, 0));
            sys.require_zero({{qv, b.d01(1, 1)}});
            sys.require_zero({{beta, b.d01(2, 0)}, {qv, b.d10(1, 1)}});
            b.store("J2", {1, 1}, sys.project(qv), block_part(c, an.j_space(2), 2, {1, 1}));
        }
        b.store("Z2_N0", {2, 0},
                intersection(kernel_basis(b.d01(2, 0)), kernel_basis(b.d10(2, 0))),
                b.corner(pm0, 2, {2, 0}, false));
        {  // ker varrho_2; the value sits in C^{3,0} so the test is B^3(N_0).
            ConstrainedSpan sys;
            int qv = sys.add_var(c.dim(1, 1));
            int beta = sys.add_var(c.dim(2, 0));
            sys.require_zero({{qv, b.d01(1, 1)}});
            sys.require_zero({{beta, b.d01(2, 0)}, {qv, b.d10(1, 1)}});
            sys.require_member({{qv, b.d2m1(1, 1)}, {beta, b.d10(2, 0)}}, b.dbar_image(0, 3));
            b.store("ker_varrho2", {1, 1}, sys.project(qv), b.corner(pm1, 2, {1, 1}, false));
        }
        {  // Z^2_2: blockwise coboundary conditions through the null rows
            ConstrainedSpan sys;
            int v = sys.add_var(c.dim(0, 2));
            int qv = sys.add_var(c.dim(1, 1));
            int beta = sys.add_var(c.dim(2, 0));
            sys.require_zero({{v, b.d01(0, 2)}});
            sys.require_zero({{qv, b.d01(1, 1)}, {v, b.d10(0, 2)}});
            sys.require_member(
                {{beta, b.d01(2, 0)}, {qv, b.d10(1, 1)}, {v, b.d2m1(0, 2)}},
                b.dbar_image(1, 3));
            sys.require_member({{beta, b.d10(2, 0)}, {qv, b.d2m1(1, 1)}}, b.dbar_image(0, 3));
            b.store("Z2_2", {0, 2}, sys.project(v), b.corner(pm2, 2, {0, 2}, false));
        }
        return std::move(b.set);
    }

    const PreModules& pm0 = an.pre_modules(3, 0);
    const PreModules& pm1 = an.pre_modules(3, 1);
    const PreModules& pm2 = an.pre_modules(3, 2);
    const PreModules& pm3 = an.pre_modules(3, 3);

    {  // B^3 cap C^{3,0}
        ConstrainedSpan sys;
        int beta = sys.add_var(c.dim(2, 0));
        int qv = sys.add_var(c.dim(1, 1));
        int v = sys.add_var(c.dim(0, 2));
        sys.require_zero({{beta, b.d01(2, 0)}, {qv, b.d10(1, 1)}, {v, b.d2m1(0, 2)}});
        sys.require_zero({{qv, b.d01(1, 1)}, {v, b.d10(0, 2)}});
        sys.require_zero({{v, b.d01(0, 2)}});
        b.store("B3_cap_C30", {3, 0},
                sys.image_of({{beta, b.d10(2, 0)}, {qv, b.d2m1(1, 1)}}, c.dim(3, 0)),
                b.corner(pm0, 3, {3, 0}, true));
    }
    {  // B^3_1 cap C^{2,1}
        ConstrainedSpan sys;
        int beta = sys.add_var(c.dim(2, 0));
        int qv = sys.add_var(c.dim(1, 1));
        int v = sys.add_var(c.dim(0, 2));
        sys.require_zero({{qv, b.d01(1, 1)}, {v, b.d10(0, 2)}});
        sys.require_zero({{v, b.d01(0, 2)}});
        b.store("B3_1_cap_C21", {2, 1},
                sys.image_of({{beta, b.d01(2, 0)}, {qv, b.d10(1, 1)}, {v, b.d2m1(0, 2)}},
                             c.dim(2, 1)),
                b.corner(pm1, 3, {2, 1}, true));
    }
    {  // B^3_2 cap C^{1,2} = {d01 Q + d10 V : d01 V = 0}
        ConstrainedSpan sys;
        int qv = sys.add_var(c.dim(1, 1));
        int v = sys.add_var(c.dim(0, 2));
        sys.require_zero({{v, b.d01(0, 2)}});
        b.store("B3_2_cap_C12", {1, 2},
                sys.image_of({{qv, b.d01(1, 1)}, {v, b.d10(0, 2)}}, c.dim(1, 2)),
                b.corner(pm2, 3, {1, 2}, true));
    }
    b.store("B3_C0col", {0, 3}, image_basis(b.d01(0, 2)), b.corner(pm3, 3, {0, 3}, true));
    {  // J^3
        ConstrainedSpan sys;
        int r = sys.add_var(c.dim(2, 1));
        int phi = sys.add_var(c.dim(3, 0));
        sys.require_zero({{r, b.d01(2, 1)}});
        sys.require_zero({{phi, b.d01(3, 0)}, {r, b.d10(2, 1)}});
        b.store("J3", {2, 1}, sys.project(r), block_part(c, an.j_space(3), 3, {2, 1}));
    }
    b.store("Z3_N0", {3, 0},
            intersection(kernel_basis(b.d01(3, 0)), kernel_basis(b.d10(3, 0))),
            b.corner(pm0, 3, {3, 0}, false));
    {  // ker varrho_3, tested in B^4(N_0)
        ConstrainedSpan sys;
        int r = sys.add_var(c.dim(2, 1));
        int phi = sys.add_var(c.dim(3, 0));
        sys.require_zero({{r, b.d01(2, 1)}});
        sys.require_zero({{phi, b.d01(3, 0)}, {r, b.d10(2, 1)}});
        sys.require_member({{r, b.d2m1(2, 1)}, {phi, b.d10(3, 0)}}, b.dbar_image(0, 4));
        b.store("ker_varrho3", {2, 1}, sys.project(r), b.corner(pm1, 3, {2, 1}, false));
    }
    {  // Z^3_2 cap C^{1,2}
        ConstrainedSpan sys;
        int s = sys.add_var(c.dim(1, 2));
        int r = sys.add_var(c.dim(2, 1));
        int phi = sys.add_var(c.dim(3, 0));
        sys.require_zero({{s, b.d01(1, 2)}});
        sys.require_zero({{r, b.d01(2, 1)}, {s, b.d10(1, 2)}});
        sys.require_member({{phi, b.d01(3, 0)}, {r, b.d10(2, 1)}, {s, b.d2m1(1, 2)}},
                           b.dbar_image(1, 4));
        sys.require_member({{phi, b.d10(3, 0)}, {r, b.d2m1(2, 1)}}, b.dbar_image(0, 4));
        b.store("Z3_2_cap_C12", {1, 2}, sys.project(s), b.corner(pm2, 3, {1, 2}, false));
    }
    {  // Z^3_3
        ConstrainedSpan sys;
        int w = sys.add_var(c.dim(0, 3));
        int s = sys.add_var(c.dim(1, 2));
        int r = sys.add_var(c.dim(2, 1));
        int phi = sys.add_var(c.dim(3, 0));
        sys.require_zero({{w, b.d01(0, 3)}});
        sys.require_zero({{s, b.d01(1, 2)}, {w, b.d10(0, 3)}});
        sys.require_member({{r, b.d01(2, 1)}, {s, b.d10(1, 2)}, {w, b.d2m1(0, 3)}},
                           b.dbar_image(2, 4));
        sys.require_member({{phi, b.d01(3, 0)}, {r, b.d10(2, 1)}, {s, b.d2m1(1, 2)}},
                           b.dbar_image(1, 4));
        sys.require_member({{phi, b.d10(3, 0)}, {r, b.d2m1(2, 1)}}, b.dbar_image(0, 4));
        b.store("Z3_3", {0, 3}, sys.project(w), b.corner(pm3, 3, {0, 3}, false));
    }
    return std::move(b.set);
}

ExplicitSpaceSet explicit_spaces(const BigradedComplex& c, int k) {
    StructureAnalysis an(c);
    return explicit_spaces(an, k);
}

namespace {

bool family_is_zero(const BigradedComplex& c, OpKind kind) {
    for (const auto& [b, n] : c.dims()) {
        (void)n;
        if (!c.op(kind, b.p, b.q).is_zero()) return false;
    }
    return true;
}

}  // namespace

ExplicitSpaceSet specialize(const BigradedComplex& c, SpecialCase which) {
    OpKind dead = which == SpecialCase::d2m1_zero ? OpKind::d2m1 : OpKind::d01;
    if (!family_is_zero(c, dead))
        throw WrongSpecialization(std::string(op_name(dead)) + " is not identically zero");

    StructureAnalysis an(c);
    ExplicitSpaceSet general1 = explicit_spaces(an, 1);
    ExplicitSpaceSet general2 = explicit_spaces(an, 2);

    ExplicitSpaceSet out;
    out.k = 0;  // mixed degrees
    auto check_store = [&out](const std::string& name, Bidegree where, Subspace value,
                              const Subspace& general) {
        if (!(value == general))
            throw CrossCheckFailure("specialized space " + name +
                                    " differs from the general formula");
        out.blocks[name] = where;
        out.spaces[name] = std::move(value);
    };
    auto d01 = [&c](int p, int q) { return c.op(OpKind::d01, p, q); };
    auto d10 = [&c](int p, int q) { return c.op(OpKind::d10, p, q); };
    auto d2m1 = [&c](int p, int q) { return c.op(OpKind::d2m1, p, q); };

    if (which == SpecialCase::d2m1_zero) {
        // Double complex: N = ker d01 blockwise; the d2m1 terms drop out of
        // every display.
        for (const auto& [bd, n] : c.dims()) {
            (void)n;
            if (!(an.null().bases.at(bd) == kernel_basis(d01(bd.p, bd.q))))
                throw CrossCheckFailure("null subcomplex is not ker d01 at " + to_string(bd));
        }
        {
            ConstrainedSpan sys;
            int y = sys.add_var(c.dim(0, 1));
            int a = sys.add_var(c.dim(1, 0));
            sys.require_zero({{y, d01(0, 1)}});
            sys.require_zero({{y, d10(0, 1)}, {a, d01(1, 0)}});
            sys.require_member({{a, d10(1, 0)}}, an.null_coboundaries(0, 2));
            check_store("ker_rho1", {0, 1}, sys.project(y), general1.at("ker_rho1"));
        }
        {
            ConstrainedSpan sys;
            int a = sys.add_var(c.dim(1, 0));
            int y = sys.add_var(c.dim(0, 1));
            sys.require_zero({{a, d01(1, 0)}, {y, d10(0, 1)}});
            sys.require_zero({{y, d01(0, 1)}});
            check_store("B2_cap_C20", {2, 0}, sys.image_of({{a, d10(1, 0)}}, c.dim(2, 0)),
                        general2.at("B2_cap_C20"));
        }
        {
            ConstrainedSpan sys;
            int qv = sys.add_var(c.dim(1, 1));
            int beta = sys.add_var(c.dim(2, 0));
            sys.require_zero({{qv, d01(1, 1)}});
            sys.require_zero({{beta, d01(2, 0)}, {qv, d10(1, 1)}});
            sys.require_member({{beta, d10(2, 0)}}, an.null_coboundaries(0, 3));
            check_store("ker_varrho2", {1, 1}, sys.project(qv), general2.at("ker_varrho2"));
        }
        {
            ConstrainedSpan sys;
            int v = sys.add_var(c.dim(0, 2));
            int qv = sys.add_var(c.dim(1, 1));
            int beta = sys.add_var(c.dim(2, 0));
            sys.require_zero({{v, d01(0, 2)}});
            sys.require_zero({{qv, d01(1, 1)}, {v, d10(0, 2)}});
            sys.require_member({{beta, d01(2, 0)}, {qv, d10(1, 1)}}, an.null_coboundaries(1, 3));
            sys.require_member({{beta, d10(2, 0)}}, an.null_coboundaries(0, 3));
            check_store("Z2_2", {0, 2}, sys.project(v), general2.at("Z2_2"));
        }
        check_store("A1", {0, 1}, general1.at("A1"), general1.at("A1"));
        return out;
    }

    // d01 = 0: N = ker d2m1, the zeroth null row is the whole bottom row.
    for (const auto& [bd, n] : c.dims()) {
        (void)n;
        if (!(an.null().bases.at(bd) == kernel_basis(d2m1(bd.p, bd.q))))
            throw CrossCheckFailure("null subcomplex is not ker d2m1 at " + to_string(bd));
    }
    check_store("B1_N0", {1, 0}, image_basis(d10(0, 0)), general1.at("B1_N0"));
    check_store("B1_C0col", {0, 1}, Subspace::zero(c.dim(0, 1)), general1.at("B1_C0col"));
    check_store("A1", {0, 1}, kernel_basis(d10(0, 1)), general1.at("A1"));
    check_store("Z1_N0", {1, 0}, kernel_basis(d10(1, 0)), general1.at("Z1_N0"));
    {
        // The value d2m1 Y sits in C^{2,0}, so the membership space is
        // d10(C^{1,0}) = B^2(N_0); the whole bottom row is null here.
        ConstrainedSpan sys;
        int y = sys.add_var(c.dim(0, 1));
        sys.require_zero({{y, d10(0, 1)}});
        sys.require_member({{y, d2m1(0, 1)}}, image_basis(d10(1, 0)));
        check_store("ker_rho1", {0, 1}, sys.project(y), general1.at("ker_rho1"));
    }
    {
        ConstrainedSpan sys;
        int a = sys.add_var(c.dim(1, 0));
        int y = sys.add_var(c.dim(0, 1));
        sys.require_zero({{y, d10(0, 1)}});
        check_store("B2_cap_C20", {2, 0},
                    sys.image_of({{a, d10(1, 0)}, {y, d2m1(0, 1)}}, c.dim(2, 0)),
                    general2.at("B2_cap_C20"));
    }
    check_store("B2_1_cap_C11", {1, 1}, image_basis(d10(0, 1)), general2.at("B2_1_cap_C11"));
    check_store("B2_C0col", {0, 2}, Subspace::zero(c.dim(0, 2)), general2.at("B2_C0col"));
    check_store("J2", {1, 1}, kernel_basis(d10(1, 1)), general2.at("J2"));
    check_store("Z2_N0", {2, 0}, kernel_basis(d10(2, 0)), general2.at("Z2_N0"));
    {
        ConstrainedSpan sys;
        int qv = sys.add_var(c.dim(1, 1));
        int beta = sys.add_var(c.dim(2, 0));
        sys.require_zero({{qv, d10(1, 1)}});
        sys.require_member({{qv, d2m1(1, 1)}, {beta, d10(2, 0)}}, an.null_coboundaries(0, 3));
        check_store("ker_varrho2", {1, 1}, sys.project(qv), general2.at("ker_varrho2"));
    }
    {
        ConstrainedSpan sys;
        int v = sys.add_var(c.dim(0, 2));
        int qv = sys.add_var(c.dim(1, 1));
        int beta = sys.add_var(c.dim(2, 0));
        sys.require_zero({{v, d10(0, 2)}});
        sys.require_member({{qv, d10(1, 1)}, {v, d2m1(0, 2)}}, an.null_coboundaries(1, 3));
        sys.require_member({{beta, d10(2, 0)}, {qv, d2m1(1, 1)}}, an.null_coboundaries(0, 3));
        check_store("Z2_2", {0, 2}, sys.project(v), general2.at("Z2_2"));
    }
    return out;
}

std::map<Bidegree, int> double_complex_e2_dims(const BigradedComplex& c) {
    if (!family_is_zero(c, OpKind::d2m1))
        throw WrongSpecialization("d2m1 is not identically zero");

    // Vertical cohomology V^{p,q} with representatives, then the horizontal
    // differential induced on representatives.
    std::map<Bidegree, std::vector<QVector>> reps;
    std::map<Bidegree, Subspace> bounds;
    for (int p = 0; p <= c.pmax(); ++p) {
        for (int q = 0; q <= c.qmax(); ++q) {
            Subspace z = kernel_basis(c.op(OpKind::d01, p, q));
            Subspace bset = q >= 1 ? image_basis(c.op(OpKind::d01, p, q - 1))
                                   : Subspace::zero(c.dim(p, q));
            bounds[{p, q}] = bset;
            reps[{p, q}] = extend_basis(bset, z);
        }
    }
    std::map<Bidegree, QMatrix> horizontal;
    for (int p = 0; p <= c.pmax(); ++p) {
        for (int q = 0; q <= c.qmax(); ++q) {
            const auto& src = reps[{p, q}];
            int tdim = static_cast<int>(reps[{p + 1, q}].size());
            QMatrix h(tdim, static_cast<int>(src.size()));
            if (!src.empty() && c.dim(p + 1, q) > 0) {
                // Express d10(rep) in target representatives modulo vertical
                // coboundaries.
                QMatrix basis(c.dim(p + 1, q), 0);
                for (const auto& w : reps[{p + 1, q}])
                    basis = QMatrix::hstack(
                        basis, QMatrix::from_dense_rows({w}, c.dim(p + 1, q)).transpose());
                basis = QMatrix::hstack(basis, bounds[{p + 1, q}].basis().transpose());
                for (std::size_t j = 0; j < src.size(); ++j) {
                    QVector w = c.op(OpKind::d10, p, q).apply(src[j]);
                    QVector coords;
                    if (!solve(basis, w, coords))
                        throw CrossCheckFailure("induced horizontal map escapes vertical classes");
                    for (int i = 0; i < tdim; ++i) h.set(i, static_cast<int>(j), coords[i]);
                }
            }
            horizontal[{p, q}] = std::move(h);
        }
    }
    std::map<Bidegree, int> dims;
    for (int p = 0; p <= c.pmax(); ++p) {
        for (int q = 0; q <= c.qmax(); ++q) {
            int z = kernel_basis(horizontal[{p, q}]).dim();
            int bdim = p >= 1 ? rank(horizontal[{p - 1, q}]) : 0;
            int d = z - bdim;
            if (d != 0) dims[{p, q}] = d;
        }
    }
    return dims;
}

}  // namespace bgc
