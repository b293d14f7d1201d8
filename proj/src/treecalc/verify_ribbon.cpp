#include "skeletal/category.hpp"
#include "treecalc/morphism.hpp"

#include <cmath>

namespace tqft {

// Sphericality and the duality gauge. The fold machinery computes left
// and right traces of identities honestly, so this pass checks the
// stored dimensions, the pivotal coefficients and the strict-gauge
// constraints against each other.
VerificationReport verify_spherical(const CategoryData &cat) {
    VerificationReport rep;
    rep.name = "spherical";
    const SimpleId n = static_cast<SimpleId>(cat.n_simples());
    const double tol = cat.tolerance;

    double dual_dim = 0;
    for (SimpleId i = 0; i < n; ++i)
        dual_dim = std::max(dual_dim,
                            std::abs(cat.dim[static_cast<std::size_t>(i)] -
                                     cat.dim[static_cast<std::size_t>(
                                         cat.dual[static_cast<std::size_t>(i)])]));
    rep.add("dim_dual_symmetry", dual_dim, tol);

    rep.add("dim_unit", std::abs(cat.dim[static_cast<std::size_t>(cat.unit)] -
                                 cplx(1, 0)),
            tol);
    rep.add("pivotal_unit",
            std::abs(cat.pivotal[static_cast<std::size_t>(cat.unit)] - cplx(1, 0)),
            tol);

    double piv_inv = 0;
    for (SimpleId i = 0; i < n; ++i)
        piv_inv = std::max(
            piv_inv, std::abs(cat.pivotal[static_cast<std::size_t>(i)] *
                                  cat.pivotal[static_cast<std::size_t>(
                                      cat.dual[static_cast<std::size_t>(i)])] -
                              cplx(1, 0)));
    rep.add("pivotal_dual_inverse", piv_inv, tol);

    // traces of identities via honest folds
    double tr_res = 0;
    for (SimpleId i = 0; i < n; ++i) {
        Morphism idm = morphism_identity(cat, Word::of({Obj::simple(i)}));
        const cplx tr_r = scalar_value(partial_trace_right(idm));
        const cplx tr_l = scalar_value(partial_trace_left(idm));
        const cplx d = cat.dim[static_cast<std::size_t>(i)];
        tr_res = std::max({tr_res, std::abs(tr_r - d), std::abs(tr_l - d)});
    }
    rep.add("fold_traces_match_dims", tr_res, tol);

    // both zig-zags of the chosen duality pair
    double zz = 0;
    for (SimpleId i = 0; i < n; ++i) {
        const Obj x = Obj::simple(i);
        const Obj xd = dual_obj(cat, x);
        const Word wx = Word::of({x});
        const Word wxd = Word::of({xd});
        // (id_x (x) ev) o (coev (x) id_x) = id_x
        Morphism z1 = compose(tensor(morphism_identity(cat, wx), ev(cat, x)),
                              tensor(coev(cat, x), morphism_identity(cat, wx)));
        zz = std::max(zz, max_abs_diff(z1, morphism_identity(cat, wx)));
        // (ev (x) id_x*) o (id_x* (x) coev) = id_x*
        Morphism z2 =
            compose(tensor(ev(cat, x), morphism_identity(cat, wxd)),
                    tensor(morphism_identity(cat, wxd), coev(cat, x)));
        zz = std::max(zz, max_abs_diff(z2, morphism_identity(cat, wxd)));
        // tilde pair
        Morphism z3 = compose(tensor(tev(cat, x), morphism_identity(cat, wx)),
                              tensor(morphism_identity(cat, wx), tcoev(cat, x)));
        zz = std::max(zz, max_abs_diff(z3, morphism_identity(cat, wx)));
        Morphism z4 =
            compose(tensor(morphism_identity(cat, wxd), tev(cat, x)),
                    tensor(tcoev(cat, x), morphism_identity(cat, wxd)));
        zz = std::max(zz, max_abs_diff(z4, morphism_identity(cat, wxd)));
    }
    rep.add("zigzag_identities", zz, tol);

    // strict unit gauge of F
    double unit_gauge = 0;
    for (SimpleId a = 0; a < n; ++a)
        for (SimpleId b = 0; b < n; ++b)
            for (SimpleId jj = 0; jj < n; ++jj)
                for (SimpleId k = 0; k < n; ++k) {
                    if (a != cat.unit && b != cat.unit && jj != cat.unit)
                        continue;
                    if (!cat.f_block_exists(a, b, jj, k))
                        continue;
                    const FBlock &blk = cat.f_block(a, b, jj, k);
                    for (std::size_t r = 0; r < blk.left.size(); ++r)
                        for (std::size_t c = 0; c < blk.right.size(); ++c) {
                            bool match;
                            if (a == cat.unit)
                                match = blk.left[r].m2 == blk.right[c].m2;
                            else if (b == cat.unit)
                                match = blk.left[r].m2 == blk.right[c].m1;
                            else
                                match = blk.left[r].m1 == blk.right[c].m1;
                            unit_gauge = std::max(
                                unit_gauge, std::abs(blk.coeff(r, c) -
                                                     (match ? cplx(1, 0)
                                                            : cplx(0, 0))));
                        }
                }
    rep.add("unit_strict_gauge", unit_gauge, tol);

    double gd = std::abs(cat.global_dimension());
    rep.add_flag("global_dimension_nonzero", gd > tol,
                 "dim = " + std::to_string(gd));
    return rep;
}

// Hexagon identities, naturality of the braiding with respect to fusion
// vertices, and ribbon/twist compatibility. All checks are phrased as
// morphism identities evaluated by the tree engine, so they exercise the
// R tables against the F tables.
VerificationReport verify_ribbon(const CategoryData &cat) {
    VerificationReport rep;
    rep.name = "ribbon";
    if (!cat.ribbon) {
        rep.add_flag("ribbon_data_present", false, "no R/twist tables");
        return rep;
    }
    const SimpleId n = static_cast<SimpleId>(cat.n_simples());
    const double tol = cat.tolerance;

    // hexagons, as naturality of the double move against a fused vertex:
    //   c_{i (x) j, m} computed strand-by-strand equals c_{k,m} conjugated
    //   by the fusion vertex, for both crossing directions.
    double hex = 0;
    std::string hex_err;
    try {
    for (SimpleId i = 0; i < n; ++i)
        for (SimpleId j = 0; j < n; ++j)
            for (SimpleId k = 0; k < n; ++k) {
                const int nm = cat.N(i, j, k);
                for (int m = 0; m < nm; ++m)
                    for (SimpleId w = 0; w < n; ++w) {
                        const Word src = Word::of(
                            {Obj::simple(i), Obj::simple(j), Obj::simple(w)});
                        const Word mid = Word::of(
                            {Obj::simple(i), Obj::simple(w), Obj::simple(j)});
                        const Word fused =
                            Word::of({Obj::simple(k), Obj::simple(w)});
                        const Word out =
                            Word::of({Obj::simple(w), Obj::simple(k)});
                        Morphism vert = vertex_fusion(cat, i, j, k, m);
                        for (bool over : {true, false}) {
                            // move w across both strands, then fuse
                            Morphism b2 = braid(cat, src, 2, over);
                            Morphism b1 = braid(cat, mid, 1, over);
                            Morphism lhs = compose(
                                tensor(morphism_identity(
                                           cat, Word::of({Obj::simple(w)})),
                                       vert),
                                compose(b1, b2));
                            // fuse, then cross the fused strand
                            Morphism rhs = compose(
                                braid(cat, fused, 1, over),
                                tensor(vert, morphism_identity(
                                                 cat, Word::of({Obj::simple(w)}))));
                            (void)out;
                            hex = std::max(hex, max_abs_diff(lhs, rhs));
                        }
                    }
            }
    } catch (const std::runtime_error &e) {
        hex = 1.0;
        hex_err = e.what();
    }
    rep.add("hexagon_naturality", hex, tol);
    if (!hex_err.empty())
        rep.checks.back().detail = hex_err;

    // twist table sanity
    const RibbonData &rib = *cat.ribbon;
    double tw = std::abs(rib.twist[static_cast<std::size_t>(cat.unit)] -
                         cplx(1, 0));
    rep.add("twist_unit", tw, tol);
    double twd = 0;
    for (SimpleId i = 0; i < n; ++i)
        twd = std::max(twd, std::abs(rib.twist[static_cast<std::size_t>(i)] -
                                     rib.twist[static_cast<std::size_t>(
                                         cat.dual[static_cast<std::size_t>(i)])]));
    rep.add("twist_dual_symmetry", twd, tol);

    // ribbon compatibility: the double braid trace recovers the twist,
    //   theta_i = (1/d_i) sum_k d_k tr(R^{ii}_k-block squared sense)
    // evaluated honestly: theta_i * id = ptr_right(c_{i,i} o c_{i,i})-ish;
    // we use the standard identity theta_i id_{i(x)i}-channelwise:
    //   c_{i,i} o c_{i,i} = twist-balanced; test on each channel via trace.
    double ribc = 0;
    try {
    for (SimpleId i = 0; i < n; ++i) {
        const Word w2 = Word::of({Obj::simple(i), Obj::simple(i)});
        Morphism dbl = compose(braid(cat, w2, 1, true), braid(cat, w2, 1, true));
        // on channel k the double braid equals theta_k / theta_i^2
        for (const auto &[key, v] : dbl.coeff) {
            const SimpleId k = key.src.root(cat, w2);
            const cplx want =
                (key.src == key.tgt)
                    ? rib.twist[static_cast<std::size_t>(k)] /
                          (rib.twist[static_cast<std::size_t>(i)] *
                           rib.twist[static_cast<std::size_t>(i)])
                    : cplx(0, 0);
            ribc = std::max(ribc, std::abs(v - want));
        }
    }
    } catch (const std::runtime_error &) {
        ribc = 1.0;
    }
    rep.add("twist_double_braid", ribc, tol);

    // the twist itself from the closed self-braiding:
    //   ptr_right(c_{i,i}) = theta_i * id_i
    double tw_trace = 0;
    try {
    for (SimpleId i = 0; i < n; ++i) {
        const Word w2 = Word::of({Obj::simple(i), Obj::simple(i)});
        Morphism pt = partial_trace_right(braid(cat, w2, 1, true));
        Morphism want = rib.twist[static_cast<std::size_t>(i)] *
                        morphism_identity(cat, Word::of({Obj::simple(i)}));
        tw_trace = std::max(tw_trace, max_abs_diff(pt, want));
    }
    } catch (const std::runtime_error &) {
        tw_trace = 1.0;
    }
    rep.add("twist_self_braiding_trace", tw_trace, tol);
    return rep;
}

VerificationReport verify_modularity(const CategoryData &cat) {
    VerificationReport rep;
    rep.name = "modularity";
    if (!cat.ribbon) {
        rep.add_flag("ribbon_data_present", false);
        return rep;
    }
    const SimpleId n = static_cast<SimpleId>(cat.n_simples());
    CMatrix S(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (SimpleId i = 0; i < n; ++i)
        for (SimpleId j = 0; j < n; ++j) {
            const Word w = Word::of({Obj::simple(i), Obj::simple(j)});
            Word ws = w;
            std::swap(ws.f[0], ws.f[1]);
            Morphism dbl =
                compose(braid(cat, ws, 1, true), braid(cat, w, 1, true));
            S(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                trace(dbl);
        }
    bool invertible = true;
    double cond = 0;
    try {
        CMatrix Sinv = S.inverse(cat.tolerance);
        cond = S.max_abs() * Sinv.max_abs();
    } catch (const std::runtime_error &) {
        invertible = false;
    }
    rep.add_flag("s_matrix_invertible", invertible,
                 invertible ? "max-norm condition estimate " +
                                  std::to_string(cond)
                            : "singular S-matrix");
    return rep;
}

VerificationReport verify_all(const CategoryData &cat) {
    VerificationReport rep;
    rep.name = "category:" + cat.name;
    for (const auto &sub :
         {verify_fusion_ring(cat), verify_pentagon(cat), verify_spherical(cat)})
        for (const auto &c : sub.checks)
            rep.checks.push_back({sub.name + "." + c.id, c.residual, c.pass,
                                  c.detail});
    if (cat.ribbon) {
        auto sub = verify_ribbon(cat);
        for (const auto &c : sub.checks)
            rep.checks.push_back({sub.name + "." + c.id, c.residual, c.pass,
                                  c.detail});
    }
    return rep;
}

} // namespace tqft
