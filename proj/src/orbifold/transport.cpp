#include "orbifold/datum.hpp"

#include <cmath>
#include <set>
#include <random>

namespace tqft {

namespace {

// principal square root of an endomorphism via Denman-Beavers iteration
// on the per-root blocks
Morphism morphism_endo_sqrt(const Morphism &f) {
    const CategoryData &cat = *f.cat;
    if (!(f.src == f.tgt))
        throw std::runtime_error("endo_sqrt: not an endomorphism");
    std::vector<std::vector<Tree>> by_root(cat.n_simples());
    for (const auto &t : enumerate_trees(cat, f.src))
        by_root[static_cast<std::size_t>(t.root(cat, f.src))].push_back(t);
    Morphism out = morphism_zero(cat, f.src, f.src);
    for (const auto &basis : by_root) {
        if (basis.empty())
            continue;
        CMatrix m(basis.size(), basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                auto it = f.coeff.find(TreePair{basis[j], basis[i]});
                if (it != f.coeff.end())
                    m(i, j) = it->second;
            }
        CMatrix y = m, z = CMatrix::identity(basis.size());
        for (int iter = 0; iter < 60; ++iter) {
            CMatrix yn = (y + z.inverse()).scaled(0.5);
            CMatrix zn = (z + y.inverse()).scaled(0.5);
            const double moved = yn.max_abs_diff(y);
            y = yn;
            z = zn;
            if (moved < 1e-14)
                break;
        }
        if ((y * y).max_abs_diff(m) > 1e-8)
            throw std::runtime_error("endo_sqrt: iteration failed");
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j)
                out.add(basis[j], basis[i], y(i, j));
    }
    out.prune(1e-14);
    return out;
}

} // namespace

OrbifoldDatum morita_transport(const OrbifoldDatum &d, const MoritaModule &mm) {
    const CategoryData &cat = *d.cat;
    const double tol = cat.tolerance * 100;
    const ModuleData &X = mm.X; // A-B-bimodule: [0] left A, [1] right B
    if (X.actions.size() != 2 || X.action(0).side != Side::Left ||
        X.action(1).side != Side::Right)
        throw std::runtime_error(
            "morita_transport: X needs actions [left A, right B]");
    const FrobeniusAlgebraData &B = *mm.B;

    // dual module X* = B-A-bimodule
    ModuleData Xd = module_dual(X);
    // Xd.actions: [0] right A (from left A), [1] left B (from right B)

    // Morita witnesses at the level of carriers: X* (x)_A X ~ B and
    // X (x)_B X* ~ A as objects
    {
        RelativeTensor ba = relative_tensor(Xd, 0, X, 0);
        std::multiset<SimpleId> got(ba.image.s.begin(), ba.image.s.end());
        std::multiset<SimpleId> want(B.carrier.s.begin(), B.carrier.s.end());
        if (got != want)
            throw std::runtime_error(
                "morita_transport: X* (x)_A X does not match B");
        ModuleData Xr = X; // use [1] as the right-B action
        RelativeTensor ab = relative_tensor(Xr, 1, Xd, 1);
        std::multiset<SimpleId> got2(ab.image.s.begin(), ab.image.s.end());
        std::multiset<SimpleId> want2(d.Ac().s.begin(), d.Ac().s.end());
        if (got2 != want2)
            throw std::runtime_error(
                "morita_transport: X (x)_B X* does not match A");
    }
    for (const auto &part : morita_decompose(*d.alg))
        if (std::abs(part.dimension) < tol)
            throw std::runtime_error("morita_transport: dim(A_i) = 0");
    for (const auto &part : morita_decompose(B))
        if (std::abs(part.dimension) < tol)
            throw std::runtime_error("morita_transport: dim(B_i) = 0");

    const Obj &Xc = X.carrier;
    const Obj Xdc = Xd.carrier;
    const Obj &Tc = d.Tc();
    const Obj &Ac = d.Ac();
    const Obj &Bc = B.carrier;
    const Word W = Word::of({Xdc, Tc, Xc, Xc});

    // total projector on X* (x) T (x) X (x) X
    Morphism P;
    {
        // X*-right-A against T-left-A
        Morphism de = compose(d.alg->delta, d.alg->eta);
        Morphism p_a = compose(
            tensor(tensor(Xd.action(0).act, d.T.action(0).act),
                   morphism_identity(cat, Word::of({Xc, Xc}))),
            padded(de, W, 1));
        // T-action-1 against the first X's left-A
        Morphism p_1 = compose(
            tensor(tensor(morphism_identity(cat, Word::of({Xdc})),
                          tensor(d.T.action(1).act, X.action(0).act)),
                   morphism_identity(cat, Word::of({Xc}))),
            padded(de, W, 2));
        // T-action-2 against the second X's left-A; the algebra strand
        // reaching X2 dives under the first X
        Morphism p_2;
        {
            Morphism ins = padded(de, W, 2); // (X*,T,A,A,X,X)
            Word w6 = Word::of({Xdc, Tc, Ac, Ac, Xc, Xc});
            Morphism cr = braid(cat, w6, 4, false); // leg dives under X1
            Word w6b = Word::of({Xdc, Tc, Ac, Xc, Ac, Xc});
            Morphism act2 = padded(d.T.action(2).act, w6b, 1);
            // after acting with T.2 the word is (X*, T, X, A, X)
            Word w5 = Word::of({Xdc, Tc, Xc, Ac, Xc});
            Morphism actX = padded(X.action(0).act, w5, 3);
            p_2 = compose(actX, compose(act2, compose(cr, ins)));
        }
        P = compose(p_a, compose(p_1, p_2));
        if (max_abs_diff(compose(P, P), P) > tol)
            throw std::runtime_error("morita_transport: projector to T^X is "
                                     "not idempotent");
    }

    // split P
    OrbifoldDatum out;
    out.cat_owned = d.cat_owned;
    out.cat = &cat;
    out.name = d.name + ":transported";
    out.alg = mm.B;
    Obj TXc;
    Morphism E, R;
    {
        std::vector<std::vector<Tree>> by_root(cat.n_simples());
        for (const auto &t : enumerate_trees(cat, W))
            by_root[static_cast<std::size_t>(t.root(cat, W))].push_back(t);
        struct Piece {
            SimpleId root;
            IdempotentSplit sp;
            const std::vector<Tree> *basis;
        };
        std::vector<Piece> pieces;
        for (SimpleId r0 = 0; r0 < static_cast<SimpleId>(cat.n_simples());
             ++r0) {
            const auto &basis = by_root[static_cast<std::size_t>(r0)];
            if (basis.empty())
                continue;
            CMatrix blk(basis.size(), basis.size());
            for (std::size_t i = 0; i < basis.size(); ++i)
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    auto it = P.coeff.find(TreePair{basis[j], basis[i]});
                    if (it != P.coeff.end())
                        blk(i, j) = it->second;
                }
            IdempotentSplit sp = split_idempotent(blk, tol);
            if (sp.rank)
                pieces.push_back({r0, std::move(sp), &basis});
        }
        for (const auto &pc : pieces)
            for (std::size_t k = 0; k < pc.sp.rank; ++k)
                TXc.s.push_back(pc.root);
        E = morphism_zero(cat, Word::of({TXc}), W);
        R = morphism_zero(cat, W, Word::of({TXc}));
        std::size_t off = 0;
        for (const auto &pc : pieces) {
            for (std::size_t k = 0; k < pc.sp.rank; ++k) {
                Tree pickt;
                pickt.n = 1;
                pickt.pick = {static_cast<int>(off + k)};
                for (std::size_t i = 0; i < pc.basis->size(); ++i) {
                    E.add(pickt, (*pc.basis)[i], pc.sp.embed(i, k));
                    R.add((*pc.basis)[i], pickt, pc.sp.retract(k, i));
                }
            }
            off += pc.sp.rank;
        }
        E.prune(1e-14);
        R.prune(1e-14);
    }

    // actions of T^X
    out.T.cat = &cat;
    out.T.name = d.T.name + "^X";
    out.T.carrier = TXc;
    {
        // left B through X*
        Word w = Word::of({Bc, Xdc, Tc, Xc, Xc});
        Morphism act = padded(Xd.action(1).act, w, 0);
        Morphism l = compose(R, compose(act, tensor(morphism_identity(
                                                        cat, Word::of({Bc})),
                                                    E)));
        out.T.actions.push_back({Side::Left, mm.B.get(), l});
    }
    {
        // right B on the first X, the strand dives under the second X
        Word w = Word::of({Xdc, Tc, Xc, Xc, Bc});
        Morphism cr = braid(cat, w, 4, true); // X2 in front
        Word w2 = Word::of({Xdc, Tc, Xc, Bc, Xc});
        Morphism act = padded(X.action(1).act, w2, 2);
        Morphism r1 = compose(
            R, compose(act, compose(cr, tensor(E, morphism_identity(
                                                      cat, Word::of({Bc}))))));
        out.T.actions.push_back({Side::Right, mm.B.get(), r1});
    }
    {
        // right B on the second X
        Word w = Word::of({Xdc, Tc, Xc, Xc, Bc});
        Morphism act = padded(X.action(1).act, w, 3);
        Morphism r2 = compose(
            R, compose(act, tensor(E, morphism_identity(cat, Word::of({Bc})))));
        out.T.actions.push_back({Side::Right, mm.B.get(), r2});
    }

    // alpha^X and alphabar^X
    {
        const Word amb = W.concat(W); // (X*,T,X,X,X*,T,X,X)
        Morphism EE = tensor(E, E), RR = tensor(R, R);
        Morphism idX = morphism_identity(cat, Word::of({Xc}));
        Morphism idXd = morphism_identity(cat, Word::of({Xdc}));
        Morphism idT = morphism_identity(cat, Word::of({Tc}));
        (void)idX;
        (void)idXd;
        (void)idT;
        {
            // alpha^X
            Morphism s1 = braid(cat, amb, 7, false); // Xd over Xc
            Word w8 = amb;
            std::swap(w8.f[6], w8.f[7]);
            Morphism s2 = padded(tev(cat, Xc), w8, 3); // cap (Xb, X2*)
            Word w6 = Word::of({Xdc, Tc, Xc, Tc, Xc, Xc});
            Morphism s3 = braid(cat, w6, 3, false); // T2 over Xa
            Word w6b = Word::of({Xdc, Tc, Tc, Xc, Xc, Xc});
            Morphism s4 = padded(d.alpha, w6b, 1);
            Morphism s5 = braid(cat, w6b, 4, false); // Xd over Xa
            Morphism s6 = braid(cat, w6b, 3, false); // Xd over T-out2
            Word w6c = Word::of({Xdc, Tc, Xc, Tc, Xc, Xc});
            Morphism s7 = padded(coev(cat, Xc), w6c, 2);
            Word w8b = Word::of({Xdc, Tc, Xc, Xdc, Xc, Tc, Xc, Xc});
            Morphism s8 = braid(cat, w8b, 4, false); // Xd over new X*
            Morphism whole = compose(
                s8,
                compose(s7,
                        compose(s6, compose(s5, compose(s4, compose(s3,
                            compose(s2, s1)))))));
            out.alpha = compose(RR, compose(whole, EE));
        }
        {
            // alphabar^X
            Morphism s1 = braid(cat, amb, 4, true); // Xb over X2*
            Word w8 = amb;
            std::swap(w8.f[3], w8.f[4]);
            Morphism s2 = padded(tev(cat, Xc), w8, 2); // cap (Xa, X2*)
            Word w6 = Word::of({Xdc, Tc, Xc, Tc, Xc, Xc});
            Morphism s3 = braid(cat, w6, 3, true); // Xb over T2
            Word w6b = Word::of({Xdc, Tc, Tc, Xc, Xc, Xc});
            Morphism s4 = braid(cat, w6b, 4, true); // Xb over Xc
            Morphism s5 = padded(d.alphabar, w6b, 1);
            Morphism s6 = braid(cat, w6b, 3, true); // T-out2 over Xc
            Word w6d = Word::of({Xdc, Tc, Xc, Tc, Xc, Xc});
            Morphism s7 = padded(coev(cat, Xc), w6d, 3);
            Word w8b = Word::of({Xdc, Tc, Xc, Xc, Xdc, Tc, Xc, Xc});
            Morphism s8 = braid(cat, w8b, 7, true); // Xb over Xd
            Morphism whole = compose(
                s8,
                compose(s7,
                        compose(s6, compose(s5, compose(s4, compose(s3,
                            compose(s2, s1)))))));
            out.alphabar = compose(RR, compose(whole, EE));
        }
    }

    // (psi^X)^2: the X-loop with psi^2 induced through the left A-action,
    // closed onto the B-line through the right action
    {
        Morphism psi2 = compose(d.psi, d.psi);
        Morphism ins = induce_endo(X.action(0), Xc, psi2);
        Morphism px2 = wrap_right(B, Xc, X.action(1).act, ins);
        out.psi = morphism_endo_sqrt(px2);
    }
    out.phi_sq = d.phi_sq;
    out.phi = d.phi;
    return out;
}

// ---------------------------------------------------------------------------

VerificationReport check_T_compatible_iso(const OrbifoldDatum &d1,
                                          const OrbifoldDatum &d2,
                                          const Morphism &rho) {
    const CategoryData &cat = *d1.cat;
    const double tol = cat.tolerance * 100;
    VerificationReport rep;
    rep.name = "T_compatible_iso";

    rep.add("shared_A",
            d1.Ac() == d2.Ac()
                ? max_abs_diff(d1.alg->mu, d2.alg->mu)
                : 1.0,
            tol);
    rep.add("shared_psi", d1.Ac() == d2.Ac() ? max_abs_diff(d1.psi, d2.psi)
                                             : 1.0,
            tol);
    rep.add("shared_phi", std::abs(d1.phi_sq - d2.phi_sq), tol);

    bool invertible = true;
    // invertibility: per root block rank equals both dimensions
    {
        std::vector<std::vector<Tree>> src_by_root(cat.n_simples()),
            tgt_by_root(cat.n_simples());
        for (const auto &t : enumerate_trees(cat, rho.src))
            src_by_root[static_cast<std::size_t>(t.root(cat, rho.src))]
                .push_back(t);
        for (const auto &t : enumerate_trees(cat, rho.tgt))
            tgt_by_root[static_cast<std::size_t>(t.root(cat, rho.tgt))]
                .push_back(t);
        for (std::size_t r0 = 0; r0 < cat.n_simples(); ++r0) {
            const auto &sb = src_by_root[r0], &tb = tgt_by_root[r0];
            if (sb.size() != tb.size()) {
                invertible = false;
                continue;
            }
            if (sb.empty())
                continue;
            CMatrix m(tb.size(), sb.size());
            for (std::size_t i = 0; i < tb.size(); ++i)
                for (std::size_t j = 0; j < sb.size(); ++j) {
                    auto it = rho.coeff.find(TreePair{sb[j], tb[i]});
                    if (it != rho.coeff.end())
                        m(i, j) = it->second;
                }
            if (m.rank(tol) != sb.size())
                invertible = false;
        }
    }
    rep.add_flag("rho_invertible", invertible);

    // module map for the three actions
    for (std::size_t i = 0; i < 3; ++i) {
        const ModuleAction &a1 = d1.T.action(i);
        const ModuleAction &a2 = d2.T.action(i);
        Morphism lhs = compose(rho, a1.act);
        Morphism rhs;
        if (a1.side == Side::Left)
            rhs = compose(a2.act,
                          tensor(morphism_identity(cat, Word::of({d1.Ac()})),
                                 rho));
        else
            rhs = compose(a2.act,
                          tensor(rho, morphism_identity(
                                          cat, Word::of({d1.Ac()}))));
        rep.add("action" + std::to_string(i) + "_intertwined",
                max_abs_diff(lhs, rhs), tol);
    }

    // (rho (x) rho) alpha = alpha~ (rho (x) rho)
    Morphism rr = tensor(rho, rho);
    rep.add("T_iso_alpha",
            max_abs_diff(compose(rr, d1.alpha), compose(d2.alpha, rr)), tol);
    return rep;
}

std::optional<Morphism> find_T_compatible_iso(const OrbifoldDatum &d1,
                                              const OrbifoldDatum &d2) {
    const CategoryData &cat = *d1.cat;
    const double tol = cat.tolerance * 1000;
    const Word wT1 = d1.T.word(), wT2 = d2.T.word();

    // basis of Hom(T1, T2)
    std::vector<TreePair> basis;
    {
        std::vector<std::vector<Tree>> tgt_by_root(cat.n_simples());
        for (const auto &t : enumerate_trees(cat, wT2))
            tgt_by_root[static_cast<std::size_t>(t.root(cat, wT2))].push_back(t);
        for (const auto &s : enumerate_trees(cat, wT1))
            for (const auto &t :
                 tgt_by_root[static_cast<std::size_t>(s.root(cat, wT1))])
                basis.push_back({s, t});
    }
    if (basis.empty())
        return std::nullopt;
    auto as_morphism = [&](const std::vector<cplx> &c) {
        Morphism f = morphism_zero(cat, wT1, wT2);
        for (std::size_t i = 0; i < basis.size(); ++i)
            f.add(basis[i].src, basis[i].tgt, c[i]);
        f.prune(1e-14);
        return f;
    };

    // linear intertwiner space for the three actions
    std::vector<std::vector<cplx>> rows; // constraints (rows) x basis
    auto add_constraints = [&](std::size_t ai) {
        const ModuleAction &a1 = d1.T.action(ai);
        const ModuleAction &a2 = d2.T.action(ai);
        std::vector<TreePair> coords;
        {
            const Word src = a1.act.src;
            std::vector<std::vector<Tree>> tgt_by_root(cat.n_simples());
            for (const auto &t : enumerate_trees(cat, wT2))
                tgt_by_root[static_cast<std::size_t>(t.root(cat, wT2))]
                    .push_back(t);
            for (const auto &s : enumerate_trees(cat, src))
                for (const auto &t :
                     tgt_by_root[static_cast<std::size_t>(s.root(cat, src))])
                    coords.push_back({s, t});
        }
        for (std::size_t b = 0; b < basis.size(); ++b) {
            std::vector<cplx> e(basis.size(), cplx(0, 0));
            e[b] = 1.0;
            Morphism f = as_morphism(e);
            Morphism lhs = compose(f, a1.act);
            Morphism rhs;
            if (a1.side == Side::Left)
                rhs = compose(a2.act,
                              tensor(morphism_identity(cat,
                                                       Word::of({d1.Ac()})),
                                     f));
            else
                rhs = compose(a2.act,
                              tensor(f, morphism_identity(
                                            cat, Word::of({d1.Ac()}))));
            Morphism diff = lhs - rhs;
            if (rows.size() < coords.size() * (ai + 1))
                rows.resize(coords.size() * (ai + 1),
                            std::vector<cplx>(basis.size(), cplx(0, 0)));
            for (std::size_t c = 0; c < coords.size(); ++c) {
                auto it = diff.coeff.find(coords[c]);
                rows[coords.size() * ai + c][b] =
                    it == diff.coeff.end() ? cplx(0, 0) : it->second;
            }
        }
    };
    add_constraints(0);
    add_constraints(1);
    add_constraints(2);

    // kernel of the stacked system
    std::vector<std::vector<cplx>> kernel;
    {
        const std::size_t nr = rows.size(), nc = basis.size();
        CMatrix m(nr, nc);
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c)
                m(r, c) = rows[r][c];
        CMatrix a = m;
        std::vector<long> pivot_of_col(nc, -1);
        std::size_t rk = 0;
        for (std::size_t col = 0; col < nc && rk < nr; ++col) {
            std::size_t piv = rk;
            for (std::size_t r = rk + 1; r < nr; ++r)
                if (std::abs(a(r, col)) > std::abs(a(piv, col)))
                    piv = r;
            if (std::abs(a(piv, col)) <= tol * 1e-3)
                continue;
            for (std::size_t c = 0; c < nc; ++c)
                std::swap(a(piv, c), a(rk, c));
            const cplx dd = a(rk, col);
            for (std::size_t c = 0; c < nc; ++c)
                a(rk, c) /= dd;
            for (std::size_t r = 0; r < nr; ++r) {
                if (r == rk)
                    continue;
                const cplx fac = a(r, col);
                if (fac == cplx(0, 0))
                    continue;
                for (std::size_t c = 0; c < nc; ++c)
                    a(r, c) -= fac * a(rk, c);
            }
            pivot_of_col[col] = static_cast<long>(rk);
            ++rk;
        }
        for (std::size_t col = 0; col < nc; ++col) {
            if (pivot_of_col[col] >= 0)
                continue;
            std::vector<cplx> v(nc, cplx(0, 0));
            v[col] = 1.0;
            for (std::size_t c2 = 0; c2 < nc; ++c2)
                if (pivot_of_col[c2] >= 0)
                    v[c2] = -a(static_cast<std::size_t>(pivot_of_col[c2]), col);
            kernel.push_back(std::move(v));
        }
    }
    if (kernel.empty())
        return std::nullopt;

    // Gauss-Newton on the T-iso equation within the intertwiner space.
    // The residual is exactly bilinear in the coefficients,
    //   res(c) = sum_{ij} c_i c_j R_ij,
    // so the R_ij are assembled once and the iteration is pure linear
    // algebra afterwards.
    const std::size_t k = kernel.size();
    std::vector<Morphism> kmor;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<cplx> full(basis.size(), cplx(0, 0));
        for (std::size_t j = 0; j < basis.size(); ++j)
            full[j] = kernel[i][j];
        kmor.push_back(as_morphism(full));
    }
    std::vector<TreePair> coords;
    std::unordered_map<TreePair, std::size_t, TreePairHash> coord_of;
    std::vector<std::vector<Morphism>> bires(k, std::vector<Morphism>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Morphism rr = tensor(kmor[i], kmor[j]);
            bires[i][j] = compose(rr, d1.alpha) - compose(d2.alpha, rr);
            for (const auto &[kk, vv] : bires[i][j].coeff) {
                (void)vv;
                if (!coord_of.count(kk)) {
                    coord_of.emplace(kk, coords.size());
                    coords.push_back(kk);
                }
            }
        }
    const std::size_t nc = coords.size();
    std::vector<std::vector<std::vector<cplx>>> R(
        k, std::vector<std::vector<cplx>>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            R[i][j].assign(nc, cplx(0, 0));
            for (const auto &[kk, vv] : bires[i][j].coeff)
                R[i][j][coord_of.at(kk)] = vv;
        }

    auto build = [&](const std::vector<cplx> &c) {
        std::vector<cplx> full(basis.size(), cplx(0, 0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < basis.size(); ++j)
                full[j] += c[i] * kernel[i][j];
        return as_morphism(full);
    };
    auto eval_res = [&](const std::vector<cplx> &c) {
        std::vector<cplx> out(nc, cplx(0, 0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                const cplx w = c[i] * c[j];
                if (w == cplx(0, 0))
                    continue;
                for (std::size_t q = 0; q < nc; ++q)
                    out[q] += w * R[i][j][q];
            }
        return out;
    };

    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int attempt = 0; attempt < 12; ++attempt) {
        std::vector<cplx> c(k);
        for (auto &x : c)
            x = cplx(u(rng), u(rng));
        for (int it = 0; it < 80; ++it) {
            std::vector<cplx> res = eval_res(c);
            double rn = 0;
            for (const auto &v : res)
                rn = std::max(rn, std::abs(v));
            if (rn < tol * 1e-2 || nc == 0)
                break;
            // complex Jacobian columns: d res / d c_p = sum_j c_j (R_pj + R_jp)
            // treated over the reals to allow anti-holomorphic steps
            CMatrix J(2 * nc, 2 * k);
            for (std::size_t p = 0; p < k; ++p) {
                std::vector<cplx> col(nc, cplx(0, 0));
                for (std::size_t j = 0; j < k; ++j)
                    for (std::size_t q = 0; q < nc; ++q)
                        col[q] += c[j] * (R[p][j][q] + R[j][p][q]);
                for (std::size_t q = 0; q < nc; ++q) {
                    J(2 * q, 2 * p) = col[q].real();
                    J(2 * q + 1, 2 * p) = col[q].imag();
                    // d/d(i c_p): multiplies the column by i
                    J(2 * q, 2 * p + 1) = -col[q].imag();
                    J(2 * q + 1, 2 * p + 1) = col[q].real();
                }
            }
            std::vector<double> rv(2 * nc);
            for (std::size_t q = 0; q < nc; ++q) {
                rv[2 * q] = res[q].real();
                rv[2 * q + 1] = res[q].imag();
            }
            CMatrix Jt(2 * k, 2 * nc);
            for (std::size_t i2 = 0; i2 < 2 * nc; ++i2)
                for (std::size_t j2 = 0; j2 < 2 * k; ++j2)
                    Jt(j2, i2) = J(i2, j2);
            CMatrix JtJ = Jt * J;
            for (std::size_t i2 = 0; i2 < 2 * k; ++i2)
                JtJ(i2, i2) += 1e-9;
            CMatrix rhs(2 * k, 1);
            for (std::size_t i2 = 0; i2 < 2 * k; ++i2) {
                cplx s(0, 0);
                for (std::size_t j2 = 0; j2 < 2 * nc; ++j2)
                    s += Jt(i2, j2) * rv[j2];
                rhs(i2, 0) = -s;
            }
            CMatrix dc = JtJ.inverse(1e-14) * rhs;
            for (std::size_t i2 = 0; i2 < k; ++i2)
                c[i2] += cplx(dc(2 * i2, 0).real(), dc(2 * i2 + 1, 0).real());
        }
        Morphism f = build(c);
        if (max_abs(f) < 1e-6)
            continue;
        auto rep = check_T_compatible_iso(d1, d2, f);
        if (rep.passed())
            return f;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

MoritaModule reverse_morita(const OrbifoldDatum &transported,
                            const MoritaModule &mm,
                            std::shared_ptr<FrobeniusAlgebraData> original_A) {
    // X*: B-A-bimodule; as a Morita module for transporting back it is
    // a (B ~ new A)-(A ~ new B)-bimodule with [0] = left B, [1] = right A
    MoritaModule rev;
    ModuleData xd = module_dual(mm.X);
    rev.X.cat = xd.cat;
    rev.X.name = mm.X.name + "*";
    rev.X.carrier = xd.carrier;
    // xd.actions: [0] = Side::Right over A, [1] = Side::Left over B
    rev.X.actions.push_back(xd.actions[1]); // left B
    rev.X.actions.push_back(xd.actions[0]); // right A
    rev.X.actions[0].alg = transported.alg.get();
    rev.X.actions[1].alg = original_A.get();
    rev.B = original_A;
    return rev;
}

MoritaModule matrix_split_morita(const OrbifoldDatum &d,
                                 const std::vector<int> &block_sizes) {
    const CategoryData &cat = *d.cat;
    if (cat.n_simples() != 1)
        throw std::runtime_error("matrix_split_morita: needs the one-simple "
                                 "engine");
    const std::size_t nA = d.Ac().s.size();
    if (block_sizes.size() != nA)
        throw std::runtime_error("matrix_split_morita: one block size per "
                                 "summand of A");

    // B = (+)_i Mat_{n_i}, X = (+)_i k^{n_i} as an A-B-bimodule
    auto B = std::make_shared<FrobeniusAlgebraData>();
    B->cat = &cat;
    B->name = "B(matrix split)";
    std::vector<std::size_t> boff;
    std::size_t btot = 0;
    for (std::size_t i = 0; i < nA; ++i) {
        boff.push_back(btot);
        btot += static_cast<std::size_t>(block_sizes[i]) *
                static_cast<std::size_t>(block_sizes[i]);
    }
    B->carrier.s.assign(btot, cat.unit);
    const Word wB = Word::of({B->carrier});
    B->mu = morphism_zero(cat, Word::of({B->carrier, B->carrier}), wB);
    B->eta = morphism_zero(cat, Word{}, wB);
    B->delta = morphism_zero(cat, wB, Word::of({B->carrier, B->carrier}));
    B->eps = morphism_zero(cat, wB, Word{});
    Tree t0;
    t0.n = 0;
    auto p1 = [](int i) {
        Tree t;
        t.n = 1;
        t.pick = {i};
        return t;
    };
    auto p2 = [&cat](int i, int j) {
        Tree t;
        t.n = 2;
        t.pick = {i, j};
        t.out = {cat.unit};
        t.mult = {0};
        return t;
    };
    for (std::size_t blk = 0; blk < nA; ++blk) {
        const int n = block_sizes[blk];
        auto eid = [&](int i, int j) {
            return static_cast<int>(boff[blk]) + i * n + j;
        };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l)
                    B->mu.add(p2(eid(i, j), eid(j, l)), p1(eid(i, l)), 1.0);
        for (int i = 0; i < n; ++i)
            B->eta.add(t0, p1(eid(i, i)), 1.0);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                for (int j = 0; j < n; ++j)
                    B->delta.add(p1(eid(i, l)), p2(eid(i, j), eid(j, l)),
                                 1.0 / n);
        for (int i = 0; i < n; ++i)
            B->eps.add(p1(eid(i, i)), t0, static_cast<double>(n));
    }

    MoritaModule mm;
    mm.B = B;
    mm.X.cat = &cat;
    mm.X.name = "X(matrix split)";
    std::vector<std::size_t> xoff;
    std::size_t xtot = 0;
    for (std::size_t i = 0; i < nA; ++i) {
        xoff.push_back(xtot);
        xtot += static_cast<std::size_t>(block_sizes[i]);
    }
    mm.X.carrier.s.assign(xtot, cat.unit);
    // left A: the i-th summand of A acts as the identity on block i
    Morphism la = morphism_zero(cat, Word::of({d.Ac(), mm.X.carrier}),
                                mm.X.word());
    for (std::size_t blk = 0; blk < nA; ++blk)
        for (int v = 0; v < block_sizes[blk]; ++v)
            la.add(p2(static_cast<int>(blk),
                      static_cast<int>(xoff[blk]) + v),
                   p1(static_cast<int>(xoff[blk]) + v), 1.0);
    // right B: row vector times matrix per block
    Morphism rb = morphism_zero(cat, Word::of({mm.X.carrier, B->carrier}),
                                mm.X.word());
    for (std::size_t blk = 0; blk < nA; ++blk) {
        const int n = block_sizes[blk];
        auto eid = [&](int i, int j) {
            return static_cast<int>(boff[blk]) + i * n + j;
        };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                rb.add(p2(static_cast<int>(xoff[blk]) + i, eid(i, j)),
                       p1(static_cast<int>(xoff[blk]) + j), 1.0);
    }
    mm.X.actions.push_back({Side::Left, d.alg.get(), la});
    mm.X.actions.push_back({Side::Right, B.get(), rb});
    return mm;
}

} // namespace tqft
