#include "frobenius/frobenius.hpp"

#include <cmath>
#include <random>

namespace tqft {

namespace {
Morphism id_of(const CategoryData &cat, const Obj &x) {
    return morphism_identity(cat, Word::of({x}));
}
} // namespace

VerificationReport verify_frobenius(const FrobeniusAlgebraData &alg) {
    const CategoryData &cat = *alg.cat;
    const double tol = cat.tolerance;
    VerificationReport rep;
    rep.name = "frobenius:" + alg.name;
    const Obj &A = alg.carrier;
    const Word wA = Word::of({A});
    const Word wAA = Word::of({A, A});
    const Word wAAA = Word::of({A, A, A});
    Morphism idA = id_of(cat, A);

    rep.add("associativity",
            max_abs_diff(compose(alg.mu, padded(alg.mu, wAAA, 0)),
                         compose(alg.mu, padded(alg.mu, wAAA, 1))),
            tol);
    rep.add("unit_left",
            max_abs_diff(compose(alg.mu, tensor(alg.eta, idA)), idA), tol);
    rep.add("unit_right",
            max_abs_diff(compose(alg.mu, tensor(idA, alg.eta)), idA), tol);
    rep.add("coassociativity",
            max_abs_diff(compose(padded(alg.delta, wAA, 0), alg.delta),
                         compose(padded(alg.delta, wAA, 1), alg.delta)),
            tol);
    rep.add("counit_left",
            max_abs_diff(compose(tensor(alg.eps, idA), alg.delta), idA), tol);
    rep.add("counit_right",
            max_abs_diff(compose(tensor(idA, alg.eps), alg.delta), idA), tol);

    // Frobenius: (id (x) mu)(delta (x) id) = delta mu = (mu (x) id)(id (x) delta)
    Morphism mid = compose(alg.delta, alg.mu);
    rep.add("frobenius_left",
            max_abs_diff(compose(tensor(idA, alg.mu), padded(alg.delta, wAA, 0)),
                         mid),
            tol);
    rep.add("frobenius_right",
            max_abs_diff(compose(tensor(alg.mu, idA), padded(alg.delta, wAA, 1)),
                         mid),
            tol);

    // symmetry: the two bent copairings A -> A* agree
    Morphism pairing = compose(alg.eps, alg.mu);
    rep.add("symmetry",
            max_abs_diff(bend_right_up(pairing), bend_left_up(pairing)), tol);

    rep.add("delta_separability",
            max_abs_diff(compose(alg.mu, alg.delta), idA), tol);
    return rep;
}

double commutativity_residual(const FrobeniusAlgebraData &alg) {
    const CategoryData &cat = *alg.cat;
    const Word wAA = Word::of({alg.carrier, alg.carrier});
    return max_abs_diff(compose(alg.mu, braid(cat, wAA, 1, true)), alg.mu);
}

VerificationReport verify_module(const ModuleData &m) {
    const CategoryData &cat = *m.cat;
    const double tol = cat.tolerance;
    VerificationReport rep;
    rep.name = "module:" + m.name;
    const Obj &M = m.carrier;
    Morphism idM = id_of(cat, M);
    for (std::size_t i = 0; i < m.actions.size(); ++i) {
        const ModuleAction &a = m.actions[i];
        const Obj &A = a.alg->carrier;
        Morphism idA = id_of(cat, A);
        const std::string tag = "action" + std::to_string(i);
        if (a.side == Side::Right) {
            rep.add(tag + "_unital",
                    max_abs_diff(compose(a.act, tensor(idM, a.alg->eta)), idM),
                    tol);
            const Word w = Word::of({M, A, A});
            rep.add(tag + "_associative",
                    max_abs_diff(compose(a.act, padded(a.act, w, 0)),
                                 compose(a.act, padded(a.alg->mu, w, 1))),
                    tol);
        } else {
            rep.add(tag + "_unital",
                    max_abs_diff(compose(a.act, tensor(a.alg->eta, idM)), idM),
                    tol);
            const Word w = Word::of({A, A, M});
            rep.add(tag + "_associative",
                    max_abs_diff(compose(a.act, padded(a.act, w, 1)),
                                 compose(a.act, padded(a.alg->mu, w, 0))),
                    tol);
        }
    }
    // pairwise commutation (right-right pairs in the A1A2 pattern; a left
    // action always commutes with a right one on the nose)
    for (std::size_t i = 0; i < m.actions.size(); ++i)
        for (std::size_t j = i + 1; j < m.actions.size(); ++j) {
            const ModuleAction &a = m.actions[i], &b = m.actions[j];
            const std::string tag =
                "commute_" + std::to_string(i) + "_" + std::to_string(j);
            if (a.side == Side::Right && b.side == Side::Right) {
                const Obj &A = a.alg->carrier, &B = b.alg->carrier;
                const Word w = Word::of({M, A, B});
                // act with b then a, algebra strands uncrossed
                Morphism lhs = compose(a.act, padded(b.act, w, 0));
                // act with a then b, the B strand crossing under A
                Morphism cr = braid(cat, w, 2, true); // (M,A,B)->(M,B,A)
                Word w2 = w;
                std::swap(w2.f[1], w2.f[2]);
                Morphism rhs =
                    compose(b.act, compose(padded(a.act, w2, 0), cr));
                rep.add(tag, max_abs_diff(lhs, rhs), tol);
            } else if (a.side != b.side) {
                const ModuleAction &l = a.side == Side::Left ? a : b;
                const ModuleAction &r = a.side == Side::Left ? b : a;
                const Obj &L = l.alg->carrier, &R = r.alg->carrier;
                const Word w = Word::of({L, M, R});
                Morphism lhs = compose(l.act, padded(r.act, w, 1));
                Morphism rhs = compose(r.act, padded(l.act, w, 0));
                rep.add(tag, max_abs_diff(lhs, rhs), tol);
            }
        }
    return rep;
}

// ---------------------------------------------------------------------------

FrobeniusAlgebraData trivial_algebra(const CategoryData &cat) {
    FrobeniusAlgebraData a;
    a.cat = &cat;
    a.name = "unit";
    a.carrier = Obj::simple(cat.unit);
    const Word w1 = Word::of({a.carrier});
    const Word w2 = Word::of({a.carrier, a.carrier});
    a.mu = morphism_zero(cat, w2, w1);
    a.eta = morphism_zero(cat, Word{}, w1);
    a.delta = morphism_zero(cat, w1, w2);
    a.eps = morphism_zero(cat, w1, Word{});
    Tree t1;
    t1.n = 1;
    t1.pick = {0};
    Tree t2;
    t2.n = 2;
    t2.pick = {0, 0};
    t2.out = {cat.unit};
    t2.mult = {0};
    Tree t0;
    t0.n = 0;
    a.mu.add(t2, t1, 1.0);
    a.eta.add(t0, t1, 1.0);
    a.delta.add(t1, t2, 1.0);
    a.eps.add(t1, t0, 1.0);
    return a;
}

FrobeniusAlgebraData diagonal_algebra(const CategoryData &vec_engine,
                                      std::size_t n) {
    if (vec_engine.n_simples() != 1)
        throw std::runtime_error("diagonal_algebra: needs the one-simple engine");
    const CategoryData &cat = vec_engine;
    FrobeniusAlgebraData a;
    a.cat = &cat;
    a.name = "diag" + std::to_string(n);
    a.carrier.s.assign(n, cat.unit);
    const Word w1 = Word::of({a.carrier});
    const Word w2 = Word::of({a.carrier, a.carrier});
    a.mu = morphism_zero(cat, w2, w1);
    a.eta = morphism_zero(cat, Word{}, w1);
    a.delta = morphism_zero(cat, w1, w2);
    a.eps = morphism_zero(cat, w1, Word{});
    Tree t0;
    t0.n = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Tree ti;
        ti.n = 1;
        ti.pick = {static_cast<int>(i)};
        Tree tii;
        tii.n = 2;
        tii.pick = {static_cast<int>(i), static_cast<int>(i)};
        tii.out = {cat.unit};
        tii.mult = {0};
        a.mu.add(tii, ti, 1.0);
        a.eta.add(t0, ti, 1.0);
        a.delta.add(ti, tii, 1.0);
        a.eps.add(ti, t0, 1.0);
    }
    return a;
}

ModuleData regular_bimodule(const FrobeniusAlgebraData &alg) {
    ModuleData m;
    m.cat = alg.cat;
    m.name = alg.name;
    m.carrier = alg.carrier;
    m.actions.push_back({Side::Left, &alg, alg.mu});
    m.actions.push_back({Side::Right, &alg, alg.mu});
    return m;
}

// ---------------------------------------------------------------------------
// product actions (eq. braided tensor-product module conventions)

Morphism product_action_right_first(const ModuleData &m, std::size_t im,
                                    const ModuleData &n, bool reverse) {
    const CategoryData &cat = *m.cat;
    const ModuleAction &a = m.action(im);
    if (a.side != Side::Right)
        throw std::runtime_error("product_action_right_first: needs right action");
    const Obj &A = a.alg->carrier;
    const Word w = Word::of({m.carrier, n.carrier, A});
    // the A strand dives under (or, reversed, over) the N strand
    Morphism cr = braid(cat, w, 2, reverse ? false : true);
    Word w2 = w;
    std::swap(w2.f[1], w2.f[2]);
    Morphism act = padded(a.act, w2, 0); // (M,A,N) -> (M,N)
    return compose(act, cr);
}

Morphism product_action_right_second(const ModuleData &m, const ModuleData &n,
                                     std::size_t in) {
    const ModuleAction &b = n.action(in);
    if (b.side != Side::Right)
        throw std::runtime_error("product_action_right_second: needs right action");
    const Obj &B = b.alg->carrier;
    const Word w = Word::of({m.carrier, n.carrier, B});
    return padded(b.act, w, 1);
}

Morphism product_action_left_first(const ModuleData &m, std::size_t im,
                                   const ModuleData &n) {
    const ModuleAction &a = m.action(im);
    if (a.side != Side::Left)
        throw std::runtime_error("product_action_left_first: needs left action");
    const Obj &A = a.alg->carrier;
    const Word w = Word::of({A, m.carrier, n.carrier});
    return padded(a.act, w, 0);
}

Morphism product_action_left_second(const ModuleData &m, const ModuleData &n,
                                    std::size_t in, bool reverse) {
    const CategoryData &cat = *m.cat;
    const ModuleAction &b = n.action(in);
    if (b.side != Side::Left)
        throw std::runtime_error("product_action_left_second: needs left action");
    const Obj &B = b.alg->carrier;
    const Word w = Word::of({B, m.carrier, n.carrier});
    // mirror of the right convention: the B strand passes under M
    Morphism cr = braid(cat, w, 1, reverse ? true : false); // (B,M,..)->(M,B,..)
    Word w2 = w;
    std::swap(w2.f[0], w2.f[1]);
    Morphism act = padded(b.act, w2, 1);
    return compose(act, cr);
}

// ---------------------------------------------------------------------------
// relative tensor product

Morphism relative_projector(const ModuleData &m, std::size_t im,
                            const ModuleData &n, std::size_t in) {
    const ModuleAction &rho = m.action(im);
    const ModuleAction &lam = n.action(in);
    if (rho.side != Side::Right || lam.side != Side::Left)
        throw std::runtime_error("relative_projector: need (right,left) actions");
    const FrobeniusAlgebraData &A = *rho.alg;
    const Word w = Word::of({m.carrier, n.carrier});
    Morphism de = compose(A.delta, A.eta); // () -> (A,A)
    Morphism ins = padded(de, w, 1);       // (M,N) -> (M,A,A,N)
    Morphism both = tensor(rho.act, lam.act);
    return compose(both, ins);
}

RelativeTensor relative_tensor(const ModuleData &m, std::size_t im,
                               const ModuleData &n, std::size_t in) {
    const CategoryData &cat = *m.cat;
    Morphism p = relative_projector(m, im, n, in);
    const Word w = p.src;
    const double tol = cat.tolerance * 100;

    // split per root block
    RelativeTensor out;
    out.proj = p;
    out.embed = morphism_zero(cat, Word{}, w);   // placeholder words
    out.retract = morphism_zero(cat, w, Word{}); // fixed below
    std::vector<Tree> trees = enumerate_trees(cat, w);
    std::vector<std::vector<Tree>> by_root(cat.n_simples());
    for (const auto &t : trees)
        by_root[static_cast<std::size_t>(t.root(cat, w))].push_back(t);

    struct Piece {
        SimpleId root;
        IdempotentSplit split;
        std::vector<Tree> basis;
    };
    std::vector<Piece> pieces;
    for (SimpleId r = 0; r < static_cast<SimpleId>(cat.n_simples()); ++r) {
        const auto &basis = by_root[static_cast<std::size_t>(r)];
        if (basis.empty())
            continue;
        CMatrix block(basis.size(), basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t jj = 0; jj < basis.size(); ++jj) {
                auto it = p.coeff.find(TreePair{basis[jj], basis[i]});
                if (it != p.coeff.end())
                    block(i, jj) = it->second;
            }
        IdempotentSplit sp = split_idempotent(block, tol);
        if (sp.rank == 0)
            continue;
        pieces.push_back({r, std::move(sp), basis});
    }
    for (const auto &pc : pieces)
        for (std::size_t k = 0; k < pc.split.rank; ++k)
            out.image.s.push_back(pc.root);

    out.embed = morphism_zero(cat, Word::of({out.image}), w);
    out.retract = morphism_zero(cat, w, Word::of({out.image}));
    std::size_t offset = 0;
    for (const auto &pc : pieces) {
        for (std::size_t k = 0; k < pc.split.rank; ++k) {
            Tree pickt;
            pickt.n = 1;
            pickt.pick = {static_cast<int>(offset + k)};
            for (std::size_t i = 0; i < pc.basis.size(); ++i) {
                out.embed.add(pickt, pc.basis[i], pc.split.embed(i, k));
                out.retract.add(pc.basis[i], pickt, pc.split.retract(k, i));
            }
        }
        offset += pc.split.rank;
    }
    out.embed.prune(1e-14);
    out.retract.prune(1e-14);
    return out;
}

// ---------------------------------------------------------------------------
// duals

Morphism dual_action_of_right(const CategoryData &cat, const Obj &m,
                              const Morphism &rho) {
    // (A, M*) -> (M*):   tcoev on the left, act, close with tev
    const Obj md = dual_obj(cat, m);
    const Obj &A = rho.src.f[1];
    const Word src = Word::of({A, md});
    Morphism s1 = tensor(tcoev(cat, m), morphism_identity(cat, src));
    // (M*, M, A, M*): act on (M,A)
    Word w = Word::of({md, m, A, md});
    Morphism s2 = padded(rho, w, 1);
    // (M*, M, M*): close (M, M*) with tev
    Word w2 = Word::of({md, m, md});
    Morphism s3 = tensor(tensor(morphism_identity(cat, Word::of({md})),
                                tev(cat, m)),
                         morphism_identity(cat, Word{}));
    (void)w2;
    return compose(s3, compose(s2, s1));
}

Morphism dual_action_of_left(const CategoryData &cat, const Obj &m,
                             const Morphism &lam) {
    // (M*, A) -> (M*):   coev on the right, act, close with ev
    const Obj md = dual_obj(cat, m);
    const Obj &A = lam.src.f[0];
    const Word src = Word::of({md, A});
    Morphism s1 = tensor(morphism_identity(cat, src), coev(cat, m));
    // (M*, A, M, M*): act on (A,M)
    Word w = Word::of({md, A, m, md});
    Morphism s2 = padded(lam, w, 1);
    // (M*, M, M*): close (M*, M) with ev
    Morphism s3 = tensor(ev(cat, m), morphism_identity(cat, Word::of({md})));
    return compose(s3, compose(s2, s1));
}

ModuleData module_dual(const ModuleData &m) {
    const CategoryData &cat = *m.cat;
    ModuleData d;
    d.cat = &cat;
    d.name = m.name + "*";
    d.carrier = dual_obj(cat, m.carrier);
    for (const auto &a : m.actions) {
        if (a.side == Side::Right)
            d.actions.push_back(
                {Side::Left, a.alg, dual_action_of_right(cat, m.carrier, a.act)});
        else
            d.actions.push_back(
                {Side::Right, a.alg, dual_action_of_left(cat, m.carrier, a.act)});
    }
    return d;
}

// ---------------------------------------------------------------------------

Morphism induce_endo(const ModuleAction &a, const Obj &carrier,
                     const Morphism &psi) {
    const CategoryData &cat = *psi.cat;
    Morphism pe = compose(psi, a.alg->eta); // () -> (A)
    Morphism idM = morphism_identity(cat, Word::of({carrier}));
    if (a.side == Side::Right)
        return compose(a.act, tensor(idM, pe));
    return compose(a.act, tensor(pe, idM));
}

Morphism wrap_right(const FrobeniusAlgebraData &alg, const Obj &m,
                    const Morphism &rho, const std::optional<Morphism> &insert) {
    const CategoryData &cat = *alg.cat;
    const Obj md = dual_obj(cat, m);
    // A ->Delta (A,A) -> (M*,M,A,A) -> act/insert -> (M*,M,A) -> (A)
    Morphism s1 = alg.delta;
    Morphism s2 = tensor(tcoev(cat, m),
                         morphism_identity(cat, Word::of({alg.carrier,
                                                          alg.carrier})));
    Word w = Word::of({md, m, alg.carrier, alg.carrier});
    Morphism body = rho;
    if (insert) {
        Word wm = Word::of({m, alg.carrier});
        body = compose(rho, padded(*insert, wm, 0));
    }
    Morphism s3 = padded(body, w, 1);
    Morphism s4 = tensor(ev(cat, m),
                         morphism_identity(cat, Word::of({alg.carrier})));
    return compose(s4, compose(s3, compose(s2, s1)));
}

Morphism wrap_left(const FrobeniusAlgebraData &alg, const Obj &m,
                   const Morphism &lam, const std::optional<Morphism> &insert) {
    const CategoryData &cat = *alg.cat;
    const Obj md = dual_obj(cat, m);
    // A ->Delta (A,A) -> (A, M, M*, A): left output acts on the ascending M
    Morphism s1 = alg.delta;
    Morphism s2 = tensor(tensor(morphism_identity(cat, Word::of({alg.carrier})),
                                coev(cat, m)),
                         morphism_identity(cat, Word::of({alg.carrier})));
    Word w = Word::of({alg.carrier, m, md, alg.carrier});
    Morphism body = lam;
    if (insert) {
        Word wm = Word::of({alg.carrier, m});
        body = compose(lam, padded(*insert, wm, 1));
    }
    Morphism s3 = padded(body, w, 0);
    // (M, M*, A) -> (A)
    Morphism s4 = tensor(tev(cat, m),
                         morphism_identity(cat, Word::of({alg.carrier})));
    return compose(s4, compose(s3, compose(s2, s1)));
}

// ---------------------------------------------------------------------------
// the center of A and its simple summands

std::vector<AlgebraSummand> morita_decompose(const FrobeniusAlgebraData &alg) {
    const CategoryData &cat = *alg.cat;
    const double tol = cat.tolerance * 100;
    const Obj &A = alg.carrier;
    const Word wA = Word::of({A});
    const Word wAA = Word::of({A, A});

    // basis of End(A)
    std::vector<TreePair> basis;
    {
        std::vector<std::vector<Tree>> by_root(cat.n_simples());
        for (const auto &t : enumerate_trees(cat, wA))
            by_root[static_cast<std::size_t>(t.root(cat, wA))].push_back(t);
        for (const auto &v : by_root)
            for (const auto &s : v)
                for (const auto &t : v)
                    basis.push_back({s, t});
    }
    auto as_morphism = [&](const std::vector<cplx> &coef) {
        Morphism f = morphism_zero(cat, wA, wA);
        for (std::size_t i = 0; i < basis.size(); ++i)
            f.add(basis[i].src, basis[i].tgt, coef[i]);
        return f;
    };
    auto flatten = [&](const Morphism &f) {
        std::vector<cplx> v(basis.size(), cplx(0, 0));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            auto it = f.coeff.find(basis[i]);
            if (it != f.coeff.end())
                v[i] = it->second;
        }
        return v;
    };

    // bimodule-endomorphism conditions: f mu = mu (f (x) id) = mu (id (x) f)
    // solved as the kernel of the stacked linear map
    const std::size_t nb = basis.size();
    std::vector<TreePair> coords; // enumeration of Hom((A,A) -> (A)) slots
    {
        std::vector<std::vector<Tree>> tgt_by_root(cat.n_simples());
        for (const auto &t : enumerate_trees(cat, wA))
            tgt_by_root[static_cast<std::size_t>(t.root(cat, wA))].push_back(t);
        for (const auto &s : enumerate_trees(cat, wAA))
            for (const auto &t :
                 tgt_by_root[static_cast<std::size_t>(s.root(cat, wAA))])
                coords.push_back({s, t});
    }
    std::vector<std::vector<cplx>> rows;
    for (std::size_t i = 0; i < nb; ++i) {
        std::vector<cplx> e(nb, cplx(0, 0));
        e[i] = 1.0;
        Morphism f = as_morphism(e);
        Morphism c0 = compose(f, alg.mu);
        Morphism c1 = compose(alg.mu, padded(f, wAA, 0));
        Morphism c2 = compose(alg.mu, padded(f, wAA, 1));
        // residual images in the End((A,A)->(A)) coordinate space
        Morphism r1 = c1 - c0, r2 = c2 - c0;
        std::vector<cplx> row;
        auto push_all = [&](const Morphism &m) {
            for (const auto &cpair : coords) {
                auto it = m.coeff.find(cpair);
                row.push_back(it == m.coeff.end() ? cplx(0, 0) : it->second);
            }
        };
        push_all(r1);
        push_all(r2);
        rows.push_back(std::move(row));
    }
    // kernel of the (nb x big) system: gaussian elimination on the transpose
    const std::size_t big = rows.empty() ? 0 : rows[0].size();
    CMatrix Mx(big, nb);
    for (std::size_t c = 0; c < nb; ++c)
        for (std::size_t r = 0; r < big; ++r)
            Mx(r, c) = rows[c][r];
    // find kernel basis by row reduction
    std::vector<std::vector<cplx>> kernel;
    {
        CMatrix a = Mx;
        std::vector<long> pivot_of_col(nb, -1);
        std::size_t rk = 0;
        for (std::size_t col = 0; col < nb && rk < big; ++col) {
            std::size_t piv = rk;
            for (std::size_t r = rk + 1; r < big; ++r)
                if (std::abs(a(r, col)) > std::abs(a(piv, col)))
                    piv = r;
            if (std::abs(a(piv, col)) <= tol)
                continue;
            for (std::size_t c = 0; c < nb; ++c)
                std::swap(a(piv, c), a(rk, c));
            const cplx d = a(rk, col);
            for (std::size_t c = 0; c < nb; ++c)
                a(rk, c) /= d;
            for (std::size_t r = 0; r < big; ++r) {
                if (r == rk)
                    continue;
                const cplx f = a(r, col);
                if (f == cplx(0, 0))
                    continue;
                for (std::size_t c = 0; c < nb; ++c)
                    a(r, c) -= f * a(rk, c);
            }
            pivot_of_col[col] = static_cast<long>(rk);
            ++rk;
        }
        for (std::size_t col = 0; col < nb; ++col) {
            if (pivot_of_col[col] >= 0)
                continue;
            std::vector<cplx> v(nb, cplx(0, 0));
            v[col] = 1.0;
            for (std::size_t c2 = 0; c2 < nb; ++c2)
                if (pivot_of_col[c2] >= 0)
                    v[c2] = -a(static_cast<std::size_t>(pivot_of_col[c2]), col);
            kernel.push_back(std::move(v));
        }
    }
    if (kernel.empty())
        throw std::runtime_error("morita_decompose: empty center");

    // multiplication operator by a generic central element, restricted to
    // the center; its spectral idempotents are the central projections.
    const std::size_t nz = kernel.size();
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> u(0.25, 1.0);
    std::vector<cplx> genc(nz);
    for (auto &x : genc)
        x = cplx(u(rng), u(rng));
    Morphism zeta = morphism_zero(cat, wA, wA);
    for (std::size_t i = 0; i < nz; ++i)
        zeta = zeta + genc[i] * as_morphism(kernel[i]);

    // matrix of f -> zeta o f on the center, in the kernel basis: solve
    // each product back into kernel coordinates via least squares on the
    // flattened coefficients.
    CMatrix K(nb, nz);
    for (std::size_t j = 0; j < nz; ++j)
        for (std::size_t i = 0; i < nb; ++i)
            K(i, j) = kernel[j][i];
    CMatrix Kh(nz, nb);
    for (std::size_t j = 0; j < nz; ++j)
        for (std::size_t i = 0; i < nb; ++i)
            Kh(j, i) = std::conj(K(i, j));
    CMatrix gram_inv = (Kh * K).inverse();
    auto to_center_coords = [&](const Morphism &f) {
        std::vector<cplx> flat = flatten(f);
        CMatrix v(nb, 1);
        for (std::size_t i = 0; i < nb; ++i)
            v(i, 0) = flat[i];
        CMatrix c = gram_inv * (Kh * v);
        std::vector<cplx> out(nz);
        for (std::size_t i = 0; i < nz; ++i)
            out[i] = c(i, 0);
        return out;
    };
    CMatrix mult(nz, nz);
    for (std::size_t j = 0; j < nz; ++j) {
        Morphism prod = compose(zeta, as_morphism(kernel[j]));
        auto cc = to_center_coords(prod);
        for (std::size_t i = 0; i < nz; ++i)
            mult(i, j) = cc[i];
    }
    std::vector<cplx> eigs = eigenvalues_small(mult, 1e-12);
    // cluster eigenvalues
    std::vector<cplx> distinct;
    for (const auto &e : eigs) {
        bool found = false;
        for (const auto &d : distinct)
            if (std::abs(d - e) < 1e-6)
                found = true;
        if (!found)
            distinct.push_back(e);
    }
    // Lagrange projectors P_i = prod_{j != i} (mult - e_j) / (e_i - e_j)
    std::vector<AlgebraSummand> out;
    for (const auto &ei : distinct) {
        CMatrix P = CMatrix::identity(nz);
        for (const auto &ej : distinct) {
            if (std::abs(ei - ej) < 1e-9)
                continue;
            CMatrix shift = mult;
            for (std::size_t d = 0; d < nz; ++d)
                shift(d, d) -= ej;
            P = P * shift.scaled(cplx(1, 0) / (ei - ej));
        }
        // central idempotent: P applied to id_A in center coordinates
        Morphism e = morphism_zero(cat, wA, wA);
        auto idc = to_center_coords(morphism_identity(cat, wA));
        CMatrix v(nz, 1);
        for (std::size_t i = 0; i < nz; ++i)
            v(i, 0) = idc[i];
        CMatrix pc = P * v;
        for (std::size_t i = 0; i < nz; ++i)
            e = e + pc(i, 0) * as_morphism(kernel[i]);
        e.prune(1e-12);
        // split the idempotent and build the summand algebra
        std::vector<std::vector<Tree>> by_root(cat.n_simples());
        for (const auto &t : enumerate_trees(cat, wA))
            by_root[static_cast<std::size_t>(t.root(cat, wA))].push_back(t);
        AlgebraSummand sm;
        Morphism emb = morphism_zero(cat, Word{}, wA);
        Morphism ret = morphism_zero(cat, wA, Word{});
        Obj img;
        std::vector<std::pair<SimpleId, IdempotentSplit>> splits;
        for (SimpleId r0 = 0; r0 < static_cast<SimpleId>(cat.n_simples());
             ++r0) {
            const auto &bs = by_root[static_cast<std::size_t>(r0)];
            if (bs.empty())
                continue;
            CMatrix block(bs.size(), bs.size());
            for (std::size_t i = 0; i < bs.size(); ++i)
                for (std::size_t jj = 0; jj < bs.size(); ++jj) {
                    auto it = e.coeff.find(TreePair{bs[jj], bs[i]});
                    if (it != e.coeff.end())
                        block(i, jj) = it->second;
                }
            IdempotentSplit sp = split_idempotent(block, tol);
            if (sp.rank == 0)
                continue;
            splits.push_back({r0, std::move(sp)});
        }
        for (const auto &[r0, sp] : splits)
            for (std::size_t k = 0; k < sp.rank; ++k)
                img.s.push_back(r0);
        emb = morphism_zero(cat, Word::of({img}), wA);
        ret = morphism_zero(cat, wA, Word::of({img}));
        std::size_t off = 0;
        for (const auto &[r0, sp] : splits) {
            const auto &bs = by_root[static_cast<std::size_t>(r0)];
            for (std::size_t k = 0; k < sp.rank; ++k) {
                Tree pickt;
                pickt.n = 1;
                pickt.pick = {static_cast<int>(off + k)};
                for (std::size_t i = 0; i < bs.size(); ++i) {
                    emb.add(pickt, bs[i], sp.embed(i, k));
                    ret.add(bs[i], pickt, sp.retract(k, i));
                }
            }
            off += sp.rank;
        }
        emb.prune(1e-14);
        ret.prune(1e-14);

        FrobeniusAlgebraData ai;
        ai.cat = &cat;
        ai.name = alg.name + "_summand";
        ai.carrier = img;
        ai.mu = compose(ret, compose(alg.mu, tensor(emb, emb)));
        ai.eta = compose(ret, compose(e, alg.eta));
        ai.delta = compose(tensor(ret, ret), compose(alg.delta, emb));
        ai.eps = compose(alg.eps, emb);
        sm.algebra = ai;
        sm.embed = emb;
        sm.retract = ret;
        sm.dimension = trace(compose(emb, ret));
        out.push_back(std::move(sm));
    }
    return out;
}

} // namespace tqft
