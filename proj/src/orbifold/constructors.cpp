#include "catalog/builtin.hpp"
#include "orbifold/datum.hpp"

#include <cmath>

namespace tqft {

OrbifoldDatum from_commutative_frobenius(
    std::shared_ptr<FrobeniusAlgebraData> alg) {
    const CategoryData &cat = *alg->cat;
    auto rep = verify_frobenius(*alg);
    if (!rep.passed())
        throw std::runtime_error(
            "from_commutative_frobenius: algebra fails the Frobenius axioms");
    if (commutativity_residual(*alg) > cat.tolerance)
        throw std::runtime_error(
            "from_commutative_frobenius: algebra is not commutative");
    if (!cat.ribbon)
        throw std::runtime_error(
            "from_commutative_frobenius: category has no ribbon data");
    for (SimpleId u : alg->carrier.s)
        if (std::abs(cat.ribbon->twist[static_cast<std::size_t>(u)] -
                     cplx(1, 0)) > cat.tolerance)
            throw std::runtime_error(
                "from_commutative_frobenius: nontrivial twist on the carrier");

    OrbifoldDatum d;
    d.cat = &cat;
    d.alg = std::move(alg);
    d.name = "commutative:" + d.alg->name;
    d.T.cat = &cat;
    d.T.name = "T=" + d.alg->name;
    d.T.carrier = d.alg->carrier;
    d.T.actions.push_back({Side::Left, d.alg.get(), d.alg->mu});
    d.T.actions.push_back({Side::Right, d.alg.get(), d.alg->mu});
    d.T.actions.push_back({Side::Right, d.alg.get(), d.alg->mu});
    d.alpha = compose(d.alg->delta, d.alg->mu);
    d.alphabar = d.alpha;
    d.psi = morphism_identity(cat, d.alg->word());
    d.phi_sq = 1.0;
    d.phi = 1.0;
    return d;
}

SphericalDatum from_spherical_category(const CategoryData &S) {
    if (S.sqrt_dim.empty())
        throw std::runtime_error(
            "from_spherical_category: missing square roots of dimensions");
    for (std::size_t i = 0; i < S.n_simples(); ++i) {
        if (std::abs(S.sqrt_dim[i] * S.sqrt_dim[i] - S.dim[i]) > S.tolerance)
            throw std::runtime_error(
                "from_spherical_category: sqrt_dims inconsistent with dims");
    }

    SphericalDatum out;
    out.engine = std::make_shared<CategoryData>(builtin_vec());
    out.engine->name = "vec-engine(" + S.name + ")";
    out.engine->tolerance = S.tolerance;
    const CategoryData &E = *out.engine;
    const std::size_t nI = S.n_simples();

    // channels of T = (+) Hom_S(i (x) j, k)
    for (SimpleId i = 0; i < static_cast<SimpleId>(nI); ++i)
        for (SimpleId j = 0; j < static_cast<SimpleId>(nI); ++j)
            for (SimpleId k = 0; k < static_cast<SimpleId>(nI); ++k)
                for (int m = 0; m < S.N(i, j, k); ++m)
                    out.channels.push_back({i, j, k, m});
    const std::size_t nch = out.channels.size();

    OrbifoldDatum &d = out.datum;
    d.cat_owned = out.engine;
    d.cat = &E;
    d.name = "spherical:" + S.name;
    d.alg = std::make_shared<FrobeniusAlgebraData>(diagonal_algebra(E, nI));

    d.T.cat = &E;
    d.T.name = "T(" + S.name + ")";
    d.T.carrier.s.assign(nch, E.unit);

    auto pick1 = [](int i) {
        Tree t;
        t.n = 1;
        t.pick = {i};
        return t;
    };
    auto pick2 = [&E](int i, int j) {
        Tree t;
        t.n = 2;
        t.pick = {i, j};
        t.out = {E.unit};
        t.mult = {0};
        return t;
    };

    const Word wAT = Word::of({d.alg->carrier, d.T.carrier});
    const Word wTA = Word::of({d.T.carrier, d.alg->carrier});
    Morphism act0 = morphism_zero(E, wAT, d.T.word());
    Morphism act1 = morphism_zero(E, wTA, d.T.word());
    Morphism act2 = morphism_zero(E, wTA, d.T.word());
    for (std::size_t c = 0; c < nch; ++c) {
        const auto &ch = out.channels[c];
        act0.add(pick2(ch.k, static_cast<int>(c)), pick1(static_cast<int>(c)),
                 1.0);
        act1.add(pick2(static_cast<int>(c), ch.i), pick1(static_cast<int>(c)),
                 1.0);
        act2.add(pick2(static_cast<int>(c), ch.j), pick1(static_cast<int>(c)),
                 1.0);
    }
    d.T.actions.push_back({Side::Left, d.alg.get(), act0});
    d.T.actions.push_back({Side::Right, d.alg.get(), act1});
    d.T.actions.push_back({Side::Right, d.alg.get(), act2});

    // alpha / alphabar from the F data of S:
    //   alpha(lam (x) mu) = sum d_dp^{-1} F^{lam lam'}_{mu mu'} lam' (x) mu'
    // with lam: (a,c)->k, mu: (b,j)->c, lam': (dp,j)->k, mu': (a,b)->dp.
    const Word wTT = Word::of({d.T.carrier, d.T.carrier});
    d.alpha = morphism_zero(E, wTT, wTT);
    d.alphabar = morphism_zero(E, wTT, wTT);
    for (std::size_t c1 = 0; c1 < nch; ++c1)
        for (std::size_t c2 = 0; c2 < nch; ++c2) {
            const auto &lam = out.channels[c1];
            const auto &mu = out.channels[c2];
            // alpha source compatibility: lam = (a, cp, k), mu = (b, j, cp)
            if (lam.j == mu.k) {
                const SimpleId a = lam.i, b = mu.i, jj = mu.j, k = lam.k,
                               cp = lam.j;
                if (S.f_block_exists(a, b, jj, k)) {
                    const FBlock &blk = S.f_block(a, b, jj, k);
                    long rc = -1;
                    for (std::size_t r = 0; r < blk.right.size(); ++r)
                        if (blk.right[r] == FBlockIndex{cp, lam.mult, mu.mult}) {
                            rc = static_cast<long>(r);
                            break;
                        }
                    if (rc >= 0 && blk.invertible) {
                        for (std::size_t lc = 0; lc < blk.left.size(); ++lc) {
                            const cplx v =
                                blk.inv(static_cast<std::size_t>(rc), lc);
                            if (v == cplx(0, 0))
                                continue;
                            const SimpleId dp = blk.left[lc].mid;
                            const int m_mup = blk.left[lc].m1; // (a,b)->dp
                            const int m_lamp = blk.left[lc].m2; // (dp,j)->k
                            // find channel indices
                            for (std::size_t c3 = 0; c3 < nch; ++c3) {
                                const auto &lp = out.channels[c3];
                                if (!(lp.i == dp && lp.j == jj && lp.k == k &&
                                      lp.mult == m_lamp))
                                    continue;
                                for (std::size_t c4 = 0; c4 < nch; ++c4) {
                                    const auto &mp = out.channels[c4];
                                    if (!(mp.i == a && mp.j == b && mp.k == dp &&
                                          mp.mult == m_mup))
                                        continue;
                                    d.alpha.add(
                                        pick2(static_cast<int>(c1),
                                              static_cast<int>(c2)),
                                        pick2(static_cast<int>(c3),
                                              static_cast<int>(c4)),
                                        v / S.dim[static_cast<std::size_t>(dp)]);
                                }
                            }
                        }
                    }
                }
            }
            // alphabar source compatibility: lam' = (dp, j, k), mu' = (a, b, dp)
            if (lam.i == mu.k) {
                const auto &lamp = lam;
                const auto &mup = mu;
                const SimpleId a = mup.i, b = mup.j, jj = lamp.j, k = lamp.k,
                               dp = lamp.i;
                if (S.f_block_exists(a, b, jj, k)) {
                    const FBlock &blk = S.f_block(a, b, jj, k);
                    long lc = -1;
                    for (std::size_t r = 0; r < blk.left.size(); ++r)
                        if (blk.left[r] ==
                            FBlockIndex{dp, mup.mult, lamp.mult}) {
                            lc = static_cast<long>(r);
                            break;
                        }
                    if (lc >= 0) {
                        for (std::size_t rc = 0; rc < blk.right.size(); ++rc) {
                            const cplx v =
                                blk.coeff(static_cast<std::size_t>(lc), rc);
                            if (v == cplx(0, 0))
                                continue;
                            const SimpleId cp = blk.right[rc].mid;
                            const int m_lam2 = blk.right[rc].m1; // (a,cp)->k
                            const int m_mu2 = blk.right[rc].m2;  // (b,j)->cp
                            for (std::size_t c3 = 0; c3 < nch; ++c3) {
                                const auto &l2 = out.channels[c3];
                                if (!(l2.i == a && l2.j == cp && l2.k == k &&
                                      l2.mult == m_lam2))
                                    continue;
                                for (std::size_t c4 = 0; c4 < nch; ++c4) {
                                    const auto &m2 = out.channels[c4];
                                    if (!(m2.i == b && m2.j == jj &&
                                          m2.k == cp && m2.mult == m_mu2))
                                        continue;
                                    d.alphabar.add(
                                        pick2(static_cast<int>(c1),
                                              static_cast<int>(c2)),
                                        pick2(static_cast<int>(c3),
                                              static_cast<int>(c4)),
                                        v / S.dim[static_cast<std::size_t>(cp)]);
                                }
                            }
                        }
                    }
                }
            }
        }

    // psi = diag(sqrt d_i) on A, phi^2 = 1/dim S
    d.psi = morphism_zero(E, d.alg->word(), d.alg->word());
    for (std::size_t i = 0; i < nI; ++i) {
        if (std::abs(S.sqrt_dim[i]) < S.tolerance)
            throw std::runtime_error(
                "from_spherical_category: vanishing square root");
        d.psi.add(pick1(static_cast<int>(i)), pick1(static_cast<int>(i)),
                  S.sqrt_dim[i]);
    }
    d.phi_sq = cplx(1, 0) / S.global_dimension();
    d.phi = std::sqrt(d.phi_sq);
    return out;
}

} // namespace tqft
