#include <doctest.h>

#include "catalog/builtin.hpp"
#include "orbifold/datum.hpp"

using namespace tqft;

namespace {
std::shared_ptr<FrobeniusAlgebraData> z2_group_algebra(const CategoryData &cat) {
    auto a = std::make_shared<FrobeniusAlgebraData>();
    a->cat = &cat;
    a->name = "k[Z2]";
    a->carrier.s = {0, 1};
    const Word w1 = Word::of({a->carrier});
    const Word w2 = Word::of({a->carrier, a->carrier});
    a->mu = morphism_zero(cat, w2, w1);
    a->eta = morphism_zero(cat, Word{}, w1);
    a->delta = morphism_zero(cat, w1, w2);
    a->eps = morphism_zero(cat, w1, Word{});
    Tree t0; t0.n = 0;
    auto t1 = [](int i) { Tree t; t.n = 1; t.pick = {i}; return t; };
    auto t2 = [](int i, int j) {
        Tree t; t.n = 2; t.pick = {i, j};
        t.out = {static_cast<SimpleId>((i + j) % 2)}; t.mult = {0};
        return t;
    };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            a->mu.add(t2(i, j), t1((i + j) % 2), 1.0);
            a->delta.add(t1((i + j) % 2), t2(i, j), 0.5);
        }
    a->eta.add(t0, t1(0), 1.0);
    a->eps.add(t1(0), t0, 2.0);
    return a;
}
} // namespace

TEST_CASE("trivial commutative datum over the unit algebra") {
    static CategoryData vec = builtin_vec();
    auto alg = std::make_shared<FrobeniusAlgebraData>(trivial_algebra(vec));
    OrbifoldDatum d = from_commutative_frobenius(alg);
    auto rep = verify_orbifold_datum(d);
    for (const auto &c : rep.prechecks) { INFO("pre ", c.id, " ", c.residual); CHECK(c.pass); }
    for (const auto &c : rep.conditions) { INFO(c.id, " ", c.residual); CHECK(c.pass); }
}

TEST_CASE("commutative datum: 1(+)g in symmetric vec_Z2 passes all ten") {
    static CategoryData z2 = builtin_vec_group(2, 0);
    auto alg = z2_group_algebra(z2);
    OrbifoldDatum d = from_commutative_frobenius(alg);
    auto rep = verify_orbifold_datum(d);
    for (const auto &c : rep.prechecks) { INFO("pre ", c.id, " ", c.residual); CHECK(c.pass); }
    for (const auto &c : rep.conditions) { INFO(c.id, " ", c.residual); CHECK(c.pass); }
}

TEST_CASE("commutative constructor rejects bad input") {
    static CategoryData chi = builtin_vec_z2_chi();
    auto alg = z2_group_algebra(chi);
    // theta_g = -1 on the carrier: must be rejected
    CHECK_THROWS(from_commutative_frobenius(alg));
}

TEST_CASE("spherical datum over Vec") {
    static CategoryData vec = builtin_vec();
    SphericalDatum sd = from_spherical_category(vec);
    CHECK(sd.datum.Tc().s.size() == 1);
    CHECK(std::abs(sd.datum.phi_sq - cplx(1, 0)) < 1e-12);
    auto rep = verify_orbifold_datum(sd.datum);
    for (const auto &c : rep.prechecks) { INFO("pre ", c.id, " ", c.residual); CHECK(c.pass); }
    for (const auto &c : rep.conditions) { INFO(c.id, " ", c.residual); CHECK(c.pass); }
}

TEST_CASE("spherical datum over vec_Z2: dim T = 4, phi^2 = 1/2") {
    static CategoryData z2 = builtin_vec_group(2, 0);
    SphericalDatum sd = from_spherical_category(z2);
    CHECK(sd.datum.Tc().s.size() == 4);
    CHECK(std::abs(sd.datum.phi_sq - cplx(0.5, 0)) < 1e-12);
    auto rep = verify_orbifold_datum(sd.datum);
    for (const auto &c : rep.prechecks) { INFO("pre ", c.id, " ", c.residual); CHECK(c.pass); }
    for (const auto &c : rep.conditions) { INFO(c.id, " ", c.residual); CHECK(c.pass); }
}

TEST_CASE("spherical datum over Fibonacci: dim T = 5") {
    static CategoryData fib = builtin_fibonacci();
    SphericalDatum sd = from_spherical_category(fib);
    CHECK(sd.datum.Tc().s.size() == 5);
    auto rep = verify_orbifold_datum(sd.datum);
    for (const auto &c : rep.prechecks) { INFO("pre ", c.id, " ", c.residual); CHECK(c.pass); }
    for (const auto &c : rep.conditions) { INFO(c.id, " ", c.residual); CHECK(c.pass); }
}

TEST_CASE("sensitivity: scaled psi breaks O5, scaled alpha breaks O1-O4") {
    static CategoryData z2 = builtin_vec_group(2, 0);
    SphericalDatum sd = from_spherical_category(z2);
    {
        OrbifoldDatum bad = sd.datum;
        bad.psi = cplx(1.1, 0) * bad.psi;
        auto rep = verify_orbifold_datum(bad);
        CHECK(!rep.passed());
        double worst = 0;
        for (const auto &c : rep.conditions) worst = std::max(worst, c.residual);
        CHECK(worst > 1e-4);
    }
    {
        OrbifoldDatum bad = sd.datum;
        bad.alpha = cplx(1.01, 0) * bad.alpha;
        auto rep = verify_orbifold_datum(bad);
        CHECK(!rep.passed());
    }
    {
        OrbifoldDatum bad = sd.datum;
        bad.phi_sq *= 1.01;
        auto rep = verify_orbifold_datum(bad);
        CHECK(!rep.passed());
    }
    {
        // zeroing one alpha entry fails at least one of O1-O4
        OrbifoldDatum bad = sd.datum;
        bad.alpha.coeff.begin()->second = 0.0;
        auto rep = verify_orbifold_datum(bad);
        bool some_o14_failed = false;
        for (const auto &c : rep.conditions)
            if (c.id[1] != '5' && !c.pass)
                some_o14_failed = true;
        CHECK((some_o14_failed || !rep.prechecks_passed()));
    }
}

TEST_CASE("O5 scalar identity: sum d_i d_j N_ij^k = phi^{-2} d_k") {
    for (const auto &name : builtin_category_names()) {
        CategoryData S = builtin_category(name);
        INFO(name);
        const cplx gd = S.global_dimension();
        for (SimpleId k = 0; k < static_cast<SimpleId>(S.n_simples()); ++k) {
            cplx lhs(0, 0);
            for (SimpleId i = 0; i < static_cast<SimpleId>(S.n_simples()); ++i)
                for (SimpleId j = 0; j < static_cast<SimpleId>(S.n_simples()); ++j)
                    lhs += S.dim[i] * S.dim[j] *
                           static_cast<double>(S.N(i, j, k));
            CHECK(std::abs(lhs - gd * S.dim[k]) < 1e-10);
        }
    }
}

TEST_CASE("psi induction: squares act by dimensions on the channels") {
    static CategoryData fib = builtin_fibonacci();
    SphericalDatum sd = from_spherical_category(fib);
    Morphism p0sq = induce_psi(sd.datum, 0, sd.datum.T, 2);
    // block-diagonal: channel (i,j,k) gets d_k
    for (const auto &[key, v] : p0sq.coeff) {
        const auto &ch = sd.channels[static_cast<std::size_t>(key.src.pick[0])];
        CHECK(key.src == key.tgt);
        CHECK(std::abs(v - fib.dim[static_cast<std::size_t>(ch.k)]) < 1e-12);
    }
}

TEST_CASE("precheck failures are reported separately from conditions") {
    static CategoryData z2 = builtin_vec_group(2, 0);
    SphericalDatum sd = from_spherical_category(z2);
    OrbifoldDatum bad = sd.datum;
    // break the left action so T is no longer a module
    for (auto &[k, v] : bad.T.actions[0].act.coeff) {
        v *= 1.3;
        break;
    }
    auto rep = verify_orbifold_datum(bad);
    CHECK(!rep.prechecks_passed());
    CHECK(!rep.passed());
}

TEST_CASE("from_spherical_category requires square roots") {
    CategoryData fib = builtin_fibonacci();
    fib.sqrt_dim.clear();
    CHECK_THROWS(from_spherical_category(fib));
    CategoryData fib2 = builtin_fibonacci();
    fib2.sqrt_dim[1] = 0.0;
    CHECK_THROWS(from_spherical_category(fib2));
}

TEST_CASE("induce_psi rejects absent slots") {
    static CategoryData z2 = builtin_vec_group(2, 0);
    SphericalDatum sd = from_spherical_category(z2);
    CHECK_THROWS(induce_psi(sd.datum, 7, sd.datum.T, 2));
}
