#include <doctest.h>

#include "catalog/builtin.hpp"
#include "catalog/triangulations.hpp"
#include "statesum/statesum.hpp"

using namespace tqft;

TEST_CASE("dual polyhedron wiring exists for all builtin triangulations") {
    for (const auto &name : builtin_triangulation_names()) {
        INFO(name);
        Triangulation t = builtin_triangulation(name);
        CHECK_NOTHROW(dual_polyhedron(t));
    }
}

TEST_CASE("TV of S3 is 1/dim for all catalog categories, both triangulations") {
    Triangulation s5 = boundary_of_4_simplex();
    Triangulation s2 = two_tet_sphere();
    for (const auto &name : builtin_category_names()) {
        CategoryData S = builtin_category(name);
        INFO(name);
        const cplx want = cplx(1, 0) / S.global_dimension();
        const cplx v5 = tv_invariant(S, s5);
        const cplx v2 = tv_invariant(S, s2);
        INFO("v5 = ", v5.real(), "+", v5.imag(), "i, want ", want.real());
        CHECK(std::abs(v5 - want) < 1e-8);
        CHECK(std::abs(v2 - want) < 1e-8);
    }
}

TEST_CASE("TV of S2xS1 is 1") {
    Triangulation t = s2_x_s1();
    for (const auto &name : {"vec", "vec_g:Z2", "fibonacci", "ising"}) {
        CategoryData S = builtin_category(name);
        INFO(name);
        const cplx v = tv_invariant(S, t);
        INFO("value ", v.real(), "+", v.imag(), "i");
        CHECK(std::abs(v - cplx(1, 0)) < 1e-8);
    }
}

TEST_CASE("TV for pointed categories counts flat Z2 connections") {
    // |Hom(pi_1, Z2)| / |Z2| = 2^{b_1(F2)} / 2, computed from homology
    CategoryData z2 = builtin_vec_group(2, 0);
    for (const auto &name : builtin_triangulation_names()) {
        Triangulation t = builtin_triangulation(name);
        INFO(name);
        const double want = std::pow(2.0, homology_b1(t, 2)) / 2.0;
        const cplx v = tv_invariant(z2, t);
        INFO("value ", v.real(), " want ", want);
        CHECK(std::abs(v - cplx(want, 0)) < 1e-8);
    }
}

TEST_CASE("TV with the nontrivial Z2 cocycle on lens spaces") {
    // RP3: the sum over the two flat connections weighted by the cocycle
    // evaluation; for S3-like spaces it must still give 1/2
    CategoryData z2w = builtin_vec_group(2, 1);
    Triangulation s5 = boundary_of_4_simplex();
    CHECK(std::abs(tv_invariant(z2w, s5) - cplx(0.5, 0)) < 1e-8);
    Triangulation s2 = two_tet_sphere();
    CHECK(std::abs(tv_invariant(z2w, s2) - cplx(0.5, 0)) < 1e-8);
}

TEST_CASE("orbifold route equals the 6j route") {
    std::vector<std::string> cats = {"vec", "vec_g:Z2", "fibonacci", "ising"};
    std::vector<std::string> tris = {"S3_5tet", "S3_2tet", "S2xS1"};
    for (const auto &cn : cats)
        for (const auto &tn : tris) {
            CategoryData S = builtin_category(cn);
            Triangulation t = builtin_triangulation(tn);
            INFO(cn, " on ", tn);
            const cplx v1 = tv_invariant(S, t);
            const cplx v2 = orbifold_state_sum(S, t);
            INFO("tv = ", v1.real(), "+", v1.imag(), "i orb = ", v2.real(), "+",
                 v2.imag(), "i");
            CHECK(std::abs(v1 - v2) < 1e-8);
        }
}

TEST_CASE("parallel enumeration matches single-threaded") {
    CategoryData S = builtin_ising();
    Triangulation t = boundary_of_4_simplex();
    StateSumOptions o1, o4;
    o4.jobs = 4;
    CHECK(std::abs(tv_invariant(S, t, o1) - tv_invariant(S, t, o4)) < 1e-12);
}

TEST_CASE("lens space values distinguish manifolds") {
    CategoryData z2 = builtin_vec_group(2, 0);
    Triangulation s5 = boundary_of_4_simplex();
    Triangulation s21 = s2_x_s1();
    auto r = triangulation_independence(z2, s5, s21);
    CHECK(std::abs(r.difference - 0.5) < 1e-8);
}

TEST_CASE("catalog invariants are real (mirror symmetry of the catalog)") {
    for (const auto &cn : {"vec_g:Z2", "vec_g:Z2:cocycle=w", "fibonacci",
                           "ising"}) {
        CategoryData S = builtin_category(cn);
        for (const auto &tn : builtin_triangulation_names()) {
            Triangulation t = builtin_triangulation(tn);
            const cplx v = tv_invariant(S, t);
            INFO(cn, " on ", tn, " = ", v.real(), "+", v.imag(), "i");
            CHECK(std::abs(v.imag()) < 1e-9);
        }
    }
}

TEST_CASE("flat-connection counting on lens spaces up to six tetrahedra") {
    for (int p : {2, 3}) {
        CategoryData c = builtin_vec_group(p, 0);
        for (const char *tn : {"RP3", "L(3,1)", "lens:4:1", "lens:5:1",
                               "lens:6:1"}) {
            Triangulation t = builtin_triangulation(tn);
            const double want = std::pow(p, homology_b1(t, p)) / p;
            const cplx v = tv_invariant(c, t);
            INFO("Z", p, " on ", tn);
            CHECK(std::abs(v - cplx(want, 0)) < 1e-9);
        }
    }
}

TEST_CASE("twisted cocycle weights: the Gauss sum vanishes on RP3") {
    CategoryData w = builtin_vec_group(2, 1);
    CHECK(std::abs(tv_invariant(w, builtin_triangulation("RP3"))) < 1e-9);
    CHECK(std::abs(tv_invariant(w, builtin_triangulation("L(3,1)")) -
                   cplx(0.5, 0)) < 1e-9);
    CHECK(std::abs(tv_invariant(w, builtin_triangulation("S2xS1")) -
                   cplx(1, 0)) < 1e-9);
    CHECK(std::abs(tv_invariant(w, builtin_triangulation("lens:4:1")) -
                   cplx(1, 0)) < 1e-9);
}
