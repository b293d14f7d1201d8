#include <doctest.h>

#include "catalog/builtin.hpp"
#include "skeletal/loader.hpp"

using namespace tqft;

TEST_CASE("fusion ring axioms hold on builtins") {
    for (const auto &name : builtin_category_names()) {
        CategoryData cat = builtin_category(name);
        auto rep = verify_fusion_ring(cat);
        INFO(name);
        CHECK(rep.passed());
    }
}

TEST_CASE("pentagon passes on builtins") {
    for (const auto &name : builtin_category_names()) {
        CategoryData cat = builtin_category(name);
        auto rep = verify_pentagon(cat);
        INFO(name, " residual ", rep.max_residual());
        CHECK(rep.passed());
        CHECK(rep.max_residual() < 1e-10);
    }
}

TEST_CASE("pentagon flags a perturbed Fibonacci entry") {
    CategoryData cat = builtin_fibonacci();
    const FBlock &blk = cat.f_block(1, 1, 1, 1);
    // perturb the (tau,tau) entry by 1e-2
    CategoryData bad = cat;
    bad.set_F(1, 1, 1, 1, 1, 0, 1, 0, 0, 0, blk.coeff(1, 1) + cplx(0.01, 0));
    bad.finalize();
    auto rep = verify_pentagon(bad);
    CHECK(!rep.passed());
    CHECK(rep.checks[0].residual > 1e-3);
}

TEST_CASE("nontrivial Z2 cocycle passes the pentagon") {
    CategoryData cat = builtin_vec_group(2, 1);
    auto rep = verify_pentagon(cat);
    CHECK(rep.passed());
}

TEST_CASE("global dimensions") {
    CHECK(std::abs(builtin_vec().global_dimension() - cplx(1, 0)) < 1e-12);
    CHECK(std::abs(builtin_ising().global_dimension() - cplx(4, 0)) < 1e-12);
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(builtin_fibonacci().global_dimension() -
                   cplx(1.0 + phi * phi, 0)) < 1e-12);
}

TEST_CASE("category JSON round trip") {
    CategoryData cat = builtin_fibonacci();
    std::string text = category_to_json(cat);
    CategoryData back = load_category_json(text);
    CHECK(back.n_simples() == cat.n_simples());
    CHECK(verify_pentagon(back).passed());
    CHECK(verify_spherical(back).passed());
    REQUIRE(back.ribbon.has_value());
    CHECK(verify_ribbon(back).passed());
}

TEST_CASE("loader rejects malformed input") {
    CHECK_THROWS(load_category_json("{\"format\":\"nope\"}"));
    CHECK_THROWS(load_category_json(
        "{\"format\":\"fuscat/1\",\"simples\":[\"a\",\"a\"],\"unit\":\"a\"}"));
}

TEST_CASE("modularity verdicts") {
    CHECK(verify_modularity(builtin_vec()).passed());
    CHECK(verify_modularity(builtin_ising()).passed());
    CHECK(verify_modularity(builtin_fibonacci()).passed());
    // the symmetric flip braiding on vec_Z2 has a singular S-matrix
    CHECK(!verify_modularity(builtin_vec_group(2, 0)).passed());
}
