#include <doctest.h>

#include <filesystem>

#include "catalog/builtin.hpp"
#include "catalog/crossed.hpp"
#include "frobenius/frobenius.hpp"
#include "orbifold/datum.hpp"
#include "skeletal/loader.hpp"
#include "statesum/triangulation.hpp"

using namespace tqft;

static std::string data_dir() {
    // tests run from the build tree; the repo data sits two levels up
    for (const char *p : {"data/catalog-v1", "../data/catalog-v1",
                          "../../data/catalog-v1"})
        if (std::filesystem::exists(p))
            return p;
    return "data/catalog-v1";
}

TEST_CASE("every shipped category file passes its validators") {
    for (const char *f : {"vec", "vec_z2", "vec_z2_w", "vec_z2_chi", "vec_z3",
                          "fibonacci", "ising"}) {
        const std::string path = data_dir() + "/" + std::string(f) + ".json";
        INFO(path);
        REQUIRE(std::filesystem::exists(path));
        CategoryData cat = load_category_file(path);
        CHECK(verify_fusion_ring(cat).passed());
        CHECK(verify_pentagon(cat).passed());
        CHECK(verify_spherical(cat).passed());
        if (cat.ribbon)
            CHECK(verify_ribbon(cat).passed());
    }
}

TEST_CASE("every shipped triangulation file validates") {
    for (const char *f : {"s3_5tet", "s3_2tet", "s2xs1", "rp3", "l31"}) {
        const std::string path = data_dir() + "/" + std::string(f) + ".json";
        INFO(path);
        REQUIRE(std::filesystem::exists(path));
        CHECK_NOTHROW(load_triangulation_file(path));
    }
}

TEST_CASE("product actions on X (x) X over A_g (x) A_h commute") {
    CrossedCategoryData data = builtin_ty_z2(cplx(0, 1), 1);
    OrbifoldDatum d = from_crossed_extension(data, {0, 2});
    const CategoryData &cat = *d.cat;
    // X = the regular A-module, paired with itself
    ModuleData reg = regular_bimodule(*d.alg);
    Morphism a1 = product_action_right_first(reg, 1, reg);
    Morphism a2 = product_action_right_second(reg, reg, 1);
    // commutation in the A1A2 pattern
    const Obj &M = reg.carrier, &A = d.Ac();
    Word w = Word::of({M, M, A, A});
    Word w1 = Word::of({M, M, A});
    Morphism lhs = compose(a1, padded(a2, w, 0));
    Morphism cr = braid(cat, w, 3, true);
    Word w2 = w;
    std::swap(w2.f[2], w2.f[3]);
    Morphism rhs = compose(a2, compose(padded(a1, w2, 0), cr));
    (void)w1;
    CHECK(max_abs_diff(lhs, rhs) < 1e-10);
}

TEST_CASE("T (x)_A T in the vec engine has the horizontal-composition size") {
    static CategoryData z2 = builtin_vec_group(2, 0);
    SphericalDatum sd = from_spherical_category(z2);
    // contract action 2 of the first factor against the left action
    RelativeTensor rt = relative_tensor(sd.datum.T, 2, sd.datum.T, 0);
    // pairs (lam, mu) with the middle label matched: 8 of 16
    CHECK(rt.image.s.size() == 8);
}

TEST_CASE("shipped crossed files round trip and validate") {
    for (const char *f : {"ty_z2_qi_taup", "ty_z2_qi_taum"}) {
        const std::string path = data_dir() + "/" + std::string(f) + ".json";
        INFO(path);
        REQUIRE(std::filesystem::exists(path));
        CrossedCategoryData data = load_crossed_file(path);
        CHECK(validate_crossed(data).passed());
        // the loaded data produces a passing datum
        OrbifoldDatum d = from_crossed_extension(data, {0, 2});
        auto rep = verify_orbifold_datum(d);
        CHECK(rep.passed());
    }
}
