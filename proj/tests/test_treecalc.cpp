#include <doctest.h>

#include <random>

#include "catalog/builtin.hpp"
#include "treecalc/morphism.hpp"

using namespace tqft;

namespace {

Morphism random_morphism(const CategoryData &cat, const Word &src,
                         const Word &tgt, std::mt19937 &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Morphism m = morphism_zero(cat, src, tgt);
    std::vector<std::vector<Tree>> tgt_by_root(cat.n_simples());
    for (const auto &t : enumerate_trees(cat, tgt))
        tgt_by_root[static_cast<std::size_t>(t.root(cat, tgt))].push_back(t);
    for (const auto &s : enumerate_trees(cat, src))
        for (const auto &t :
             tgt_by_root[static_cast<std::size_t>(s.root(cat, src))])
            m.add(s, t, cplx(u(rng), u(rng)));
    return m;
}

} // namespace

TEST_CASE("hom dimensions") {
    CategoryData z2 = builtin_vec_group(2, 0);
    CategoryData fib = builtin_fibonacci();
    const Obj one = Obj::simple(0), g = Obj::simple(1);
    CHECK(hom_dim(z2, Word{}, Word{}) == 1);
    const Obj tau = Obj::simple(1);
    CHECK(hom_dim(fib, Word::of({tau, tau}), Word::of({tau})) == 1);
    Obj A;
    A.s = {0, 1}; // 1 (+) g
    CHECK(hom_dim(z2, Word::of({A, A}), Word::of({A})) == 4);
    (void)one;
    (void)g;
}

TEST_CASE("compose/tensor identities on random morphisms") {
    std::mt19937 rng(7);
    for (const auto &name : {"vec_g:Z2", "fibonacci", "ising"}) {
        CategoryData cat = builtin_category(name);
        INFO(name);
        Obj x;
        x.s = {0, static_cast<SimpleId>(cat.n_simples() - 1)};
        const Word w1 = Word::of({x, Obj::simple(0)});
        const Word w2 = Word::of({x});
        const Word w3 = Word::of({x, x});

        Morphism f = random_morphism(cat, w1, w2, rng);
        Morphism g = random_morphism(cat, w3, w1, rng);
        Morphism h = random_morphism(cat, w2, w3, rng);

        // identity laws
        CHECK(max_abs_diff(compose(morphism_identity(cat, w2), f), f) < 1e-12);
        CHECK(max_abs_diff(compose(f, morphism_identity(cat, w1)), f) < 1e-12);
        // associativity of composition
        Morphism a1 = compose(compose(f, g), compose(h, f));
        Morphism a2 = compose(f, compose(g, compose(h, f)));
        CHECK(max_abs_diff(a1, a2) < 1e-11);
        // tensor of identities
        CHECK(max_abs_diff(
                  tensor(morphism_identity(cat, w1), morphism_identity(cat, w2)),
                  morphism_identity(cat, w1.concat(w2))) < 1e-11);
        // interchange law
        Morphism t1 = compose(tensor(f, h), tensor(g, f));
        Morphism t2 = tensor(compose(f, g), compose(h, f));
        CHECK(max_abs_diff(t1, t2) < 1e-10);
    }
}

TEST_CASE("completeness of the tree pairing") {
    // sum over channels of d_k (splitting o fusion) = identity
    for (const auto &name : {"fibonacci", "ising"}) {
        CategoryData cat = builtin_category(name);
        INFO(name);
        const SimpleId n = static_cast<SimpleId>(cat.n_simples());
        for (SimpleId i = 0; i < n; ++i)
            for (SimpleId j = 0; j < n; ++j) {
                const Word w = Word::of({Obj::simple(i), Obj::simple(j)});
                Morphism acc = morphism_zero(cat, w, w);
                for (SimpleId k = 0; k < n; ++k)
                    for (int m = 0; m < cat.N(i, j, k); ++m) {
                        Morphism lam = vertex_fusion(cat, i, j, k, m);
                        Morphism lamhat = vertex_splitting(cat, i, j, k, m);
                        acc = acc + cat.dim[static_cast<std::size_t>(k)] *
                                        compose(lamhat, lam);
                    }
                CHECK(max_abs_diff(acc, morphism_identity(cat, w)) < 1e-12);
            }
    }
}

TEST_CASE("trace pairing normalization") {
    CategoryData cat = builtin_fibonacci();
    // lambda o hat-mu = delta / d_k
    Morphism lam = vertex_fusion(cat, 1, 1, 1, 0);
    Morphism lamhat = vertex_splitting(cat, 1, 1, 1, 0);
    Morphism p = compose(lam, lamhat);
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    Morphism want = (cplx(1.0 / phi, 0)) *
                    morphism_identity(cat, Word::of({Obj::simple(1)}));
    CHECK(max_abs_diff(p, want) < 1e-12);
}

TEST_CASE("F move composed with inverse F move is the identity") {
    CategoryData cat = builtin_fibonacci();
    const Word w =
        Word::of({Obj::simple(1), Obj::simple(1), Obj::simple(1)});
    // braid twice with opposite crossings: must give identity
    Morphism b = braid(cat, w, 1, true);
    Word wt = w;
    std::swap(wt.f[0], wt.f[1]);
    Morphism binv = braid(cat, wt, 1, false);
    CHECK(max_abs_diff(compose(binv, b), morphism_identity(cat, w)) < 1e-11);
}

TEST_CASE("Yang-Baxter on three strands") {
    for (const auto &name : {"vec_z2_chi", "ising", "fibonacci"}) {
        CategoryData cat = builtin_category(name);
        INFO(name);
        Obj x;
        for (SimpleId i = 0; i < static_cast<SimpleId>(cat.n_simples()); ++i)
            x.s.push_back(i);
        const Word w = Word::of({x, x, x});
        Morphism b12 = braid(cat, w, 1, true);
        Morphism b23 = braid(cat, w, 2, true);
        // all words here are (x,x,x) so the braids compose directly
        Morphism lhs = compose(b23, compose(b12, b23));
        Morphism rhs = compose(b12, compose(b23, b12));
        CHECK(max_abs_diff(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("ribbon and spherical verifiers pass on builtins") {
    for (const auto &name : builtin_category_names()) {
        CategoryData cat = builtin_category(name);
        INFO(name);
        auto sph = verify_spherical(cat);
        for (const auto &c : sph.checks) {
            INFO(c.id, " residual ", c.residual);
            CHECK(c.pass);
        }
        if (cat.ribbon) {
            auto rib = verify_ribbon(cat);
            for (const auto &c : rib.checks) {
                INFO(c.id, " residual ", c.residual);
                CHECK(c.pass);
            }
        }
    }
}

TEST_CASE("wrong twist fails ribbon compatibility") {
    CategoryData cat = builtin_vec_z2_chi();
    cat.ribbon->twist[1] = 1.0; // should be -1 for c_{g,g} = -1
    auto rep = verify_ribbon(cat);
    CHECK(!rep.passed());
}

TEST_CASE("folds: trace of id_tau is the quantum dimension") {
    CategoryData cat = builtin_fibonacci();
    Morphism idt = morphism_identity(cat, Word::of({Obj::simple(1)}));
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(trace(idt) - cplx(phi, 0)) < 1e-12);
}

TEST_CASE("double fold returns the original morphism") {
    std::mt19937 rng(11);
    CategoryData cat = builtin_ising();
    Obj x;
    x.s = {0, 2};
    const Word w1 = Word::of({x, x});
    const Word w2 = Word::of({x});
    Morphism f = random_morphism(cat, w1, w2, rng);
    Morphism up = bend_right_up(f);
    Morphism down = bend_right_down(up);
    CHECK(max_abs_diff(down, f) < 1e-11);
    Morphism lu = bend_left_up(f);
    Morphism ld = bend_left_down(lu);
    CHECK(max_abs_diff(ld, f) < 1e-11);
}

TEST_CASE("partial trace of a channel projector") {
    // tr_k of the projector onto channel k inside Hom(i(x)j, i(x)j)
    CategoryData cat = builtin_ising();
    const SimpleId X = 2;
    Morphism proj =
        compose(vertex_splitting(cat, X, X, 1, 0), vertex_fusion(cat, X, X, 1, 0));
    // d_k * proj has trace d_k * (d_k/d_k ... ) = check against direct value:
    // trace(proj) = d_k^{-1} * tr(id_k) = 1
    CHECK(std::abs(trace(proj) - cplx(1, 0)) < 1e-12);
}

TEST_CASE("objectify produces an isomorphism pair") {
    CategoryData cat = builtin_fibonacci();
    Obj tau = Obj::simple(1);
    const Word w = Word::of({tau, tau});
    Objectified o = objectify(cat, w);
    CHECK(o.obj.s.size() == 2); // tau (x) tau = 1 (+) tau
    CHECK(max_abs_diff(compose(o.retract, o.embed),
                       morphism_identity(cat, Word::of({o.obj}))) < 1e-12);
    CHECK(max_abs_diff(compose(o.embed, o.retract), morphism_identity(cat, w)) <
          1e-12);
}

TEST_CASE("vec engine morphisms behave like plain matrices") {
    CategoryData vec = builtin_vec();
    Obj k3;
    k3.s = {0, 0, 0};
    const Word w = Word::of({k3});
    std::mt19937 rng(3);
    Morphism a = random_morphism(vec, w, w, rng);
    Morphism b = random_morphism(vec, w, w, rng);
    // compare against direct 3x3 matrix multiplication
    auto to_mat = [&](const Morphism &m) {
        CMatrix r(3, 3);
        for (const auto &[k, v] : m.coeff)
            r(static_cast<std::size_t>(k.tgt.pick[0]),
              static_cast<std::size_t>(k.src.pick[0])) = v;
        return r;
    };
    CMatrix direct = to_mat(a) * to_mat(b);
    CMatrix engine = to_mat(compose(a, b));
    CHECK(direct.max_abs_diff(engine) < 1e-12);
}

TEST_CASE("trace pairing through folds is the Kronecker pairing") {
    // the closed two-fold diagram tr(lambda o hat-mu) evaluates to
    // delta_{lambda,mu} for every channel pair
    for (const auto &name : {"fibonacci", "ising"}) {
        CategoryData cat = builtin_category(name);
        INFO(name);
        const SimpleId n = static_cast<SimpleId>(cat.n_simples());
        for (SimpleId i = 0; i < n; ++i)
            for (SimpleId j = 0; j < n; ++j)
                for (SimpleId k = 0; k < n; ++k)
                    for (int m1 = 0; m1 < cat.N(i, j, k); ++m1)
                        for (int m2 = 0; m2 < cat.N(i, j, k); ++m2) {
                            const cplx tr = trace(
                                compose(vertex_fusion(cat, i, j, k, m1),
                                        vertex_splitting(cat, i, j, k, m2)));
                            const cplx want = m1 == m2 ? 1.0 : 0.0;
                            CHECK(std::abs(tr - want) < 1e-12);
                        }
    }
}

TEST_CASE("braid requires ribbon data") {
    CategoryData fib = builtin_fibonacci();
    fib.ribbon.reset();
    const Word w = Word::of({Obj::simple(1), Obj::simple(1)});
    CHECK_THROWS(braid(fib, w, 1, true));
}

TEST_CASE("tree machinery carries multiplicity indices") {
    // a fusion ring with N(x,x,x) = 2; no F data is needed to count trees
    CategoryData m;
    m.name = "mult2-ring";
    m.names = {"1", "x"};
    m.unit = 0;
    m.dual = {0, 1};
    m.fusion[{0, 0, 0}] = 1;
    m.fusion[{0, 1, 1}] = 1;
    m.fusion[{1, 0, 1}] = 1;
    m.fusion[{1, 1, 0}] = 1;
    m.fusion[{1, 1, 1}] = 2;
    m.dim = {1.0, 1.0 + std::sqrt(2.0)};
    CHECK(verify_fusion_ring(m).passed());
    const Obj x = Obj::simple(1);
    // Hom(x (x) x, x) is two-dimensional
    CHECK(hom_dim(m, Word::of({x, x}), Word::of({x})) == 2);
    // trees over (x,x,x): root 1: channels via mult pairs; root x gets all
    // multiplicity combinations
    auto trees = enumerate_trees(m, Word::of({x, x, x}));
    std::size_t root_x = 0, root_1 = 0;
    for (const auto &t : trees)
        (t.root(m, Word::of({x, x, x})) == 1 ? root_x : root_1)++;
    // root 1: x (x) (x x -> x via 2) -> 1: 2 trees
    CHECK(root_1 == 2);
    // root x: tail channel 1 (1 way) + tail channel x (2 ways) * vertex
    // mult 2 = 5 trees
    CHECK(root_x == 5);
}
