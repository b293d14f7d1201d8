#include "orbifold/datum.hpp"

namespace tqft {

Morphism induce_psi(const OrbifoldDatum &d, std::size_t slot,
                    const ModuleData &target, int power) {
    Morphism p = d.psi;
    if (power < 0)
        p = morphism_endo_inverse(d.psi);
    Morphism once = induce_endo(target.action(slot), target.carrier, p);
    const int reps = power < 0 ? -power : power;
    Morphism out = morphism_identity(*d.cat, target.word());
    for (int i = 0; i < reps; ++i)
        out = compose(once, out);
    return out;
}

Morphism datum_p1(const OrbifoldDatum &d) {
    return relative_projector(d.T, 1, d.T, 0);
}

Morphism datum_p2(const OrbifoldDatum &d) {
    return relative_projector(d.T, 2, d.T, 0);
}

namespace {

struct Ctx {
    const OrbifoldDatum &d;
    const CategoryData &cat;
    Obj T, Td, A;
    Word wT, wTT, wTTT, wTTd, wTdT;
    Morphism idT, idTd;
    Morphism psi0_2, psi1_2, psi2_2;    // squared insertions on T
    Morphism psi0_m2, psi1_m2, psi2_m2; // inverse squares

    explicit Ctx(const OrbifoldDatum &dd)
        : d(dd), cat(*dd.cat), T(dd.Tc()), Td(dual_obj(cat, dd.Tc())),
          A(dd.Ac()), wT(Word::of({T})), wTT(Word::of({T, T})),
          wTTT(Word::of({T, T, T})), wTTd(Word::of({T, Td})),
          wTdT(Word::of({Td, T})), idT(morphism_identity(cat, wT)),
          idTd(morphism_identity(cat, Word::of({Td}))),
          psi0_2(induce_psi(dd, 0, dd.T, 2)), psi1_2(induce_psi(dd, 1, dd.T, 2)),
          psi2_2(induce_psi(dd, 2, dd.T, 2)),
          psi0_m2(induce_psi(dd, 0, dd.T, -2)),
          psi1_m2(induce_psi(dd, 1, dd.T, -2)),
          psi2_m2(induce_psi(dd, 2, dd.T, -2)) {}
};

// (O1): the pentagon-type identity with one inverse crossing on the left
// and a psi_0^2 insertion on the right.
double cond_O1(const Ctx &c) {
    const Morphism a01 = padded(c.d.alpha, c.wTTT, 0);
    const Morphism a12 = padded(c.d.alpha, c.wTTT, 1);
    Morphism lhs =
        compose(a01, compose(braid(c.cat, c.wTTT, 2, false), a01));
    Morphism rhs = compose(
        a12, compose(a01, compose(padded(c.psi0_2, c.wTTT, 2), a12)));
    return max_abs_diff(lhs, rhs);
}

// (O2a): alpha o (1 (x) psi_0^2) o alphabar = (1 (x) psi_0^{-2}) o p_1
// (O2b): alphabar o (1 (x) psi_0^2) o alpha = (1 (x) psi_0^{-2}) o p_2
double cond_O2a(const Ctx &c) {
    Morphism lhs = compose(
        c.d.alpha, compose(padded(c.psi0_2, c.wTT, 1), c.d.alphabar));
    Morphism rhs = compose(padded(c.psi0_m2, c.wTT, 1), datum_p1(c.d));
    return max_abs_diff(lhs, rhs);
}

double cond_O2b(const Ctx &c) {
    Morphism lhs = compose(
        c.d.alphabar, compose(padded(c.psi0_2, c.wTT, 1), c.d.alpha));
    Morphism rhs = compose(padded(c.psi0_m2, c.wTT, 1), datum_p2(c.d));
    return max_abs_diff(lhs, rhs);
}

// (O3a) on (T,T*): the alpha/alphabar pair with the second leg bent to
// the right, psi_2^2 between, equal to the action-1 bubble with a
// psi_1^{-2} below.
double cond_O3a(const Ctx &c) {
    const CategoryData &cat = c.cat;
    const Word w4a = Word::of({c.T, c.T, c.Td, c.Td});
    const Word w4b = Word::of({c.T, c.Td, c.T, c.Td});
    Morphism s1 = padded(coev(cat, c.T), c.wTTd, 1);     // (T,T*)->(T,T,T*,T*)
    Morphism s2 = padded(c.d.alpha, w4a, 0);             // alpha on 1,2
    Morphism s3 = braid(cat, w4a, 2, false);             // T under T*
    Morphism s4 = padded(tev(cat, c.T), w4b, 2);         // close 3,4
    Morphism s5 = padded(c.psi2_2, c.wTTd, 0);           // psi_2^2 on T
    Morphism s6 = padded(coev(cat, c.T), c.wTTd, 2);     // create on the right
    Morphism s7 = braid(cat, w4b, 2, true);              // T* in front of new T
    Morphism s8 = padded(c.d.alphabar, w4a, 0);
    Morphism s9 = padded(tev(cat, c.T), w4a, 1);         // close 2,3
    Morphism lhs = compose(
        s9, compose(s8, compose(s7, compose(s6, compose(s5, compose(s4,
            compose(s3, compose(s2, s1))))))));

    Morphism dual1 = dual_action_of_right(cat, c.T, c.d.T.action(1).act);
    Morphism de = compose(c.d.alg->delta, c.d.alg->eta);
    Morphism bubble = compose(tensor(c.d.T.action(1).act, dual1),
                              padded(de, c.wTTd, 1));
    Morphism rhs = compose(bubble, padded(induce_psi(c.d, 1, c.d.T, -2),
                                          c.wTTd, 0));
    return max_abs_diff(lhs, rhs);
}

// (O3b) on (T,T*): mirrored nesting with psi_1^2, equal to the action-2
// bubble with psi_2^{-2} below.
double cond_O3b(const Ctx &c) {
    const CategoryData &cat = c.cat;
    const Word w4a = Word::of({c.T, c.T, c.Td, c.Td});
    const Word w4b = Word::of({c.T, c.Td, c.T, c.Td});
    Morphism s1 = padded(coev(cat, c.T), c.wTTd, 2);     // (T,T*,T,T*)
    Morphism s2 = braid(cat, w4b, 2, true);              // incoming T* in front
    Morphism s3 = padded(c.d.alphabar, w4a, 0);
    Morphism s4 = padded(tev(cat, c.T), w4a, 1);         // close with incoming
    Morphism s5 = padded(c.psi1_2, c.wTTd, 0);
    Morphism s6 = padded(coev(cat, c.T), c.wTTd, 1);
    Morphism s7 = padded(c.d.alpha, w4a, 0);
    Morphism s8 = braid(cat, w4a, 2, false);             // output under out T*
    Morphism s9 = padded(tev(cat, c.T), w4b, 2);
    Morphism lhs = compose(
        s9, compose(s8, compose(s7, compose(s6, compose(s5, compose(s4,
            compose(s3, compose(s2, s1))))))));

    Morphism dual2 = dual_action_of_right(cat, c.T, c.d.T.action(2).act);
    Morphism de = compose(c.d.alg->delta, c.d.alg->eta);
    Morphism bubble = compose(tensor(c.d.T.action(2).act, dual2),
                              padded(de, c.wTTd, 1));
    Morphism rhs = compose(bubble, padded(induce_psi(c.d, 2, c.d.T, -2),
                                          c.wTTd, 0));
    return max_abs_diff(lhs, rhs);
}

// (O4a) on (T*,T): bends to the left, psi_2^2 between the boxes, equal
// to the left-action bubble with psi_0^{-2} on the T line.
double cond_O4a(const Ctx &c) {
    const CategoryData &cat = c.cat;
    const Word w4 = Word::of({c.Td, c.T, c.T, c.Td});
    Morphism s1 = padded(coev(cat, c.T), c.wTdT, 2);     // (T*,T,T,T*)
    Morphism s2 = padded(c.d.alpha, w4, 1);
    Morphism s3 = padded(ev(cat, c.T), w4, 0);           // close 1,2
    Morphism s4 = padded(c.psi2_2, c.wTTd, 0);           // word now (T,T*)
    Morphism s5 = padded(tcoev(cat, c.T), c.wTTd, 0);    // (T*,T,T,T*)
    Morphism s6 = padded(c.d.alphabar, w4, 1);
    Morphism s7 = padded(tev(cat, c.T), w4, 2);          // close 3,4
    Morphism lhs = compose(
        s7, compose(s6, compose(s5, compose(s4, compose(s3, compose(s2, s1))))));

    Morphism dual0 = dual_action_of_left(cat, c.T, c.d.T.action(0).act);
    Morphism de = compose(c.d.alg->delta, c.d.alg->eta);
    Morphism bubble = compose(tensor(dual0, c.d.T.action(0).act),
                              padded(de, c.wTdT, 1));
    Morphism rhs = compose(bubble, padded(induce_psi(c.d, 0, c.d.T, -2),
                                          c.wTdT, 1));
    return max_abs_diff(lhs, rhs);
}

// (O4b) on (T,T*): alphabar below, alpha above, psi_0^2 on the left
// strand, equal to the (action-2, bent action-1) bubble with psi_2^{-2}.
double cond_O4b(const Ctx &c) {
    const CategoryData &cat = c.cat;
    const Word w4 = Word::of({c.Td, c.T, c.T, c.Td});
    Morphism s1 = padded(tcoev(cat, c.T), c.wTTd, 0);    // (T*,T,T,T*)
    Morphism s2 = padded(c.d.alphabar, w4, 1);
    Morphism s3 = padded(tev(cat, c.T), w4, 2);          // close 3,4 -> (T*,T)
    Morphism s4 = padded(c.psi0_2, c.wTdT, 1);
    Morphism s5 = padded(coev(cat, c.T), c.wTdT, 2);     // (T*,T,T,T*)
    Morphism s6 = padded(c.d.alpha, w4, 1);
    Morphism s7 = padded(ev(cat, c.T), w4, 0);           // close 1,2 -> (T,T*)
    Morphism lhs = compose(
        s7, compose(s6, compose(s5, compose(s4, compose(s3, compose(s2, s1))))));

    Morphism dual1 = dual_action_of_right(cat, c.T, c.d.T.action(1).act);
    Morphism de = compose(c.d.alg->delta, c.d.alg->eta);
    Morphism bubble = compose(tensor(c.d.T.action(2).act, dual1),
                              padded(de, c.wTTd, 1));
    Morphism rhs = compose(bubble, padded(induce_psi(c.d, 2, c.d.T, -2),
                                          c.wTTd, 0));
    return max_abs_diff(lhs, rhs);
}

// (O5): the three decorated T-loops against phi^{-2} eps psi^2, reported
// as the pairwise chain O5a, O5b, O5c. All four are morphisms (A) -> ().
struct O5Values {
    Morphism loop_left;  // left action, psi_1^2 psi_2^2
    Morphism loop_act2;  // action 2, psi_0^2 psi_1^2
    Morphism loop_act1;  // action 1, psi_0^2 psi_2^2
    Morphism eps_bubble; // phi^{-2} eps psi^2
};

O5Values cond_O5(const Ctx &c) {
    const CategoryData &cat = c.cat;
    const Word wA = Word::of({c.A});
    O5Values v;
    {
        // clockwise loop, insertions psi_2^2 then psi_1^2, left action
        Morphism s1 = padded(coev(cat, c.T), wA, 1); // (A)->(A,T,T*)
        Word w3 = Word::of({c.A, c.T, c.Td});
        Morphism ins = compose(c.psi1_2, c.psi2_2);
        Morphism s2 = padded(ins, w3, 1);
        Morphism s3 = padded(c.d.T.action(0).act, w3, 0); // -> (T,T*)
        Morphism s4 = tev(cat, c.T);
        v.loop_left = compose(s4, compose(s3, compose(s2, s1)));
    }
    {
        // counterclockwise loop, psi_1^2 then psi_0^2, action 2
        Morphism s1 = padded(tcoev(cat, c.T), wA, 0); // (A)->(T*,T,A)
        Word w3 = Word::of({c.Td, c.T, c.A});
        Morphism ins = compose(c.psi0_2, c.psi1_2);
        Morphism s2 = padded(ins, w3, 1);
        Morphism s3 = padded(c.d.T.action(2).act, w3, 1); // -> (T*,T)
        Morphism s4 = ev(cat, c.T);
        v.loop_act2 = compose(s4, compose(s3, compose(s2, s1)));
    }
    {
        Morphism s1 = padded(tcoev(cat, c.T), wA, 0);
        Word w3 = Word::of({c.Td, c.T, c.A});
        Morphism ins = compose(c.psi0_2, c.psi2_2);
        Morphism s2 = padded(ins, w3, 1);
        Morphism s3 = padded(c.d.T.action(1).act, w3, 1);
        Morphism s4 = ev(cat, c.T);
        v.loop_act1 = compose(s4, compose(s3, compose(s2, s1)));
    }
    {
        Morphism psi2 = compose(c.d.psi, c.d.psi);
        v.eps_bubble = (cplx(1, 0) / c.d.phi_sq) *
                       compose(c.d.alg->eps, psi2);
    }
    return v;
}

} // namespace

ConditionReport verify_orbifold_datum(const OrbifoldDatum &d,
                                      double tol_override) {
    const CategoryData &cat = *d.cat;
    const double tol = tol_override > 0 ? tol_override : cat.tolerance * 10;
    ConditionReport rep;
    rep.name = d.name;

    auto pre = [&](std::string id, double r) {
        rep.prechecks.push_back({std::move(id), r, r < tol, ""});
    };

    // module axioms for T (unital, associative, commuting actions)
    {
        auto mrep = verify_module(d.T);
        for (const auto &ck : mrep.checks)
            rep.prechecks.push_back({"T_" + ck.id, ck.residual, ck.pass, ""});
    }

    // alpha, alphabar are maps of multi-modules (eq. action compatibility):
    // alpha maps the source pattern (A1; A2 on left action 1, A5/A6 on the
    // right factor) to the target pattern (A1; A6 on left action 2, A2/A5
    // on the right factor); alphabar goes the opposite way.
    {
        Ctx c(d);
        const Obj &A = d.Ac();
        Word W = Word::of({A, c.T, c.T, A, A, A});
        Word W3 = Word::of({A, c.T, c.T, A, A});
        Word W4 = Word::of({A, c.T, c.T, A});
        Word W5 = Word::of({A, c.T, c.T});

        // source-pattern actions of alpha: A2 dives under the right T to
        // reach action 1 of the left factor
        Morphism pat1;
        {
            Morphism cr = braid(cat, W, 3, true);
            Word W2 = W;
            std::swap(W2.f[2], W2.f[3]);
            Morphism m1 = padded(d.T.action(1).act, W2, 1); // left T, A2
            Morphism m2 = padded(d.T.action(1).act, W3, 2); // right T, A5
            Morphism m3 = padded(d.T.action(2).act, W4, 2); // right T, A6
            Morphism m4 = padded(d.T.action(0).act, W5, 0); // left T, A1
            pat1 = compose(m4, compose(m3, compose(m2, compose(m1, cr))));
        }
        // target-pattern actions of alpha: A6 passes over the right T to
        // reach action 2 of the left factor
        Morphism pat2;
        {
            Morphism n1 = padded(d.T.action(1).act, W, 2);  // right T, A2
            Morphism n2 = padded(d.T.action(0).act, W3, 0); // left T, A1
            Word W4b = Word::of({c.T, c.T, A, A});
            Morphism n3 = padded(d.T.action(2).act, W4b, 1); // right T, A5
            Word W5b = Word::of({c.T, c.T, A});
            Morphism n4cr = braid(cat, W5b, 2, false); // A6 over the right T
            Word W5c = Word::of({c.T, A, c.T});
            Morphism n4 = padded(d.T.action(2).act, W5c, 0); // left T, A6
            pat2 = compose(n4, compose(n4cr, compose(n3, compose(n2, n1))));
        }
        pre("alpha_multimodule",
            max_abs_diff(compose(d.alpha, pat1),
                         compose(pat2, padded(d.alpha, W, 1))));
        pre("alphabar_multimodule",
            max_abs_diff(compose(d.alphabar, pat2),
                         compose(pat1, padded(d.alphabar, W, 1))));

        // projector compatibility
        Morphism p1 = datum_p1(d), p2 = datum_p2(d);
        pre("p1_alpha", max_abs_diff(compose(p1, d.alpha), d.alpha));
        pre("alpha_p2", max_abs_diff(compose(d.alpha, p2), d.alpha));
        pre("p2_alphabar", max_abs_diff(compose(p2, d.alphabar), d.alphabar));
        pre("alphabar_p1", max_abs_diff(compose(d.alphabar, p1), d.alphabar));

        // psi invertible (two-sided by block inversion)
        try {
            Morphism pinv = morphism_endo_inverse(d.psi);
            pre("psi_invertible",
                max_abs_diff(compose(pinv, d.psi),
                             morphism_identity(cat, Word::of({A}))));
        } catch (const std::runtime_error &) {
            rep.prechecks.push_back({"psi_invertible", 1.0, false,
                                     "singular psi block"});
        }
        pre("phi_nonzero", std::abs(d.phi_sq) > tol ? 0.0 : 1.0);

        auto put = [&](std::string id, double r) {
            rep.conditions.push_back({std::move(id), r, r < tol, ""});
        };
        put("O1", cond_O1(c));
        put("O2a", cond_O2a(c));
        put("O2b", cond_O2b(c));
        put("O3a", cond_O3a(c));
        put("O3b", cond_O3b(c));
        put("O4a", cond_O4a(c));
        put("O4b", cond_O4b(c));
        O5Values v = cond_O5(c);
        put("O5a", max_abs_diff(v.loop_left, v.loop_act2));
        put("O5b", max_abs_diff(v.loop_act2, v.loop_act1));
        put("O5c", max_abs_diff(v.loop_act1, v.eps_bubble));
    }
    return rep;
}

} // namespace tqft
