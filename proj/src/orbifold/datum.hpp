#pragma once

#include <memory>

#include "frobenius/frobenius.hpp"

namespace tqft {

// The tuple (A, T, alpha, alphabar, psi, phi). T's actions are stored in
// the fixed order [0] = left A-action, [1] = first right action,
// [2] = second right action. Only phi^2 enters any condition; the chosen
// root is carried along for constructions that need it.
struct OrbifoldDatum {
    std::shared_ptr<const CategoryData> cat_owned; // engine categories
    const CategoryData *cat = nullptr;
    std::shared_ptr<FrobeniusAlgebraData> alg;
    ModuleData T;
    Morphism alpha;    // (T,T) -> (T,T)
    Morphism alphabar; // (T,T) -> (T,T)
    Morphism psi;      // (A) -> (A)
    cplx phi_sq{1, 0};
    cplx phi{1, 0};
    std::string name = "datum";

    const Obj &Tc() const { return T.carrier; }
    const Obj &Ac() const { return alg->carrier; }
};

struct ConditionReport {
    std::string name;
    std::vector<CheckResult> prechecks;
    std::vector<CheckResult> conditions; // O1 ... O5c
    bool prechecks_passed() const {
        for (const auto &c : prechecks)
            if (!c.pass)
                return false;
        return true;
    }
    bool passed() const {
        if (!prechecks_passed())
            return false;
        for (const auto &c : conditions)
            if (!c.pass)
                return false;
        return true;
    }
    double max_residual() const {
        double m = 0;
        for (const auto &c : conditions)
            m = std::max(m, c.residual);
        return m;
    }
};

// psi insertion through action slot 0/1/2 of a matching module; power
// may be negative (uses the inverse of psi)
Morphism induce_psi(const OrbifoldDatum &d, std::size_t slot,
                    const ModuleData &target, int power);

// evaluates the ten conditions; tolerance defaults to the category's
ConditionReport verify_orbifold_datum(const OrbifoldDatum &d,
                                      double tol_override = -1.0);

// projectors p1/p2 of the alpha module-map conditions
Morphism datum_p1(const OrbifoldDatum &d);
Morphism datum_p2(const OrbifoldDatum &d);

// ---- constructors ----
OrbifoldDatum from_commutative_frobenius(
    std::shared_ptr<FrobeniusAlgebraData> alg);

struct SphericalDatum {
    std::shared_ptr<CategoryData> engine; // the one-simple category
    OrbifoldDatum datum;
    // channel table: T summand index -> (i,j,k,mult) in the source category
    struct Channel {
        SimpleId i, j, k;
        int mult;
    };
    std::vector<Channel> channels;
};
SphericalDatum from_spherical_category(const CategoryData &S);

// ---- Morita transport ----
struct MoritaModule {
    // X is a B-A-bimodule with actions [0] = left B, [1] = right A
    ModuleData X;
    std::shared_ptr<FrobeniusAlgebraData> B;
};
OrbifoldDatum morita_transport(const OrbifoldDatum &d, const MoritaModule &X);

// X with the roles of A and B exchanged (the dual bimodule), for
// transporting back
MoritaModule reverse_morita(const OrbifoldDatum &transported,
                            const MoritaModule &mm,
                            std::shared_ptr<FrobeniusAlgebraData> original_A);

// one-simple-engine Morita module splitting each summand of A into a
// full matrix block of the given size
MoritaModule matrix_split_morita(const OrbifoldDatum &d,
                                 const std::vector<int> &block_sizes);

// T-compatible isomorphism check between data sharing (A, psi, phi)
VerificationReport check_T_compatible_iso(const OrbifoldDatum &d1,
                                          const OrbifoldDatum &d2,
                                          const Morphism &rho);
// search for a T-compatible isomorphism by solving the intertwiner
// equations; returns one if found
std::optional<Morphism> find_T_compatible_iso(const OrbifoldDatum &d1,
                                              const OrbifoldDatum &d2);

} // namespace tqft
