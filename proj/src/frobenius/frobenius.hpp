#pragma once

#include <optional>

#include "treecalc/morphism.hpp"

namespace tqft {

struct FrobeniusAlgebraData {
    const CategoryData *cat = nullptr;
    std::string name = "A";
    Obj carrier;
    Morphism mu;    // (A,A) -> (A)
    Morphism eta;   // ()    -> (A)
    Morphism delta; // (A)   -> (A,A)
    Morphism eps;   // (A)   -> ()

    Word word() const { return Word::of({carrier}); }
};

enum class Side { Left, Right };

struct ModuleAction {
    Side side = Side::Right;
    const FrobeniusAlgebraData *alg = nullptr;
    // Left: (A,M) -> (M); Right: (M,A) -> (M)
    Morphism act;
};

struct ModuleData {
    const CategoryData *cat = nullptr;
    std::string name = "M";
    Obj carrier;
    std::vector<ModuleAction> actions;

    Word word() const { return Word::of({carrier}); }
    const ModuleAction &action(std::size_t i) const { return actions.at(i); }
};

// ---- algebra verification ----
VerificationReport verify_frobenius(const FrobeniusAlgebraData &alg);
// commutativity residual (needs a braiding)
double commutativity_residual(const FrobeniusAlgebraData &alg);

// unital/associative residuals for one action, and commutation of two
VerificationReport verify_module(const ModuleData &m);

// ---- canonical algebras ----
FrobeniusAlgebraData trivial_algebra(const CategoryData &cat);
// direct sum of |I| trivial algebras in the one-simple engine
FrobeniusAlgebraData diagonal_algebra(const CategoryData &vec_engine,
                                      std::size_t n);

// ---- module constructions ----
// regular bimodule A over itself: actions [left, right]
ModuleData regular_bimodule(const FrobeniusAlgebraData &alg);

// product actions on M (x) N per the braided convention: for right
// modules M_A, N_B the (A (x) B)-module structure (reverse = the
// (B (x) A) convention with the opposite crossing).
Morphism product_action_right_first(const ModuleData &m, std::size_t im,
                                    const ModuleData &n, bool reverse = false);
Morphism product_action_right_second(const ModuleData &m, const ModuleData &n,
                                     std::size_t in);
// left-module versions: A acts on the left factor directly, B crosses
Morphism product_action_left_first(const ModuleData &m, std::size_t im,
                                   const ModuleData &n);
Morphism product_action_left_second(const ModuleData &m, const ModuleData &n,
                                    std::size_t in, bool reverse = false);

// ---- relative tensor product ----
struct RelativeTensor {
    Obj image;        // carrier of M (x)_A N
    Morphism proj;    // p_{M,N} on the ambient word (M,N)
    Morphism embed;   // (image) -> (M,N)
    Morphism retract; // (M,N) -> (image)
};
// m acts through its action index im (must be Right over `over`),
// n through in (must be Left over `over`).
RelativeTensor relative_tensor(const ModuleData &m, std::size_t im,
                               const ModuleData &n, std::size_t in);
// just the projector, without splitting
Morphism relative_projector(const ModuleData &m, std::size_t im,
                            const ModuleData &n, std::size_t in);

// ---- duals ----
// right action on M induces a left action on M*, and vice versa
Morphism dual_action_of_right(const CategoryData &cat, const Obj &m,
                              const Morphism &rho);
Morphism dual_action_of_left(const CategoryData &cat, const Obj &m,
                             const Morphism &lam);
ModuleData module_dual(const ModuleData &m);

// ---- endomorphism induction (psi insertions) ----
// psi: (A)->(A); returns the induced endomorphism of the module carrier
Morphism induce_endo(const ModuleAction &a, const Obj &carrier,
                     const Morphism &psi);

// ---- wrap diagrams ----
// closed module loop attached to the algebra line through Delta:
//   wrap_right: M a right module via rho, loop closed with the left duality
//   wrap_left:  M a left module via lam, with an optional endo inserted
//               on the module strand below the action vertex
Morphism wrap_right(const FrobeniusAlgebraData &alg, const Obj &m,
                    const Morphism &rho,
                    const std::optional<Morphism> &insert = std::nullopt);
Morphism wrap_left(const FrobeniusAlgebraData &alg, const Obj &m,
                   const Morphism &lam,
                   const std::optional<Morphism> &insert = std::nullopt);

// ---- Morita / center ----
struct AlgebraSummand {
    FrobeniusAlgebraData algebra;
    Morphism embed;   // (A_i) -> (A)
    Morphism retract; // (A) -> (A_i)
    cplx dimension;   // quantum dimension of the summand carrier
};
// decomposition into simple Delta-separable symmetric Frobenius summands
// via the central idempotents of End_{AA}(A)
std::vector<AlgebraSummand> morita_decompose(const FrobeniusAlgebraData &alg);

} // namespace tqft
