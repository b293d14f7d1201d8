#pragma once

#include "orbifold/datum.hpp"
#include "statesum/dual.hpp"

namespace tqft {

// Vertex functional of a single dual vertex: the closed diagram built
// from the four fusion/splitting bases, evaluated by the tree engine.
// colours are the six role labels (a,b,c,d,j,k); mults the four leg
// multiplicity indices in slot order S1..S4.
cplx vertex_functional(const CategoryData &S, bool positive,
                       const std::array<SimpleId, 6> &colours,
                       const std::array<int, 4> &mults);

struct StateSumOptions {
    int jobs = 1;
};

// Turaev-Viro state sum over colourings of the dual 2-strata, with the
// vertex weights evaluated through the tree calculus.
cplx tv_invariant(const CategoryData &S, const Triangulation &tri,
                  const StateSumOptions &opt = {});

// The same contraction evaluated from the orbifold datum tables of the
// one-simple engine (alpha/alphabar entries, psi^2 weights, phi^2 per
// 3-stratum); shares the stratification but none of the 6j evaluation.
cplx orbifold_state_sum(const CategoryData &S, const Triangulation &tri,
                        const StateSumOptions &opt = {});

struct IndependenceResult {
    cplx value1, value2;
    double difference;
};
IndependenceResult triangulation_independence(const CategoryData &S,
                                              const Triangulation &t1,
                                              const Triangulation &t2,
                                              const StateSumOptions &opt = {});

} // namespace tqft
