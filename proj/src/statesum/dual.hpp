#pragma once

#include "statesum/triangulation.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tqft {

// Poincare-dual stratification of a closed oriented triangulation,
// together with a consistent wiring of tetrahedron faces onto the four
// legs of the vertex functionals.
//
// Roles name the six 2-strata (triangulation edges) around a dual
// vertex: a,b,c,d,j,k as in the F-move square
//     lam:(a,c)->k, mu:(b,j)->c   <-->   lam':(d,j)->k, mu':(a,b)->d.
// A positively oriented tetrahedron consumes fusion bases on its two
// in-legs (lam, mu) and emits on its out-legs (lam', mu'); a negatively
// oriented one goes the other way. Each dual edge (face class) pairs an
// out-leg with an in-leg carrying the same ordered role triple.
enum Role { RA = 0, RB, RC, RD, RJ, RK };

struct TetWiring {
    bool positive = true;
    std::array<int, 4> slot_of_face{}; // local face -> slot 0..3
    std::array<int, 4> face_of_slot{};
    std::array<int, 6> role_of_edge{}; // local edge -> Role
};

struct DualFace {
    // ordered role triple (p,q -> r) as edge classes
    int p = -1, q = -1, r = -1;
    int in_tet = -1, in_face = -1;   // side whose slot consumes a basis
    int out_tet = -1, out_face = -1; // side that consumes the dual basis
};

struct DualPolyhedron {
    const Triangulation *tri = nullptr;
    std::vector<TetWiring> wiring; // per tet
    std::vector<DualFace> faces;   // per face class
    // slot triples in terms of roles, per orientation:
    //   triple[slot] = (p_role, q_role, r_role)
    static std::array<std::array<int, 3>, 4> slot_roles(bool positive);
    static std::array<bool, 4> slot_is_in();
    // role of the edge shared by two slots
    static int pair_role(bool positive, int s1, int s2);
};

// Builds the dual stratification and solves for a consistent wiring by
// backtracking over the per-tetrahedron slot assignments. Throws when no
// consistent wiring exists.
DualPolyhedron dual_polyhedron(const Triangulation &tri);

} // namespace tqft
