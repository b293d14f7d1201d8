#pragma once

#include <array>
#include <string>
#include <vector>

namespace tqft {

// Closed oriented 3-manifold as a Delta-complex: tetrahedra with face
// gluings in pairs (self-identifications between distinct faces allowed).
// Face f of a tetrahedron is the one opposite local vertex f; a gluing
// carries the full local-vertex bijection (the omitted vertex maps to the
// omitted vertex).
struct Gluing {
    int tet = -1, face = -1;
    std::array<int, 4> perm{0, 1, 2, 3};
};

struct Triangulation {
    std::string name = "triangulation";
    int n_tets = 0;
    std::vector<int> orient;                  // +-1 per tetrahedron
    std::vector<std::array<Gluing, 4>> glue;  // [tet][face]

    // derived skeleton (filled by validate())
    int n_vertices = 0, n_edges = 0, n_faces = 0;
    // class id per (tet, local corner/edge/face)
    std::vector<std::array<int, 4>> vertex_class;
    std::vector<std::array<int, 6>> edge_class; // local edge index, see below
    std::vector<std::array<int, 4>> face_class;
    // orientation of each edge instance w.r.t. its class representative
    std::vector<std::array<int, 6>> edge_sign;

    // local edge indexing: 01,02,03,12,13,23
    static int edge_index(int a, int b);
    static std::array<int, 2> edge_vertices(int e);

    // throws std::runtime_error on: unglued faces, broken involutions,
    // orientation inconsistency, invalid edges, non-sphere vertex links
    void validate();
};

Triangulation load_triangulation_json(const std::string &text);
Triangulation load_triangulation_file(const std::string &path);
std::string triangulation_to_json(const Triangulation &t);

// first Betti number over F_p (p prime), from the class chain complex
int homology_b1(const Triangulation &t, int p);

} // namespace tqft
