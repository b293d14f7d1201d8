#include "statesum/dual.hpp"

#include <algorithm>
#include <stdexcept>

namespace tqft {

std::array<std::array<int, 3>, 4> DualPolyhedron::slot_roles(bool positive) {
    if (positive)
        return {{{RA, RC, RK}, {RB, RJ, RC}, {RA, RB, RD}, {RD, RJ, RK}}};
    return {{{RD, RJ, RK}, {RA, RB, RD}, {RB, RJ, RC}, {RA, RC, RK}}};
}

std::array<bool, 4> DualPolyhedron::slot_is_in() {
    return {true, true, false, false};
}

int DualPolyhedron::pair_role(bool positive, int s1, int s2) {
    if (s1 > s2)
        std::swap(s1, s2);
    // shared role of the two slot triples
    static const int pos[4][4] = {{-1, RC, RA, RK},
                                  {RC, -1, RB, RJ},
                                  {RA, RB, -1, RD},
                                  {RK, RJ, RD, -1}};
    static const int neg[4][4] = {{-1, RD, RJ, RK},
                                  {RD, -1, RB, RA},
                                  {RJ, RB, -1, RC},
                                  {RK, RA, RC, -1}};
    return positive ? pos[s1][s2] : neg[s1][s2];
}

namespace {

// the two local faces containing local edge e
std::array<int, 2> faces_of_edge(int e) {
    auto [a, b] = Triangulation::edge_vertices(e);
    std::array<int, 2> out{};
    int k = 0;
    for (int f = 0; f < 4; ++f)
        if (f != a && f != b)
            out[static_cast<std::size_t>(k++)] = f;
    return out;
}

struct Solver {
    const Triangulation &tri;
    std::vector<TetWiring> wiring;
    std::vector<int> assigned; // 0/1 per tet

    explicit Solver(const Triangulation &t)
        : tri(t), wiring(static_cast<std::size_t>(t.n_tets)),
          assigned(static_cast<std::size_t>(t.n_tets), 0) {}

    // role triple of face f of tet t under the current assignment
    std::array<int, 3> face_triple(int t, int f) const {
        const TetWiring &w = wiring[static_cast<std::size_t>(t)];
        auto roles = DualPolyhedron::slot_roles(w.positive);
        const auto &sr = roles[static_cast<std::size_t>(
            w.slot_of_face[static_cast<std::size_t>(f)])];
        std::array<int, 3> triple{};
        for (int i = 0; i < 3; ++i) {
            // the edge of face f carrying role sr[i]: shared with the slot
            // whose pair-role with this slot is sr[i]
            int found = -1;
            for (int e = 0; e < 6; ++e) {
                auto [fa, fb] = faces_of_edge(e);
                if (fa != f && fb != f)
                    continue;
                if (w.role_of_edge[static_cast<std::size_t>(e)] == sr[static_cast<std::size_t>(i)]) {
                    found = e;
                    break;
                }
            }
            triple[static_cast<std::size_t>(i)] =
                tri.edge_class[static_cast<std::size_t>(t)]
                              [static_cast<std::size_t>(found)];
        }
        return triple;
    }

    bool face_compatible(int t, int f) const {
        const Gluing &g =
            tri.glue[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
        if (!assigned[static_cast<std::size_t>(g.tet)])
            return true;
        const TetWiring &w1 = wiring[static_cast<std::size_t>(t)];
        const TetWiring &w2 = wiring[static_cast<std::size_t>(g.tet)];
        const int s1 = w1.slot_of_face[static_cast<std::size_t>(f)];
        const int s2 = w2.slot_of_face[static_cast<std::size_t>(g.face)];
        const auto in = DualPolyhedron::slot_is_in();
        if (in[static_cast<std::size_t>(s1)] == in[static_cast<std::size_t>(s2)])
            return false;
        return face_triple(t, f) == face_triple(g.tet, g.face);
    }

    bool apply(int t, const std::array<int, 4> &slot_of_face) {
        TetWiring &w = wiring[static_cast<std::size_t>(t)];
        w.positive = tri.orient[static_cast<std::size_t>(t)] > 0;
        w.slot_of_face = slot_of_face;
        for (int f = 0; f < 4; ++f)
            w.face_of_slot[static_cast<std::size_t>(
                slot_of_face[static_cast<std::size_t>(f)])] = f;
        for (int e = 0; e < 6; ++e) {
            auto [fa, fb] = faces_of_edge(e);
            w.role_of_edge[static_cast<std::size_t>(e)] =
                DualPolyhedron::pair_role(
                    w.positive,
                    slot_of_face[static_cast<std::size_t>(fa)],
                    slot_of_face[static_cast<std::size_t>(fb)]);
        }
        assigned[static_cast<std::size_t>(t)] = 1;
        for (int f = 0; f < 4; ++f)
            if (!face_compatible(t, f)) {
                assigned[static_cast<std::size_t>(t)] = 0;
                return false;
            }
        // also re-check faces of neighbours into t handled above (gluing
        // symmetry makes the check two-sided)
        return true;
    }

    bool solve(int t) {
        if (t == tri.n_tets)
            return true;
        std::array<int, 4> perm{0, 1, 2, 3};
        // iterate all 24 assignments in lexicographic order
        std::array<int, 4> idx{0, 1, 2, 3};
        do {
            perm = idx;
            if (apply(t, perm)) {
                if (solve(t + 1))
                    return true;
                assigned[static_cast<std::size_t>(t)] = 0;
            }
        } while (std::next_permutation(idx.begin(), idx.end()));
        return false;
    }
};

} // namespace

DualPolyhedron dual_polyhedron(const Triangulation &tri) {
    Solver s(tri);
    if (!s.solve(0))
        throw std::runtime_error(
            "dual_polyhedron: no consistent leg wiring found for '" +
            tri.name + "'");
    DualPolyhedron dp;
    dp.tri = &tri;
    dp.wiring = std::move(s.wiring);
    dp.faces.assign(static_cast<std::size_t>(tri.n_faces), {});
    Solver view(tri); // reuse face_triple on the solved wiring
    view.wiring = dp.wiring;
    view.assigned.assign(static_cast<std::size_t>(tri.n_tets), 1);
    for (int t = 0; t < tri.n_tets; ++t)
        for (int f = 0; f < 4; ++f) {
            const int cls = tri.face_class[static_cast<std::size_t>(t)]
                                          [static_cast<std::size_t>(f)];
            DualFace &df = dp.faces[static_cast<std::size_t>(cls)];
            const int slot = dp.wiring[static_cast<std::size_t>(t)]
                                 .slot_of_face[static_cast<std::size_t>(f)];
            const auto triple = view.face_triple(t, f);
            df.p = triple[0];
            df.q = triple[1];
            df.r = triple[2];
            if (DualPolyhedron::slot_is_in()[static_cast<std::size_t>(slot)]) {
                df.in_tet = t;
                df.in_face = f;
            } else {
                df.out_tet = t;
                df.out_face = f;
            }
        }
    return dp;
}

} // namespace tqft
