#include "catalog/triangulations.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tqft {

namespace {

// Assemble a triangulation from tetrahedra given by global vertex labels
// (local order = listed order). Faces carrying the same global triple are
// glued to each other by label matching; `extra` supplies identifications
// between faces with different labels as (tet, face, tet', face',
// global label map restricted to the face). Orientation signs are
// propagated from tet 0.
struct Builder {
    std::vector<std::array<int, 4>> tets;
    struct Extra {
        int t, f, t2, f2;
        std::map<int, int> vmap; // global -> global on the face vertices
    };
    std::vector<Extra> extra;

    Triangulation build(const std::string &name) const {
        Triangulation tr;
        tr.name = name;
        tr.n_tets = static_cast<int>(tets.size());
        tr.glue.assign(tets.size(), {});
        auto face_triple = [&](int t, int f) {
            std::array<int, 3> v{};
            int k = 0;
            for (int i = 0; i < 4; ++i)
                if (i != f)
                    v[static_cast<std::size_t>(k++)] =
                        tets[static_cast<std::size_t>(t)]
                            [static_cast<std::size_t>(i)];
            std::sort(v.begin(), v.end());
            return v;
        };
        auto local_of_global = [&](int t, int g) {
            for (int i = 0; i < 4; ++i)
                if (tets[static_cast<std::size_t>(t)]
                        [static_cast<std::size_t>(i)] == g)
                    return i;
            throw std::runtime_error("builder: global label not in tet");
        };
        auto set_glue = [&](int t, int f, int t2, int f2,
                            const std::map<int, int> &vmap) {
            std::array<int, 4> perm{};
            perm[static_cast<std::size_t>(f)] = f2;
            for (int v = 0; v < 4; ++v) {
                if (v == f)
                    continue;
                const int g = tets[static_cast<std::size_t>(t)]
                                  [static_cast<std::size_t>(v)];
                const int g2 = vmap.count(g) ? vmap.at(g) : g;
                perm[static_cast<std::size_t>(v)] = local_of_global(t2, g2);
            }
            tr.glue[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)] =
                Gluing{t2, f2, perm};
        };

        std::vector<std::array<bool, 4>> used(tets.size(),
                                              {false, false, false, false});
        for (const auto &e : extra) {
            set_glue(e.t, e.f, e.t2, e.f2, e.vmap);
            std::map<int, int> inv;
            for (const auto &[a, b] : e.vmap)
                inv[b] = a;
            set_glue(e.t2, e.f2, e.t, e.f, inv);
            used[static_cast<std::size_t>(e.t)][static_cast<std::size_t>(e.f)] =
                true;
            used[static_cast<std::size_t>(e.t2)]
                [static_cast<std::size_t>(e.f2)] = true;
        }
        // label matching on the rest
        std::map<std::array<int, 3>, std::vector<std::pair<int, int>>> pool;
        for (int t = 0; t < tr.n_tets; ++t)
            for (int f = 0; f < 4; ++f)
                if (!used[static_cast<std::size_t>(t)]
                         [static_cast<std::size_t>(f)])
                    pool[face_triple(t, f)].push_back({t, f});
        for (const auto &[triple, faces] : pool) {
            if (faces.size() != 2)
                throw std::runtime_error(
                    "builder: face triple not matched in pairs");
            const auto [t, f] = faces[0];
            const auto [t2, f2] = faces[1];
            set_glue(t, f, t2, f2, {});
            set_glue(t2, f2, t, f, {});
        }

        // propagate orientations
        tr.orient.assign(tets.size(), 0);
        tr.orient[0] = 1;
        std::vector<int> stack{0};
        auto perm_sign = [](const std::array<int, 4> &p) {
            int s = 1;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (p[static_cast<std::size_t>(i)] >
                        p[static_cast<std::size_t>(j)])
                        s = -s;
            return s;
        };
        while (!stack.empty()) {
            const int t = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const Gluing &g = tr.glue[static_cast<std::size_t>(t)]
                                         [static_cast<std::size_t>(f)];
                const int want = -tr.orient[static_cast<std::size_t>(t)] *
                                 perm_sign(g.perm);
                if (tr.orient[static_cast<std::size_t>(g.tet)] == 0) {
                    tr.orient[static_cast<std::size_t>(g.tet)] = want;
                    stack.push_back(g.tet);
                } else if (tr.orient[static_cast<std::size_t>(g.tet)] != want)
                    throw std::runtime_error("builder: not orientable");
            }
        }
        tr.validate();
        return tr;
    }
};

} // namespace

Triangulation boundary_of_4_simplex() {
    Builder b;
    for (int omit = 0; omit < 5; ++omit) {
        std::array<int, 4> t{};
        int k = 0;
        for (int v = 0; v < 5; ++v)
            if (v != omit)
                t[static_cast<std::size_t>(k++)] = v;
        b.tets.push_back(t);
    }
    Triangulation t = b.build("S3_5tet");
    return t;
}

Triangulation two_tet_sphere() {
    // two tetrahedra on the same vertex set, glued face-to-face by the
    // identity maps (the double of a 3-simplex)
    Triangulation tr;
    tr.name = "S3_2tet";
    tr.n_tets = 2;
    tr.orient = {1, -1};
    tr.glue.assign(2, {});
    for (int f = 0; f < 4; ++f) {
        tr.glue[0][static_cast<std::size_t>(f)] = Gluing{1, f, {0, 1, 2, 3}};
        tr.glue[1][static_cast<std::size_t>(f)] = Gluing{0, f, {0, 1, 2, 3}};
    }
    tr.validate();
    return tr;
}

Triangulation s2_x_s1() {
    // mapping torus of the identity on the 2-triangle sphere; each
    // triangle prism is cut into three tetrahedra by the staircase rule.
    // global labels: bottom sphere 0,1,2; top copy 10,11,12; sphere B has
    // the same vertices (the sphere is two triangles glued along all
    // three edges).
    Builder b;
    auto prism = [&b](std::array<int, 3> u, std::array<int, 3> w) {
        b.tets.push_back({u[0], u[1], u[2], w[2]});
        b.tets.push_back({u[0], u[1], w[1], w[2]});
        b.tets.push_back({u[0], w[0], w[1], w[2]});
    };
    prism({0, 1, 2}, {10, 11, 12}); // tets 0,1,2 over triangle A
    prism({0, 1, 2}, {10, 11, 12}); // tets 3,4,5 over triangle B
    // the two prisms carry identical labels, so every gluing is explicit
    // prism interiors
    b.extra.push_back({0, 2, 1, 2, {}}); // (0,1,12)
    b.extra.push_back({1, 1, 2, 1, {}}); // (0,11,12)
    b.extra.push_back({3, 2, 4, 2, {}});
    b.extra.push_back({4, 1, 5, 1, {}});
    // side quads between the prisms, split along matching diagonals
    b.extra.push_back({0, 0, 3, 0, {}}); // (1,2,12)
    b.extra.push_back({1, 0, 4, 0, {}}); // (1,11,12)
    b.extra.push_back({0, 1, 3, 1, {}}); // (0,2,12)
    b.extra.push_back({2, 2, 5, 2, {}}); // (0,10,12)
    b.extra.push_back({1, 3, 4, 3, {}}); // (0,1,11)
    b.extra.push_back({2, 3, 5, 3, {}}); // (0,10,11)
    // close up the mapping torus: top sphere onto bottom sphere
    b.extra.push_back({2, 0, 0, 3, {{10, 0}, {11, 1}, {12, 2}}});
    b.extra.push_back({5, 0, 3, 3, {{10, 0}, {11, 1}, {12, 2}}});
    return b.build("S2xS1");
}

Triangulation lens_space(int p, int q) {
    if (p < 2)
        throw std::runtime_error("lens_space: need p >= 2");
    // bipyramid over a p-gon: tets (N,S,r_i,r_{i+1}); the top cone faces
    // are glued to the bottom cone faces with a q-step twist.
    Triangulation tr;
    tr.name = p == 2 && q == 1 ? "RP3" : "L(" + std::to_string(p) + "," +
                                             std::to_string(q) + ")";
    tr.n_tets = p;
    tr.glue.assign(static_cast<std::size_t>(p), {});
    // local vertices: 0 = N, 1 = S, 2 = r_i, 3 = r_{i+1}
    for (int i = 0; i < p; ++i) {
        const int nxt = (i + 1) % p;
        // interior face (N,S,r_{i+1}) = face 2 of tet i glues to
        // face 3 = (N,S,r_{i+1}) of tet i+1; map N->N, S->S, r->r
        tr.glue[static_cast<std::size_t>(i)][2] = Gluing{nxt, 3, {0, 1, 3, 2}};
        tr.glue[static_cast<std::size_t>(nxt)][3] = Gluing{i, 2, {0, 1, 3, 2}};
    }
    for (int i = 0; i < p; ++i) {
        const int j = ((i + q) % p + p) % p;
        // top face (N, r_i, r_{i+1}) = face 1 of tet i glues to the
        // bottom face (S, r_j, r_{j+1}) = face 0 of tet j with
        // N->S, r_i->r_j, r_{i+1}->r_{j+1}
        tr.glue[static_cast<std::size_t>(i)][1] = Gluing{j, 0, {1, 0, 2, 3}};
        tr.glue[static_cast<std::size_t>(j)][0] = Gluing{i, 1, {1, 0, 2, 3}};
    }
    tr.orient.assign(static_cast<std::size_t>(p), 0);
    tr.orient[0] = 1;
    // propagate
    std::vector<int> stack{0};
    auto perm_sign = [](const std::array<int, 4> &pm) {
        int s = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (pm[static_cast<std::size_t>(i)] >
                    pm[static_cast<std::size_t>(j)])
                    s = -s;
        return s;
    };
    while (!stack.empty()) {
        const int t = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
            const Gluing &g =
                tr.glue[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
            const int want =
                -tr.orient[static_cast<std::size_t>(t)] * perm_sign(g.perm);
            if (tr.orient[static_cast<std::size_t>(g.tet)] == 0) {
                tr.orient[static_cast<std::size_t>(g.tet)] = want;
                stack.push_back(g.tet);
            } else if (tr.orient[static_cast<std::size_t>(g.tet)] != want)
                throw std::runtime_error("lens_space: not orientable");
        }
    }
    tr.validate();
    return tr;
}

bool is_builtin_triangulation(const std::string &name) {
    return name == "S3_5tet" || name == "S3_2tet" || name == "S2xS1" ||
           name == "RP3" || name == "L(3,1)" || name.rfind("lens:", 0) == 0;
}

Triangulation builtin_triangulation(const std::string &name) {
    if (name == "S3_5tet")
        return boundary_of_4_simplex();
    if (name == "S3_2tet")
        return two_tet_sphere();
    if (name == "S2xS1")
        return s2_x_s1();
    if (name == "RP3")
        return lens_space(2, 1);
    if (name == "L(3,1)")
        return lens_space(3, 1);
    if (name.rfind("lens:", 0) == 0) {
        const auto rest = name.substr(5);
        const auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("lens spec is lens:p:q");
        return lens_space(std::stoi(rest.substr(0, colon)),
                          std::stoi(rest.substr(colon + 1)));
    }
    throw std::runtime_error("unknown builtin triangulation '" + name + "'");
}

std::vector<std::string> builtin_triangulation_names() {
    return {"S3_5tet", "S3_2tet", "S2xS1", "RP3", "L(3,1)"};
}

} // namespace tqft
