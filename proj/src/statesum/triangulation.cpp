#include "statesum/triangulation.hpp"

#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tqft {

int Triangulation::edge_index(int a, int b) {
    if (a > b)
        std::swap(a, b);
    static const int table[4][4] = {{-1, 0, 1, 2},
                                    {0, -1, 3, 4},
                                    {1, 3, -1, 5},
                                    {2, 4, 5, -1}};
    return table[a][b];
}

std::array<int, 2> Triangulation::edge_vertices(int e) {
    static const std::array<int, 2> table[6] = {{0, 1}, {0, 2}, {0, 3},
                                                {1, 2}, {1, 3}, {2, 3}};
    return table[static_cast<std::size_t>(e)];
}

namespace {

int perm_sign(const std::array<int, 4> &p) {
    int s = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)])
                s = -s;
    return s;
}

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(static_cast<std::size_t>(n)) {
        std::iota(up.begin(), up.end(), 0);
    }
    int find(int x) {
        while (up[static_cast<std::size_t>(x)] != x) {
            up[static_cast<std::size_t>(x)] =
                up[static_cast<std::size_t>(up[static_cast<std::size_t>(x)])];
            x = up[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { up[static_cast<std::size_t>(find(a))] = find(b); }
};

} // namespace

void Triangulation::validate() {
    if (n_tets <= 0)
        throw std::runtime_error("triangulation: no tetrahedra");
    if (static_cast<int>(orient.size()) != n_tets ||
        static_cast<int>(glue.size()) != n_tets)
        throw std::runtime_error("triangulation: malformed tables");
    for (int o : orient)
        if (o != 1 && o != -1)
            throw std::runtime_error("triangulation: orientation signs are +-1");

    // gluing involution and orientation compatibility
    for (int t = 0; t < n_tets; ++t)
        for (int f = 0; f < 4; ++f) {
            const Gluing &g = glue[static_cast<std::size_t>(t)]
                                  [static_cast<std::size_t>(f)];
            if (g.tet < 0)
                throw std::runtime_error("triangulation: unglued face " +
                                         std::to_string(t) + ":" +
                                         std::to_string(f));
            if (g.tet >= n_tets || g.face < 0 || g.face > 3)
                throw std::runtime_error("triangulation: dangling gluing");
            if (g.perm[static_cast<std::size_t>(f)] != g.face)
                throw std::runtime_error(
                    "triangulation: gluing permutation must map the omitted "
                    "vertex to the omitted vertex");
            if (g.tet == t && g.face == f)
                throw std::runtime_error(
                    "triangulation: face glued to itself");
            const Gluing &h = glue[static_cast<std::size_t>(g.tet)]
                                  [static_cast<std::size_t>(g.face)];
            if (h.tet != t || h.face != f)
                throw std::runtime_error("triangulation: gluing not involutive");
            for (int v = 0; v < 4; ++v)
                if (h.perm[static_cast<std::size_t>(
                        g.perm[static_cast<std::size_t>(v)])] != v)
                    throw std::runtime_error(
                        "triangulation: gluing permutations not inverse");
            if (orient[static_cast<std::size_t>(t)] *
                    orient[static_cast<std::size_t>(g.tet)] * perm_sign(g.perm) !=
                -1)
                throw std::runtime_error(
                    "triangulation: orientation inconsistency at face " +
                    std::to_string(t) + ":" + std::to_string(f));
        }

    // face classes
    face_class.assign(static_cast<std::size_t>(n_tets), {-1, -1, -1, -1});
    n_faces = 0;
    for (int t = 0; t < n_tets; ++t)
        for (int f = 0; f < 4; ++f) {
            if (face_class[static_cast<std::size_t>(t)]
                          [static_cast<std::size_t>(f)] >= 0)
                continue;
            const Gluing &g = glue[static_cast<std::size_t>(t)]
                                  [static_cast<std::size_t>(f)];
            face_class[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)] =
                n_faces;
            face_class[static_cast<std::size_t>(g.tet)]
                      [static_cast<std::size_t>(g.face)] = n_faces;
            ++n_faces;
        }

    // edge classes over *oriented* edge instances: instance id =
    // 2*(6*t + e) + dir, dir 0 for the increasing-vertex orientation
    UnionFind uf(12 * n_tets);
    auto inst = [](int t, int e, int dir) { return 2 * (6 * t + e) + dir; };
    for (int t = 0; t < n_tets; ++t)
        for (int f = 0; f < 4; ++f) {
            const Gluing &g = glue[static_cast<std::size_t>(t)]
                                  [static_cast<std::size_t>(f)];
            for (int e = 0; e < 6; ++e) {
                auto [a, b] = edge_vertices(e);
                if (a == f || b == f)
                    continue; // edge not on this face
                const int a2 = g.perm[static_cast<std::size_t>(a)];
                const int b2 = g.perm[static_cast<std::size_t>(b)];
                const int e2 = edge_index(a2, b2);
                const int dir = a2 < b2 ? 0 : 1;
                uf.unite(inst(t, e, 0), inst(g.tet, e2, dir));
                uf.unite(inst(t, e, 1), inst(g.tet, e2, 1 - dir));
            }
        }
    edge_class.assign(static_cast<std::size_t>(n_tets), {});
    edge_sign.assign(static_cast<std::size_t>(n_tets), {});
    std::map<int, int> edge_rep;
    n_edges = 0;
    for (int t = 0; t < n_tets; ++t)
        for (int e = 0; e < 6; ++e) {
            const int r0 = uf.find(inst(t, e, 0));
            const int r1 = uf.find(inst(t, e, 1));
            if (r0 == r1)
                throw std::runtime_error(
                    "triangulation: invalid edge (identified with its "
                    "reverse) at tet " +
                    std::to_string(t));
            const int rep = std::min(r0, r1);
            auto it = edge_rep.find(rep);
            if (it == edge_rep.end())
                it = edge_rep.emplace(rep, n_edges++).first;
            edge_class[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)] =
                it->second;
            edge_sign[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)] =
                (rep == r0) ? 1 : -1;
        }

    // vertex classes
    UnionFind vf(4 * n_tets);
    for (int t = 0; t < n_tets; ++t)
        for (int f = 0; f < 4; ++f) {
            const Gluing &g = glue[static_cast<std::size_t>(t)]
                                  [static_cast<std::size_t>(f)];
            for (int v = 0; v < 4; ++v) {
                if (v == f)
                    continue;
                vf.unite(4 * t + v,
                         4 * g.tet + g.perm[static_cast<std::size_t>(v)]);
            }
        }
    vertex_class.assign(static_cast<std::size_t>(n_tets), {});
    std::map<int, int> vrep;
    n_vertices = 0;
    for (int t = 0; t < n_tets; ++t)
        for (int v = 0; v < 4; ++v) {
            const int r = vf.find(4 * t + v);
            auto it = vrep.find(r);
            if (it == vrep.end())
                it = vrep.emplace(r, n_vertices++).first;
            vertex_class[static_cast<std::size_t>(t)]
                        [static_cast<std::size_t>(v)] = it->second;
        }

    // Euler characteristic zero <=> all vertex links are spheres here
    const int chi = n_vertices - n_edges + n_faces - n_tets;
    if (chi != 0)
        throw std::runtime_error(
            "triangulation: non-manifold (Euler characteristic " +
            std::to_string(chi) + ")");
}

// ---------------------------------------------------------------------------

Triangulation load_triangulation_json(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::runtime_error(std::string("triangulation file: ") + e.what());
    }
    if (j.value("format", "") != "tri3/1")
        throw std::runtime_error("triangulation file: missing format tri3/1");
    Triangulation t;
    t.name = j.value("name", "triangulation");
    t.n_tets = j.at("tetrahedra").get<int>();
    t.orient = j.at("orient").get<std::vector<int>>();
    t.glue.assign(static_cast<std::size_t>(t.n_tets), {});
    for (const auto &row : j.at("gluings")) {
        if (!row.is_array() || row.size() != 5)
            throw std::runtime_error(
                "triangulation file: gluing rows are [t,f,t',f',perm]");
        const int a = row[0].get<int>(), fa = row[1].get<int>();
        const int b = row[2].get<int>(), fb = row[3].get<int>();
        std::array<int, 4> perm{};
        for (int i = 0; i < 4; ++i)
            perm[static_cast<std::size_t>(i)] =
                row[4][static_cast<std::size_t>(i)].get<int>();
        if (a < 0 || a >= t.n_tets || b < 0 || b >= t.n_tets)
            throw std::runtime_error("triangulation file: tet out of range");
        t.glue[static_cast<std::size_t>(a)][static_cast<std::size_t>(fa)] =
            Gluing{b, fb, perm};
        std::array<int, 4> inv{};
        for (int i = 0; i < 4; ++i)
            inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
        t.glue[static_cast<std::size_t>(b)][static_cast<std::size_t>(fb)] =
            Gluing{a, fa, inv};
    }
    t.validate();
    return t;
}

Triangulation load_triangulation_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_triangulation_json(ss.str());
}

std::string triangulation_to_json(const Triangulation &t) {
    nlohmann::json j;
    j["format"] = "tri3/1";
    j["name"] = t.name;
    j["tetrahedra"] = t.n_tets;
    j["orient"] = t.orient;
    auto rows = nlohmann::json::array();
    for (int tt = 0; tt < t.n_tets; ++tt)
        for (int f = 0; f < 4; ++f) {
            const Gluing &g = t.glue[static_cast<std::size_t>(tt)]
                                    [static_cast<std::size_t>(f)];
            if (std::make_pair(tt, f) < std::make_pair(g.tet, g.face))
                rows.push_back({tt, f, g.tet, g.face, g.perm});
            else if (g.tet == tt && g.face == f)
                throw std::runtime_error("cannot serialize self-glued face");
        }
    j["gluings"] = rows;
    return j.dump(1);
}

// ---------------------------------------------------------------------------

namespace {
// dense rank over F_p
int rank_mod_p(std::vector<std::vector<int>> m, int p) {
    const std::size_t rows = m.size();
    if (rows == 0)
        return 0;
    const std::size_t cols = m[0].size();
    int rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] % p == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[r], m[piv]);
        // normalize
        int inv = 1;
        for (int k = 1; k < p; ++k)
            if ((m[r][c] * k) % p == 1 || ((m[r][c] * k) % p + p) % p == 1)
                inv = k;
        for (auto &x : m[r])
            x = ((x * inv) % p + p) % p;
        for (std::size_t rr = 0; rr < rows; ++rr) {
            if (rr == r)
                continue;
            const int f = ((m[rr][c] % p) + p) % p;
            if (!f)
                continue;
            for (std::size_t cc = 0; cc < cols; ++cc)
                m[rr][cc] = (((m[rr][cc] - f * m[r][cc]) % p) + p) % p;
        }
        ++r;
        ++rank;
    }
    return rank;
}
} // namespace

int homology_b1(const Triangulation &t, int p) {
    // boundary maps on class chains; signs from the class representatives
    // d1: edges -> vertices, d2: faces -> edges
    std::vector<std::vector<int>> d1(
        static_cast<std::size_t>(t.n_edges),
        std::vector<int>(static_cast<std::size_t>(t.n_vertices), 0));
    std::vector<bool> edge_done(static_cast<std::size_t>(t.n_edges), false);
    for (int tt = 0; tt < t.n_tets; ++tt)
        for (int e = 0; e < 6; ++e) {
            const int cls = t.edge_class[static_cast<std::size_t>(tt)]
                                        [static_cast<std::size_t>(e)];
            if (edge_done[static_cast<std::size_t>(cls)])
                continue;
            edge_done[static_cast<std::size_t>(cls)] = true;
            auto [a, b] = Triangulation::edge_vertices(e);
            const int s = t.edge_sign[static_cast<std::size_t>(tt)]
                                     [static_cast<std::size_t>(e)];
            const int va = t.vertex_class[static_cast<std::size_t>(tt)]
                                         [static_cast<std::size_t>(a)];
            const int vb = t.vertex_class[static_cast<std::size_t>(tt)]
                                         [static_cast<std::size_t>(b)];
            // class orientation: s=+1 means (a->b) is the representative
            d1[static_cast<std::size_t>(cls)][static_cast<std::size_t>(
                s > 0 ? vb : va)] += 1;
            d1[static_cast<std::size_t>(cls)][static_cast<std::size_t>(
                s > 0 ? va : vb)] -= 1;
        }

    std::vector<std::vector<int>> d2(
        static_cast<std::size_t>(t.n_faces),
        std::vector<int>(static_cast<std::size_t>(t.n_edges), 0));
    std::vector<bool> face_done(static_cast<std::size_t>(t.n_faces), false);
    for (int tt = 0; tt < t.n_tets; ++tt)
        for (int f = 0; f < 4; ++f) {
            const int cls = t.face_class[static_cast<std::size_t>(tt)]
                                        [static_cast<std::size_t>(f)];
            if (face_done[static_cast<std::size_t>(cls)])
                continue;
            face_done[static_cast<std::size_t>(cls)] = true;
            // face vertices in increasing local order x0 < x1 < x2
            std::array<int, 3> x{};
            int idx = 0;
            for (int v = 0; v < 4; ++v)
                if (v != f)
                    x[static_cast<std::size_t>(idx++)] = v;
            const int sgns[3] = {1, -1, 1}; // (x1x2), (x0x2), (x0x1)
            const std::array<std::array<int, 2>, 3> es = {
                {{x[1], x[2]}, {x[0], x[2]}, {x[0], x[1]}}};
            for (int i = 0; i < 3; ++i) {
                const int e = Triangulation::edge_index(es[static_cast<std::size_t>(i)][0],
                                                        es[static_cast<std::size_t>(i)][1]);
                const int cls_e = t.edge_class[static_cast<std::size_t>(tt)]
                                              [static_cast<std::size_t>(e)];
                const int s = t.edge_sign[static_cast<std::size_t>(tt)]
                                         [static_cast<std::size_t>(e)];
                d2[static_cast<std::size_t>(cls)][static_cast<std::size_t>(
                    cls_e)] += sgns[i] * s;
            }
        }

    const int rank_d1 = rank_mod_p(d1, p);
    const int rank_d2 = rank_mod_p(d2, p);
    const int ker_d1 = t.n_edges - rank_d1;
    return ker_d1 - rank_d2;
}

} // namespace tqft
