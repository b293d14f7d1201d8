#include "statesum/statesum.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

namespace tqft {

cplx vertex_functional(const CategoryData &S, bool positive,
                       const std::array<SimpleId, 6> &colours,
                       const std::array<int, 4> &mults) {
    const SimpleId a = colours[RA], b = colours[RB], c = colours[RC],
                   d = colours[RD], j = colours[RJ], k = colours[RK];
    const Word wa = Word::of({Obj::simple(a)});
    const Word wj = Word::of({Obj::simple(j)});
    if (positive) {
        if (!S.N(a, c, k) || !S.N(b, j, c) || !S.N(a, b, d) || !S.N(d, j, k))
            return 0.0;
        // fuse along the right-parenthesized tree, split along the left one
        Morphism L = compose(vertex_fusion(S, a, c, k, mults[0]),
                             tensor(morphism_identity(S, wa),
                                    vertex_fusion(S, b, j, c, mults[1])));
        Morphism R = compose(tensor(vertex_splitting(S, a, b, d, mults[2]),
                                    morphism_identity(S, wj)),
                             vertex_splitting(S, d, j, k, mults[3]));
        return trace(compose(L, R));
    }
    if (!S.N(d, j, k) || !S.N(a, b, d) || !S.N(b, j, c) || !S.N(a, c, k))
        return 0.0;
    Morphism L = compose(vertex_fusion(S, d, j, k, mults[0]),
                         tensor(vertex_fusion(S, a, b, d, mults[1]),
                                morphism_identity(S, wj)));
    Morphism R = compose(tensor(morphism_identity(S, wa),
                                vertex_splitting(S, b, j, c, mults[2])),
                         vertex_splitting(S, a, c, k, mults[3]));
    return trace(compose(L, R));
}

namespace {

struct TetKey {
    bool positive;
    std::array<SimpleId, 6> colours;
    std::array<int, 4> mults;
    bool operator<(const TetKey &o) const {
        if (positive != o.positive)
            return positive < o.positive;
        if (colours != o.colours)
            return colours < o.colours;
        return mults < o.mults;
    }
};

// Common enumeration over colourings and leg bases; the per-tetrahedron
// weight is supplied by `tet_value`.
template <typename TetValue>
cplx contract_statesum(const CategoryData &S, const DualPolyhedron &dp,
                       const std::vector<cplx> &region_weight,
                       const TetValue &tet_value, int jobs) {
    const Triangulation &tri = *dp.tri;
    const int ne = tri.n_edges;
    const SimpleId nI = static_cast<SimpleId>(S.n_simples());

    // faces become checkable once their last edge is coloured
    std::vector<std::array<int, 3>> face_edges(
        static_cast<std::size_t>(tri.n_faces));
    for (std::size_t fcls = 0; fcls < dp.faces.size(); ++fcls)
        face_edges[fcls] = {dp.faces[fcls].p, dp.faces[fcls].q,
                            dp.faces[fcls].r};
    std::vector<std::vector<int>> faces_ready_at(
        static_cast<std::size_t>(ne));
    for (int f = 0; f < tri.n_faces; ++f) {
        int last = std::max({face_edges[static_cast<std::size_t>(f)][0],
                             face_edges[static_cast<std::size_t>(f)][1],
                             face_edges[static_cast<std::size_t>(f)][2]});
        faces_ready_at[static_cast<std::size_t>(last)].push_back(f);
    }

    auto eval_colouring = [&](const std::vector<SimpleId> &col) -> cplx {
        // multiplicity ranges per face
        std::vector<int> nmult(static_cast<std::size_t>(tri.n_faces));
        for (int f = 0; f < tri.n_faces; ++f) {
            const auto &fe = face_edges[static_cast<std::size_t>(f)];
            nmult[static_cast<std::size_t>(f)] =
                S.N(col[static_cast<std::size_t>(fe[0])],
                    col[static_cast<std::size_t>(fe[1])],
                    col[static_cast<std::size_t>(fe[2])]);
            if (!nmult[static_cast<std::size_t>(f)])
                return 0.0;
        }
        cplx weight(1, 0);
        for (int e = 0; e < ne; ++e)
            weight *= region_weight[static_cast<std::size_t>(
                col[static_cast<std::size_t>(e)])];

        // iterate the product of face bases
        std::vector<int> mult(static_cast<std::size_t>(tri.n_faces), 0);
        cplx sum(0, 0);
        while (true) {
            cplx prod(1, 0);
            for (int t = 0; t < tri.n_tets && prod != cplx(0, 0); ++t) {
                const TetWiring &w = dp.wiring[static_cast<std::size_t>(t)];
                std::array<SimpleId, 6> colours{};
                for (int e = 0; e < 6; ++e)
                    colours[static_cast<std::size_t>(
                        w.role_of_edge[static_cast<std::size_t>(e)])] =
                        col[static_cast<std::size_t>(
                            tri.edge_class[static_cast<std::size_t>(t)]
                                          [static_cast<std::size_t>(e)])];
                std::array<int, 4> mults{};
                for (int slot = 0; slot < 4; ++slot) {
                    const int f = w.face_of_slot[static_cast<std::size_t>(slot)];
                    mults[static_cast<std::size_t>(slot)] =
                        mult[static_cast<std::size_t>(
                            tri.face_class[static_cast<std::size_t>(t)]
                                          [static_cast<std::size_t>(f)])];
                }
                prod *= tet_value(w.positive, colours, mults);
            }
            sum += prod;
            // odometer over face bases
            int f = 0;
            for (; f < tri.n_faces; ++f) {
                if (++mult[static_cast<std::size_t>(f)] <
                    nmult[static_cast<std::size_t>(f)])
                    break;
                mult[static_cast<std::size_t>(f)] = 0;
            }
            if (f == tri.n_faces)
                break;
        }
        return weight * sum;
    };

    // depth-first colouring with admissibility pruning
    struct Walker {
        const CategoryData &S;
        const std::vector<std::array<int, 3>> &face_edges;
        const std::vector<std::vector<int>> &faces_ready_at;
        const std::function<cplx(const std::vector<SimpleId> &)> &eval;
        std::vector<SimpleId> col;
        int ne;
        SimpleId nI;
        cplx total{0, 0};

        void rec(int e) {
            if (e == ne) {
                total += eval(col);
                return;
            }
            for (SimpleId v = 0; v < nI; ++v) {
                col[static_cast<std::size_t>(e)] = v;
                bool ok = true;
                for (int f : faces_ready_at[static_cast<std::size_t>(e)]) {
                    const auto &fe = face_edges[static_cast<std::size_t>(f)];
                    if (!S.N(col[static_cast<std::size_t>(fe[0])],
                             col[static_cast<std::size_t>(fe[1])],
                             col[static_cast<std::size_t>(fe[2])])) {
                        ok = false;
                        break;
                    }
                }
                if (ok)
                    rec(e + 1);
            }
        }
    };

    std::function<cplx(const std::vector<SimpleId> &)> ev = eval_colouring;
    if (jobs <= 1 || ne == 0) {
        Walker w{S, face_edges, faces_ready_at, ev,
                 std::vector<SimpleId>(static_cast<std::size_t>(ne), 0),
                 ne, nI, cplx(0, 0)};
        w.rec(0);
        return w.total;
    }

    // partition on the first edge colour; deterministic combine
    std::vector<cplx> partial(static_cast<std::size_t>(nI), cplx(0, 0));
    std::vector<std::thread> threads;
    std::size_t next = 0;
    std::mutex mtx;
    auto worker = [&]() {
        while (true) {
            std::size_t mine;
            {
                std::lock_guard<std::mutex> lk(mtx);
                if (next >= static_cast<std::size_t>(nI))
                    return;
                mine = next++;
            }
            Walker w{S, face_edges, faces_ready_at, ev,
                     std::vector<SimpleId>(static_cast<std::size_t>(ne), 0),
                     ne, nI, cplx(0, 0)};
            w.col[0] = static_cast<SimpleId>(mine);
            bool ok = true;
            for (int f : faces_ready_at[0]) {
                const auto &fe = face_edges[static_cast<std::size_t>(f)];
                if (!S.N(w.col[static_cast<std::size_t>(fe[0])],
                         w.col[static_cast<std::size_t>(fe[1])],
                         w.col[static_cast<std::size_t>(fe[2])]))
                    ok = false;
            }
            if (ok)
                w.rec(1);
            partial[mine] = w.total;
        }
    };
    const int nthreads = std::min<int>(jobs, nI);
    for (int i = 0; i < nthreads; ++i)
        threads.emplace_back(worker);
    for (auto &th : threads)
        th.join();
    cplx total(0, 0);
    for (const auto &p : partial)
        total += p;
    return total;
}

} // namespace

cplx tv_invariant(const CategoryData &S, const Triangulation &tri,
                  const StateSumOptions &opt) {
    DualPolyhedron dp = dual_polyhedron(tri);
    std::map<TetKey, cplx> memo;
    std::mutex memo_mtx;
    auto tet_value = [&](bool positive, const std::array<SimpleId, 6> &colours,
                         const std::array<int, 4> &mults) -> cplx {
        TetKey key{positive, colours, mults};
        {
            std::lock_guard<std::mutex> lk(memo_mtx);
            auto it = memo.find(key);
            if (it != memo.end())
                return it->second;
        }
        cplx v = vertex_functional(S, positive, colours, mults);
        std::lock_guard<std::mutex> lk(memo_mtx);
        memo.emplace(key, v);
        return v;
    };
    std::vector<cplx> region_weight(S.n_simples());
    for (std::size_t i = 0; i < S.n_simples(); ++i)
        region_weight[i] = S.dim[i];
    cplx sum = contract_statesum(S, dp, region_weight, tet_value, opt.jobs);
    return sum * std::pow(S.global_dimension(),
                          cplx(-static_cast<double>(tri.n_vertices), 0));
}

cplx orbifold_state_sum(const CategoryData &S, const Triangulation &tri,
                        const StateSumOptions &opt) {
    SphericalDatum sd = from_spherical_category(S);
    const OrbifoldDatum &d = sd.datum;
    DualPolyhedron dp = dual_polyhedron(tri);

    // channel lookup (i,j,k,mult) -> summand index of T
    std::map<std::tuple<int, int, int, int>, int> channel_of;
    for (std::size_t c = 0; c < sd.channels.size(); ++c)
        channel_of[{sd.channels[c].i, sd.channels[c].j, sd.channels[c].k,
                    sd.channels[c].mult}] = static_cast<int>(c);

    auto pick2 = [&](int i, int j) {
        Tree t;
        t.n = 2;
        t.pick = {i, j};
        t.out = {d.cat->unit};
        t.mult = {0};
        return t;
    };
    auto entry = [&](const Morphism &m, int s1, int s2, int t1, int t2) {
        auto it = m.coeff.find(TreePair{pick2(s1, s2), pick2(t1, t2)});
        return it == m.coeff.end() ? cplx(0, 0) : it->second;
    };

    // psi^2 diagonal weights per source simple
    Morphism psi2 = compose(d.psi, d.psi);
    std::vector<cplx> region_weight(S.n_simples(), cplx(0, 0));
    for (std::size_t i = 0; i < S.n_simples(); ++i) {
        Tree p;
        p.n = 1;
        p.pick = {static_cast<int>(i)};
        auto it = psi2.coeff.find(TreePair{p, p});
        region_weight[i] = it == psi2.coeff.end() ? cplx(0, 0) : it->second;
    }

    auto tet_value = [&](bool positive, const std::array<SimpleId, 6> &colours,
                         const std::array<int, 4> &mults) -> cplx {
        const SimpleId a = colours[RA], b = colours[RB], c = colours[RC],
                       dd = colours[RD], j = colours[RJ], k = colours[RK];
        auto ch = [&](SimpleId x, SimpleId y, SimpleId z, int m) {
            auto it = channel_of.find({x, y, z, m});
            return it == channel_of.end() ? -1 : it->second;
        };
        if (positive) {
            const int s1 = ch(a, c, k, mults[0]); // lam
            const int s2 = ch(b, j, c, mults[1]); // mu
            const int s3 = ch(a, b, dd, mults[2]); // mu'
            const int s4 = ch(dd, j, k, mults[3]); // lam'
            if (s1 < 0 || s2 < 0 || s3 < 0 || s4 < 0)
                return 0.0;
            return entry(d.alpha, s1, s2, s4, s3);
        }
        const int s1 = ch(dd, j, k, mults[0]); // lam'
        const int s2 = ch(a, b, dd, mults[1]); // mu'
        const int s3 = ch(b, j, c, mults[2]);  // mu''
        const int s4 = ch(a, c, k, mults[3]);  // lam''
        if (s1 < 0 || s2 < 0 || s3 < 0 || s4 < 0)
            return 0.0;
        return entry(d.alphabar, s1, s2, s4, s3);
    };

    cplx sum = contract_statesum(S, dp, region_weight, tet_value, opt.jobs);
    return sum * std::pow(d.phi_sq,
                          cplx(static_cast<double>(tri.n_vertices), 0));
}

IndependenceResult triangulation_independence(const CategoryData &S,
                                              const Triangulation &t1,
                                              const Triangulation &t2,
                                              const StateSumOptions &opt) {
    IndependenceResult r;
    r.value1 = tv_invariant(S, t1, opt);
    r.value2 = tv_invariant(S, t2, opt);
    r.difference = std::abs(r.value1 - r.value2);
    return r;
}

} // namespace tqft
