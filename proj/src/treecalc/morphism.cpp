#include "treecalc/morphism.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tqft {

void Morphism::prune(double eps) {
    for (auto it = coeff.begin(); it != coeff.end();)
        if (std::abs(it->second) <= eps)
            it = coeff.erase(it);
        else
            ++it;
}

static void check_same_cat(const Morphism &a, const Morphism &b) {
    if (a.cat != b.cat)
        throw std::runtime_error("morphisms over different categories");
}

// ---------------------------------------------------------------------------
// enumeration

static void enum_rec(const CategoryData &cat, const Word &w, int p, Tree &cur,
                     SimpleId below, std::vector<Tree> &out) {
    // builds picks/vertices from the last factor backwards; `below` is the
    // running tail simple t_{p+2} once factor p+1..n-1 are fixed.
    if (p < 0) {
        out.push_back(cur);
        return;
    }
    const auto &fac = w.f[static_cast<std::size_t>(p)].s;
    const int n = static_cast<int>(w.size());
    for (std::size_t s = 0; s < fac.size(); ++s) {
        cur.pick[static_cast<std::size_t>(p)] = static_cast<int>(s);
        const SimpleId u = fac[s];
        if (p == n - 1) {
            enum_rec(cat, w, p - 1, cur, u, out);
            continue;
        }
        // vertex p+1 (1-based) fuses (u, below) -> t
        for (SimpleId t = 0; t < static_cast<SimpleId>(cat.n_simples()); ++t) {
            const int nm = cat.N(u, below, t);
            for (int m = 0; m < nm; ++m) {
                cur.out[static_cast<std::size_t>(p)] = t;
                cur.mult[static_cast<std::size_t>(p)] = m;
                enum_rec(cat, w, p - 1, cur, t, out);
            }
        }
    }
}

std::vector<Tree> enumerate_trees(const CategoryData &cat, const Word &w) {
    std::vector<Tree> out;
    const int n = static_cast<int>(w.size());
    Tree cur;
    cur.n = n;
    cur.pick.assign(static_cast<std::size_t>(n), 0);
    cur.out.assign(static_cast<std::size_t>(std::max(n - 1, 0)), 0);
    cur.mult.assign(static_cast<std::size_t>(std::max(n - 1, 0)), 0);
    if (n == 0) {
        out.push_back(cur);
        return out;
    }
    enum_rec(cat, w, n - 1, cur, cat.unit, out);
    return out;
}

std::vector<Tree> enumerate_trees_rooted(const CategoryData &cat, const Word &w,
                                         SimpleId root) {
    std::vector<Tree> all = enumerate_trees(cat, w), out;
    for (auto &t : all)
        if (t.root(cat, w) == root)
            out.push_back(std::move(t));
    return out;
}

cplx tree_weight(const CategoryData &cat, const Word &w, const Tree &t) {
    (void)w;
    cplx p(1, 0);
    for (SimpleId e : t.out)
        p *= cat.dim[static_cast<std::size_t>(e)];
    return p;
}

// ---------------------------------------------------------------------------
// constructors

Morphism morphism_zero(const CategoryData &cat, Word src, Word tgt) {
    Morphism m;
    m.cat = &cat;
    m.src = std::move(src);
    m.tgt = std::move(tgt);
    return m;
}

Morphism morphism_identity(const CategoryData &cat, Word w) {
    Morphism m = morphism_zero(cat, w, w);
    for (const auto &t : enumerate_trees(cat, w))
        m.add(t, t, 1.0);
    return m;
}

Morphism vertex_fusion(const CategoryData &cat, SimpleId i, SimpleId j,
                       SimpleId k, int m) {
    if (m < 0 || m >= cat.N(i, j, k))
        throw std::runtime_error("vertex_fusion: inadmissible channel");
    Morphism f = morphism_zero(cat, Word::of({Obj::simple(i), Obj::simple(j)}),
                               Word::of({Obj::simple(k)}));
    Tree s;
    s.n = 2;
    s.pick = {0, 0};
    s.out = {k};
    s.mult = {m};
    Tree t;
    t.n = 1;
    t.pick = {0};
    f.add(s, t, 1.0);
    return f;
}

Morphism vertex_splitting(const CategoryData &cat, SimpleId i, SimpleId j,
                          SimpleId k, int m) {
    if (m < 0 || m >= cat.N(i, j, k))
        throw std::runtime_error("vertex_splitting: inadmissible channel");
    Morphism f = morphism_zero(cat, Word::of({Obj::simple(k)}),
                               Word::of({Obj::simple(i), Obj::simple(j)}));
    Tree s;
    s.n = 1;
    s.pick = {0};
    Tree t;
    t.n = 2;
    t.pick = {0, 0};
    t.out = {k};
    t.mult = {m};
    f.add(s, t, cplx(1, 0) / cat.dim[static_cast<std::size_t>(k)]);
    return f;
}

// ---------------------------------------------------------------------------
// linear structure

Morphism operator+(const Morphism &a, const Morphism &b) {
    check_same_cat(a, b);
    if (!(a.src == b.src) || !(a.tgt == b.tgt))
        throw std::runtime_error("morphism sum: word mismatch");
    Morphism r = a;
    for (const auto &[k, v] : b.coeff)
        r.coeff[k] += v;
    r.prune();
    return r;
}

Morphism operator-(const Morphism &a, const Morphism &b) {
    check_same_cat(a, b);
    if (!(a.src == b.src) || !(a.tgt == b.tgt))
        throw std::runtime_error("morphism difference: word mismatch");
    Morphism r = a;
    for (const auto &[k, v] : b.coeff)
        r.coeff[k] -= v;
    r.prune();
    return r;
}

Morphism operator*(cplx s, const Morphism &a) {
    Morphism r = a;
    for (auto &[k, v] : r.coeff)
        v *= s;
    return r;
}

double max_abs_diff(const Morphism &a, const Morphism &b) {
    if (!(a.src == b.src) || !(a.tgt == b.tgt))
        throw std::runtime_error("morphism comparison: word mismatch");
    double m = 0;
    for (const auto &[k, v] : a.coeff) {
        auto it = b.coeff.find(k);
        m = std::max(m, std::abs(v - (it == b.coeff.end() ? cplx(0, 0)
                                                          : it->second)));
    }
    for (const auto &[k, v] : b.coeff)
        if (!a.coeff.count(k))
            m = std::max(m, std::abs(v));
    return m;
}

double max_abs(const Morphism &a) {
    double m = 0;
    for (const auto &[k, v] : a.coeff)
        m = std::max(m, std::abs(v));
    return m;
}

// ---------------------------------------------------------------------------
// composition

Morphism compose(const Morphism &f, const Morphism &g) {
    check_same_cat(f, g);
    if (!(g.tgt == f.src))
        throw std::runtime_error("compose: source/target word mismatch");
    Morphism r = morphism_zero(*f.cat, g.src, f.tgt);
    std::unordered_map<Tree, std::vector<std::pair<const Tree *, cplx>>,
                       TreeHash>
        by_mid;
    for (const auto &[k, v] : g.coeff)
        by_mid[k.tgt].push_back({&k.src, v});
    for (const auto &[k, v] : f.coeff) {
        auto it = by_mid.find(k.src);
        if (it == by_mid.end())
            continue;
        for (const auto &[sp, vg] : it->second)
            r.add(*sp, k.tgt, v * vg);
    }
    r.prune(1e-15);
    return r;
}

// ---------------------------------------------------------------------------
// tensor product: fusion of comb bases via F-moves

namespace {

using TreeMap = std::unordered_map<Tree, cplx, TreeHash>;

Word drop_first(const Word &w) {
    Word r;
    r.f.assign(w.f.begin() + 1, w.f.end());
    return r;
}

Tree tree_drop_first(const Tree &t) {
    Tree r;
    r.n = t.n - 1;
    r.pick.assign(t.pick.begin() + 1, t.pick.end());
    if (r.n >= 1) {
        r.out.assign(t.out.begin() + (t.n >= 2 ? 1 : 0), t.out.end());
        r.mult.assign(t.mult.begin() + (t.n >= 2 ? 1 : 0), t.mult.end());
    }
    return r;
}

Tree tree_prepend(int pick0, SimpleId root, int mult0, const Tree &rest) {
    Tree r;
    r.n = rest.n + 1;
    r.pick.reserve(static_cast<std::size_t>(r.n));
    r.pick.push_back(pick0);
    r.pick.insert(r.pick.end(), rest.pick.begin(), rest.pick.end());
    if (r.n >= 2) {
        r.out.push_back(root);
        r.out.insert(r.out.end(), rest.out.begin(), rest.out.end());
        r.mult.push_back(mult0);
        r.mult.insert(r.mult.end(), rest.mult.begin(), rest.mult.end());
    }
    return r;
}

// lambda_m^{(r1,r3)->R} o (proj(s1) (x) proj(s3)) expanded over comb trees
// of w1.w3 (fusion side).
TreeMap fuse_trees(const CategoryData &cat, const Word &w1, const Tree &s1,
                   const Word &w3, const Tree &s3, SimpleId R, int m) {
    TreeMap out;
    if (w1.size() == 0) {
        if (s3.root(cat, w3) == R && m == 0)
            out[s3] = 1.0;
        return out;
    }
    const SimpleId a = s1.picked(w1, 0);
    const SimpleId r1 = s1.root(cat, w1);
    const SimpleId r1p = s1.n >= 2 ? s1.tail(w1, 1) : cat.unit;
    const int m1 = s1.n >= 2 ? s1.mult[0] : 0;
    const SimpleId r3 = s3.root(cat, w3);
    if (!cat.f_block_exists(a, r1p, r3, R))
        return out;
    const FBlock &blk = cat.f_block(a, r1p, r3, R);
    long row = -1;
    for (std::size_t r = 0; r < blk.left.size(); ++r)
        if (blk.left[r] == FBlockIndex{r1, m1, m}) {
            row = static_cast<long>(r);
            break;
        }
    if (row < 0)
        return out;
    const Word w1p = drop_first(w1);
    const Tree s1p = tree_drop_first(s1);
    for (std::size_t col = 0; col < blk.right.size(); ++col) {
        const cplx v = blk.coeff(static_cast<std::size_t>(row), col);
        if (v == cplx(0, 0))
            continue;
        const SimpleId d = blk.right[col].mid;
        const int m1p = blk.right[col].m1; // (a,d)->R
        const int m2p = blk.right[col].m2; // (r1p,r3)->d
        TreeMap inner = fuse_trees(cat, w1p, s1p, w3, s3, d, m2p);
        for (const auto &[t, c] : inner)
            out[tree_prepend(s1.pick[0], R, m1p, t)] += v * c;
    }
    return out;
}

// (ne(t2) (x) ne(t4)) o hat-lambda_m^{(r2,r4)->R} expanded over ne() of comb
// trees of w2.w4 (splitting side).
TreeMap esplit_trees(const CategoryData &cat, const Word &w2, const Tree &t2,
                     const Word &w4, const Tree &t4, SimpleId R, int m) {
    TreeMap out;
    const SimpleId r4 = t4.root(cat, w4);
    if (w2.size() == 0) {
        if (r4 == R && m == 0)
            out[t4] = cplx(1, 0) / cat.dim[static_cast<std::size_t>(r4)];
        return out;
    }
    const SimpleId a = t2.picked(w2, 0);
    const SimpleId r2 = t2.root(cat, w2);
    const SimpleId r2p = t2.n >= 2 ? t2.tail(w2, 1) : cat.unit;
    const int m2 = t2.n >= 2 ? t2.mult[0] : 0;
    if (!cat.f_block_exists(a, r2p, r4, R))
        return out;
    const FBlock &blk = cat.f_block(a, r2p, r4, R);
    if (!blk.invertible)
        throw std::runtime_error("tensor: non-invertible F block");
    long lcol = -1;
    for (std::size_t r = 0; r < blk.left.size(); ++r)
        if (blk.left[r] == FBlockIndex{r2, m2, m}) {
            lcol = static_cast<long>(r);
            break;
        }
    if (lcol < 0)
        return out;
    const Word w2p = drop_first(w2);
    const Tree t2p = tree_drop_first(t2);
    for (std::size_t rr = 0; rr < blk.right.size(); ++rr) {
        const cplx v = blk.inv(rr, static_cast<std::size_t>(lcol));
        if (v == cplx(0, 0))
            continue;
        const SimpleId del = blk.right[rr].mid;
        const int m1p = blk.right[rr].m1; // (a,del)->R
        const int m2p = blk.right[rr].m2; // (r2p,r4)->del
        const cplx w = v * cat.dim[static_cast<std::size_t>(del)] /
                       cat.dim[static_cast<std::size_t>(R)];
        TreeMap inner = esplit_trees(cat, w2p, t2p, w4, t4, del, m2p);
        for (const auto &[t, c] : inner)
            out[tree_prepend(t2.pick[0], R, m1p, t)] += w * c;
    }
    return out;
}

} // namespace

Morphism tensor(const Morphism &f, const Morphism &g) {
    check_same_cat(f, g);
    const CategoryData &cat = *f.cat;
    Morphism r = morphism_zero(cat, f.src.concat(g.src), f.tgt.concat(g.tgt));
    const SimpleId ns = static_cast<SimpleId>(cat.n_simples());
    for (const auto &[kf, vf] : f.coeff)
        for (const auto &[kg, vg] : g.coeff) {
            const SimpleId r1 = kf.src.root(cat, f.src);
            const SimpleId r3 = kg.src.root(cat, g.src);
            for (SimpleId R = 0; R < ns; ++R) {
                const int nm = cat.N(r1, r3, R);
                for (int m = 0; m < nm; ++m) {
                    TreeMap F =
                        fuse_trees(cat, f.src, kf.src, g.src, kg.src, R, m);
                    if (F.empty())
                        continue;
                    TreeMap E =
                        esplit_trees(cat, f.tgt, kf.tgt, g.tgt, kg.tgt, R, m);
                    if (E.empty())
                        continue;
                    const cplx dR = cat.dim[static_cast<std::size_t>(R)];
                    for (const auto &[ts, cs] : F)
                        for (const auto &[tt, ct] : E)
                            r.add(ts, tt, vf * vg * dR * cs * ct);
                }
            }
        }
    r.prune(1e-15);
    return r;
}

// ---------------------------------------------------------------------------
// braiding

Morphism braid(const CategoryData &cat, const Word &w, int pos, bool over) {
    const int n = static_cast<int>(w.size());
    if (pos < 1 || pos + 1 > n)
        throw std::runtime_error("braid: position out of range");
    if (!cat.ribbon)
        throw std::runtime_error("braid: category has no ribbon data");
    Word tw = w;
    std::swap(tw.f[static_cast<std::size_t>(pos - 1)],
              tw.f[static_cast<std::size_t>(pos)]);
    Morphism r = morphism_zero(cat, w, tw);

    for (const auto &s : enumerate_trees(cat, w)) {
        const SimpleId a = s.picked(w, pos - 1);
        const SimpleId b = s.picked(w, pos);
        if (pos + 1 == n) {
            // last vertex carries the pair directly
            const SimpleId k = s.n >= 2 ? s.out[static_cast<std::size_t>(n - 2)]
                                        : cat.unit;
            const int me = s.mult[static_cast<std::size_t>(n - 2)];
            const CMatrix R0 =
                over ? cat.braid_block(a, b, k) : cat.braid_block_inv(b, a, k);
            for (std::size_t row = 0; row < R0.rows(); ++row) {
                const cplx v = R0(row, static_cast<std::size_t>(me));
                if (v == cplx(0, 0))
                    continue;
                Tree t = s;
                std::swap(t.pick[static_cast<std::size_t>(pos - 1)],
                          t.pick[static_cast<std::size_t>(pos)]);
                t.mult[static_cast<std::size_t>(n - 2)] =
                    static_cast<int>(row);
                r.add(s, t, v);
            }
            continue;
        }
        const SimpleId k = s.out[static_cast<std::size_t>(pos - 1)];
        const SimpleId mid = s.out[static_cast<std::size_t>(pos)];
        const SimpleId tail = s.tail(w, pos + 1);
        const int m1 = s.mult[static_cast<std::size_t>(pos - 1)];
        const int m2 = s.mult[static_cast<std::size_t>(pos)];
        const FBlock &A = cat.f_block(a, b, tail, k);
        if (!A.invertible)
            throw std::runtime_error("braid: non-invertible F block");
        const FBlock &B = cat.f_block(b, a, tail, k);
        long rc = -1;
        for (std::size_t c = 0; c < A.right.size(); ++c)
            if (A.right[c] == FBlockIndex{mid, m1, m2}) {
                rc = static_cast<long>(c);
                break;
            }
        if (rc < 0)
            continue;
        for (std::size_t lc = 0; lc < A.left.size(); ++lc) {
            const cplx v1 = A.inv(static_cast<std::size_t>(rc), lc);
            if (v1 == cplx(0, 0))
                continue;
            const SimpleId c = A.left[lc].mid;
            const int mc1 = A.left[lc].m1; // (a,b)->c
            const int mc2 = A.left[lc].m2; // (c,tail)->k
            const CMatrix R0 =
                over ? cat.braid_block(a, b, c) : cat.braid_block_inv(b, a, c);
            for (std::size_t mb = 0; mb < R0.rows(); ++mb) {
                const cplx v2 = R0(mb, static_cast<std::size_t>(mc1));
                if (v2 == cplx(0, 0))
                    continue;
                // row of B.left with channel (c, mb, mc2)
                long brow = -1;
                for (std::size_t rr = 0; rr < B.left.size(); ++rr)
                    if (B.left[rr] ==
                        FBlockIndex{c, static_cast<int>(mb), mc2}) {
                        brow = static_cast<long>(rr);
                        break;
                    }
                if (brow < 0)
                    continue;
                for (std::size_t bc = 0; bc < B.right.size(); ++bc) {
                    const cplx v3 = B.coeff(static_cast<std::size_t>(brow), bc);
                    if (v3 == cplx(0, 0))
                        continue;
                    Tree t = s;
                    std::swap(t.pick[static_cast<std::size_t>(pos - 1)],
                              t.pick[static_cast<std::size_t>(pos)]);
                    t.out[static_cast<std::size_t>(pos)] = B.right[bc].mid;
                    t.mult[static_cast<std::size_t>(pos - 1)] = B.right[bc].m1;
                    t.mult[static_cast<std::size_t>(pos)] = B.right[bc].m2;
                    r.add(s, t, v1 * v2 * v3);
                }
            }
        }
    }
    r.prune(1e-15);
    return r;
}

// ---------------------------------------------------------------------------
// duality

Obj dual_obj(const CategoryData &cat, const Obj &x) {
    Obj d;
    d.s.reserve(x.s.size());
    for (SimpleId u : x.s)
        d.s.push_back(cat.dual[static_cast<std::size_t>(u)]);
    return d;
}

static Tree pair_tree(SimpleId root, int pick_a, int pick_b, int mult) {
    Tree t;
    t.n = 2;
    t.pick = {pick_a, pick_b};
    t.out = {root};
    t.mult = {mult};
    return t;
}

Morphism ev(const CategoryData &cat, const Obj &x) {
    Obj xd = dual_obj(cat, x);
    Morphism m = morphism_zero(cat, Word::of({xd, x}), Word{});
    Tree unit_t;
    unit_t.n = 0;
    for (std::size_t i = 0; i < x.s.size(); ++i)
        m.add(pair_tree(cat.unit, static_cast<int>(i), static_cast<int>(i), 0),
              unit_t, 1.0);
    return m;
}

Morphism coev(const CategoryData &cat, const Obj &x) {
    Obj xd = dual_obj(cat, x);
    Morphism m = morphism_zero(cat, Word{}, Word::of({x, xd}));
    Tree unit_t;
    unit_t.n = 0;
    for (std::size_t i = 0; i < x.s.size(); ++i)
        m.add(unit_t,
              pair_tree(cat.unit, static_cast<int>(i), static_cast<int>(i), 0),
              cat.coev_scale[static_cast<std::size_t>(x.s[i])]);
    return m;
}

Morphism tev(const CategoryData &cat, const Obj &x) {
    Obj xd = dual_obj(cat, x);
    Morphism m = morphism_zero(cat, Word::of({x, xd}), Word{});
    Tree unit_t;
    unit_t.n = 0;
    for (std::size_t i = 0; i < x.s.size(); ++i)
        m.add(pair_tree(cat.unit, static_cast<int>(i), static_cast<int>(i), 0),
              unit_t, cat.tev_scale[static_cast<std::size_t>(x.s[i])]);
    return m;
}

Morphism tcoev(const CategoryData &cat, const Obj &x) {
    Obj xd = dual_obj(cat, x);
    Morphism m = morphism_zero(cat, Word{}, Word::of({xd, x}));
    Tree unit_t;
    unit_t.n = 0;
    for (std::size_t i = 0; i < x.s.size(); ++i)
        m.add(unit_t,
              pair_tree(cat.unit, static_cast<int>(i), static_cast<int>(i), 0),
              cat.tcoev_scale[static_cast<std::size_t>(x.s[i])]);
    return m;
}

Morphism bend_right_up(const Morphism &f) {
    const CategoryData &cat = *f.cat;
    if (f.src.size() == 0)
        throw std::runtime_error("bend_right_up: empty source");
    const Obj x = f.src.f.back();
    Word u = f.src;
    u.f.pop_back();
    Morphism step1 = tensor(morphism_identity(cat, u), coev(cat, x));
    Morphism step2 = tensor(f, morphism_identity(cat, Word::of({dual_obj(cat, x)})));
    return compose(step2, step1);
}

Morphism bend_right_down(const Morphism &f) {
    const CategoryData &cat = *f.cat;
    if (f.tgt.size() == 0)
        throw std::runtime_error("bend_right_down: empty target");
    const Obj x = f.tgt.f.back();
    Word v = f.tgt;
    v.f.pop_back();
    Morphism step1 = tensor(f, morphism_identity(cat, Word::of({dual_obj(cat, x)})));
    Morphism step2 = tensor(morphism_identity(cat, v), tev(cat, x));
    return compose(step2, step1);
}

Morphism bend_left_up(const Morphism &f) {
    const CategoryData &cat = *f.cat;
    if (f.src.size() == 0)
        throw std::runtime_error("bend_left_up: empty source");
    const Obj x = f.src.f.front();
    Word u;
    u.f.assign(f.src.f.begin() + 1, f.src.f.end());
    Morphism step1 = tensor(tcoev(cat, x), morphism_identity(cat, u));
    Morphism step2 = tensor(morphism_identity(cat, Word::of({dual_obj(cat, x)})), f);
    return compose(step2, step1);
}

Morphism bend_left_down(const Morphism &f) {
    const CategoryData &cat = *f.cat;
    if (f.tgt.size() == 0)
        throw std::runtime_error("bend_left_down: empty target");
    const Obj x = f.tgt.f.front();
    Word v;
    v.f.assign(f.tgt.f.begin() + 1, f.tgt.f.end());
    Morphism step1 = tensor(morphism_identity(cat, Word::of({dual_obj(cat, x)})), f);
    Morphism step2 = tensor(ev(cat, x), morphism_identity(cat, v));
    return compose(step2, step1);
}

Morphism partial_trace_right(const Morphism &f) {
    const CategoryData &cat = *f.cat;
    if (f.src.size() == 0 || f.tgt.size() == 0 ||
        !(f.src.f.back() == f.tgt.f.back()))
        throw std::runtime_error("partial_trace_right: factor mismatch");
    const Obj x = f.src.f.back();
    Word u = f.src;
    u.f.pop_back();
    Word v = f.tgt;
    v.f.pop_back();
    Obj xd = dual_obj(cat, x);
    Morphism s1 = tensor(morphism_identity(cat, u), coev(cat, x));
    Morphism s2 = tensor(f, morphism_identity(cat, Word::of({xd})));
    Morphism s3 = tensor(morphism_identity(cat, v), tev(cat, x));
    return compose(s3, compose(s2, s1));
}

Morphism partial_trace_left(const Morphism &f) {
    const CategoryData &cat = *f.cat;
    if (f.src.size() == 0 || f.tgt.size() == 0 ||
        !(f.src.f.front() == f.tgt.f.front()))
        throw std::runtime_error("partial_trace_left: factor mismatch");
    const Obj x = f.src.f.front();
    Word u;
    u.f.assign(f.src.f.begin() + 1, f.src.f.end());
    Word v;
    v.f.assign(f.tgt.f.begin() + 1, f.tgt.f.end());
    Obj xd = dual_obj(cat, x);
    Morphism s1 = tensor(tcoev(cat, x), morphism_identity(cat, u));
    Morphism s2 = tensor(morphism_identity(cat, Word::of({xd})), f);
    Morphism s3 = tensor(ev(cat, x), morphism_identity(cat, v));
    return compose(s3, compose(s2, s1));
}

cplx trace(const Morphism &f) {
    if (!(f.src == f.tgt))
        throw std::runtime_error("trace: not an endomorphism");
    Morphism g = f;
    while (g.src.size() > 0)
        g = partial_trace_right(g);
    return scalar_value(g);
}

cplx scalar_value(const Morphism &f) {
    if (f.src.size() != 0 || f.tgt.size() != 0)
        throw std::runtime_error("scalar_value: morphism is not an endomorphism "
                                 "of the unit");
    Tree t;
    t.n = 0;
    auto it = f.coeff.find(TreePair{t, t});
    return it == f.coeff.end() ? cplx(0, 0) : it->second;
}

Morphism padded(const Morphism &f, const Word &ambient, std::size_t pos) {
    const CategoryData &cat = *f.cat;
    if (pos + f.src.size() > ambient.size())
        throw std::runtime_error("padded: slice out of range");
    Word pre, post;
    pre.f.assign(ambient.f.begin(), ambient.f.begin() + static_cast<long>(pos));
    post.f.assign(ambient.f.begin() + static_cast<long>(pos + f.src.size()),
                  ambient.f.end());
    for (std::size_t i = 0; i < f.src.size(); ++i)
        if (!(ambient.f[pos + i] == f.src.f[i]))
            throw std::runtime_error("padded: slice does not match source");
    Morphism r = tensor(morphism_identity(cat, pre), f);
    return tensor(r, morphism_identity(cat, post));
}

std::size_t hom_dim(const CategoryData &cat, const Word &src, const Word &tgt) {
    std::size_t total = 0;
    std::vector<std::size_t> per_root(cat.n_simples(), 0);
    for (const auto &t : enumerate_trees(cat, tgt))
        per_root[static_cast<std::size_t>(t.root(cat, tgt))]++;
    for (const auto &t : enumerate_trees(cat, src))
        total += per_root[static_cast<std::size_t>(t.root(cat, src))];
    return total;
}

Morphism morphism_endo_inverse(const Morphism &f) {
    const CategoryData &cat = *f.cat;
    if (!(f.src == f.tgt))
        throw std::runtime_error("morphism_endo_inverse: not an endomorphism");
    std::vector<std::vector<Tree>> by_root(cat.n_simples());
    for (const auto &t : enumerate_trees(cat, f.src))
        by_root[static_cast<std::size_t>(t.root(cat, f.src))].push_back(t);
    Morphism inv = morphism_zero(cat, f.src, f.src);
    for (const auto &basis : by_root) {
        if (basis.empty())
            continue;
        CMatrix block(basis.size(), basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                auto it = f.coeff.find(TreePair{basis[j], basis[i]});
                if (it != f.coeff.end())
                    block(i, j) = it->second;
            }
        CMatrix bi = block.inverse(cat.tolerance);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j)
                inv.add(basis[j], basis[i], bi(i, j));
    }
    inv.prune(1e-15);
    return inv;
}

Objectified objectify(const CategoryData &cat, const Word &w) {
    Objectified o;
    o.basis = enumerate_trees(cat, w);
    for (const auto &t : o.basis)
        o.obj.s.push_back(t.root(cat, w));
    o.embed = morphism_zero(cat, Word::of({o.obj}), w);
    o.retract = morphism_zero(cat, w, Word::of({o.obj}));
    for (std::size_t i = 0; i < o.basis.size(); ++i) {
        Tree p;
        p.n = 1;
        p.pick = {static_cast<int>(i)};
        o.embed.add(p, o.basis[i], 1.0);
        o.retract.add(o.basis[i], p, 1.0);
    }
    return o;
}

} // namespace tqft
