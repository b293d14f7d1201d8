#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "skeletal/category.hpp"

namespace tqft {

// A formal direct sum of simples. Order of summands matters: it indexes
// the choice functions in fusion trees. The empty object is allowed.
struct Obj {
    std::vector<SimpleId> s;
    bool operator==(const Obj &o) const { return s == o.s; }
    static Obj simple(SimpleId i) { return Obj{{i}}; }
};

// A tensor word of objects; the empty word is the monoidal unit.
struct Word {
    std::vector<Obj> f;
    bool operator==(const Word &o) const { return f == o.f; }
    std::size_t size() const { return f.size(); }
    static Word of(std::initializer_list<Obj> xs) {
        Word w;
        w.f.assign(xs);
        return w;
    }
    Word concat(const Word &o) const {
        Word w = *this;
        w.f.insert(w.f.end(), o.f.begin(), o.f.end());
        return w;
    }
};

// Right-comb fusion tree over an n-factor word:
//   pick[p]          summand choice in factor p             (p = 0..n-1)
//   out[p]           output of vertex p+1, out[0] = root    (p = 0..n-2)
//   mult[p]          multiplicity index at vertex p+1        (p = 0..n-2)
// Vertex p (1-based, p = 1..n-1) fuses (u_p, t_{p+1}) -> t_p where
// u_p is the picked simple of factor p and t_{n} = u_n, t_p = out[p-1].
struct Tree {
    int n = 0;
    std::vector<int> pick;
    std::vector<SimpleId> out;
    std::vector<int> mult;

    bool operator==(const Tree &o) const {
        return n == o.n && pick == o.pick && out == o.out && mult == o.mult;
    }
    SimpleId root(const CategoryData &cat, const Word &w) const {
        if (n == 0)
            return cat.unit;
        if (n == 1)
            return w.f[0].s[static_cast<std::size_t>(pick[0])];
        return out[0];
    }
    // simple at the top of the tail below vertex p (t_{p+1}), p 1-based
    SimpleId tail(const Word &w, int p) const {
        if (p + 1 == n)
            return w.f[static_cast<std::size_t>(n - 1)]
                .s[static_cast<std::size_t>(pick[static_cast<std::size_t>(n - 1)])];
        return out[static_cast<std::size_t>(p)];
    }
    SimpleId picked(const Word &w, int p0) const { // p0 zero-based factor
        return w.f[static_cast<std::size_t>(p0)]
            .s[static_cast<std::size_t>(pick[static_cast<std::size_t>(p0)])];
    }
};

struct TreeHash {
    std::size_t operator()(const Tree &t) const {
        std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(t.n);
        auto mix = [&h](int v) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) +
                 (h >> 2);
        };
        for (int v : t.pick)
            mix(v);
        for (int v : t.out)
            mix(v);
        for (int v : t.mult)
            mix(v);
        return h;
    }
};

struct TreePair {
    Tree src, tgt;
    bool operator==(const TreePair &o) const {
        return src == o.src && tgt == o.tgt;
    }
};
struct TreePairHash {
    std::size_t operator()(const TreePair &p) const {
        return TreeHash{}(p.src) * 0x9e3779b97f4a7c15ull ^ TreeHash{}(p.tgt);
    }
};

// Morphism between tensor words, stored as a sparse coefficient table in
// the normalized tree-pair basis:
//
//   f = sum_{(s,t)} coeff[(s,t)] * ne(t) o proj(s)
//
// where proj(s) is the fusion composite of the chosen vertex bases and
// ne(t) = (prod of d over internal edges) * (splitting composite of dual
// bases). In this normalization composition is plain matrix product over
// matching middle trees and the identity table is the Kronecker delta.
struct Morphism {
    const CategoryData *cat = nullptr;
    Word src, tgt;
    std::unordered_map<TreePair, cplx, TreePairHash> coeff;

    void add(const Tree &s, const Tree &t, cplx v) {
        if (v == cplx(0, 0))
            return;
        coeff[TreePair{s, t}] += v;
    }
    void prune(double eps = 0.0);
};

// ---- tree enumeration ----
std::vector<Tree> enumerate_trees(const CategoryData &cat, const Word &w);
std::vector<Tree> enumerate_trees_rooted(const CategoryData &cat, const Word &w,
                                         SimpleId root);
// product of quantum dimensions over internal edges (the ne-weight)
cplx tree_weight(const CategoryData &cat, const Word &w, const Tree &t);

// ---- basic constructors ----
Morphism morphism_zero(const CategoryData &cat, Word src, Word tgt);
Morphism morphism_identity(const CategoryData &cat, Word w);
// single fusion vertex (i x j -> k, mult m) on the two-simple word
Morphism vertex_fusion(const CategoryData &cat, SimpleId i, SimpleId j,
                       SimpleId k, int m);
Morphism vertex_splitting(const CategoryData &cat, SimpleId i, SimpleId j,
                          SimpleId k, int m);

// ---- linear structure ----
Morphism operator+(const Morphism &a, const Morphism &b);
Morphism operator-(const Morphism &a, const Morphism &b);
Morphism operator*(cplx s, const Morphism &a);
double max_abs_diff(const Morphism &a, const Morphism &b);
double max_abs(const Morphism &a);

// ---- categorical structure ----
Morphism compose(const Morphism &f, const Morphism &g); // f after g
Morphism tensor(const Morphism &f, const Morphism &g);
// exchange factors pos,pos+1 (1-based); over means the left strand
// crosses in front
Morphism braid(const CategoryData &cat, const Word &w, int pos, bool over);

// ---- duality ----
Obj dual_obj(const CategoryData &cat, const Obj &x);
Morphism ev(const CategoryData &cat, const Obj &x);    // x* (x) -> 1
Morphism coev(const CategoryData &cat, const Obj &x);  // 1 -> x (x*)
Morphism tev(const CategoryData &cat, const Obj &x);   // x (x*) -> 1
Morphism tcoev(const CategoryData &cat, const Obj &x); // 1 -> x* (x)

// Bend the last / first factor between source and target.
Morphism bend_right_up(const Morphism &f);   // Hom(U.X, V)  -> Hom(U, V.X*)
Morphism bend_right_down(const Morphism &f); // Hom(U, V.X)  -> Hom(U.X*, V)
Morphism bend_left_up(const Morphism &f);    // Hom(X.U, V)  -> Hom(U, X*.V)
Morphism bend_left_down(const Morphism &f);  // Hom(U, X.V)  -> Hom(X*.U, V)

// Close the last source/target factor (must match) with a right fold.
Morphism partial_trace_right(const Morphism &f);
// Close the first source/target factor with a left fold.
Morphism partial_trace_left(const Morphism &f);
// Full quantum trace of an endomorphism, as a scalar.
cplx trace(const Morphism &f);
cplx scalar_value(const Morphism &f); // for Hom((),()) morphisms

// embed f into a bigger word as id (x) f (x) id
Morphism padded(const Morphism &f, const Word &ambient, std::size_t pos);

std::size_t hom_dim(const CategoryData &cat, const Word &src, const Word &tgt);

// two-sided inverse of an endomorphism, by per-root block inversion;
// throws when a block is singular
Morphism morphism_endo_inverse(const Morphism &f);

// canonical single-factor object isomorphic to the word, with iso pair
struct Objectified {
    Obj obj;
    std::vector<Tree> basis; // tree per summand, fixes the iso
    Morphism embed;          // (obj) -> word
    Morphism retract;        // word -> (obj)
};
Objectified objectify(const CategoryData &cat, const Word &w);

} // namespace tqft
