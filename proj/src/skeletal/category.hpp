#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "support/cmatrix.hpp"

namespace tqft {

// Simple objects are dense small integers internally; the string tokens
// from the data files live in `names`.
using SimpleId = int;

struct FKey {
    // F-move block key: the four outer labels of the square
    //   (a x b) x j -> k   vs   a x (b x j) -> k
    SimpleId a, b, j, k;
    bool operator==(const FKey &o) const {
        return a == o.a && b == o.b && j == o.j && k == o.k;
    }
};
struct FKeyHash {
    std::size_t operator()(const FKey &k) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : {k.a, k.b, k.j, k.k}) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b9;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct RKey {
    SimpleId i, j, k;
    bool operator==(const RKey &o) const {
        return i == o.i && j == o.j && k == o.k;
    }
};
struct RKeyHash {
    std::size_t operator()(const RKey &k) const {
        return FKeyHash{}(FKey{k.i, k.j, k.k, 0});
    }
};

// Row/column index inside an F-block: intermediate channel plus the two
// vertex multiplicity indices (0-based internally).
struct FBlockIndex {
    SimpleId mid;
    int m1, m2;
    bool operator==(const FBlockIndex &o) const {
        return mid == o.mid && m1 == o.m1 && m2 == o.m2;
    }
};

struct FBlock {
    // left tree basis:  lam:(a,b)->c [mult m1], mu:(c,j)->k [mult m2]
    // right tree basis: mup:(b,j)->d [mult m2'], lamp:(a,d)->k [mult m1']
    // stored matrix M:  [left] = sum_right M[left][right] * [right]
    std::vector<FBlockIndex> left;  // (c, m1, m2)
    std::vector<FBlockIndex> right; // (d, m1', m2') with m1'=(a,d,k), m2'=(b,j,d)
    CMatrix coeff;                  // |left| x |right|
    CMatrix inv;                    // |right| x |left|, filled by finalize()
    bool invertible = false;
};

struct RibbonData {
    // Braid block for (i,j,k): matrix B with
    //   c_{i,j} = sum_k sum_{al,be} B[k](al,be) * emb(tree[(j,i)->k,al]) o proj(tree[(i,j)->k,be])
    // i.e. rows index the (j,i)->k basis, columns the (i,j)->k basis.
    std::unordered_map<RKey, CMatrix, RKeyHash> braid;
    std::vector<cplx> twist; // per simple
    bool has(SimpleId i, SimpleId j, SimpleId k) const {
        return braid.count(RKey{i, j, k}) > 0;
    }
};

struct CheckResult {
    std::string id;
    double residual = 0.0;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::string name;
    std::vector<CheckResult> checks;
    bool passed() const {
        for (const auto &c : checks)
            if (!c.pass)
                return false;
        return true;
    }
    double max_residual() const {
        double m = 0;
        for (const auto &c : checks)
            m = std::max(m, c.residual);
        return m;
    }
    void add(std::string id, double residual, double tol, std::string detail = "");
    void add_flag(std::string id, bool ok, std::string detail = "");
};

class CategoryData {
  public:
    std::string name = "unnamed";
    std::vector<std::string> names;          // simple labels
    SimpleId unit = 0;
    std::vector<SimpleId> dual;              // involution
    std::map<std::tuple<int, int, int>, int> fusion; // (i,j,k) -> N, absent = 0
    std::vector<cplx> dim;                   // quantum dimensions
    std::vector<cplx> sqrt_dim;              // chosen roots (may be empty)
    std::vector<cplx> pivotal;               // t_i, coefficients of the pivot gauge
    std::optional<RibbonData> ribbon;
    double tolerance = 1e-9;

    std::size_t n_simples() const { return names.size(); }
    SimpleId id_of(const std::string &label) const;

    int N(SimpleId i, SimpleId j, SimpleId k) const {
        auto it = fusion.find({i, j, k});
        return it == fusion.end() ? 0 : it->second;
    }

    // Raw F entries are loaded into blocks keyed by the four outer labels.
    void set_F(SimpleId a, SimpleId b, SimpleId j, SimpleId k, SimpleId c,
               int m1, SimpleId d, int m1p, int m2, int m2p, cplx v);

    // Build block matrices, inverses, duality normalizations. Must be
    // called after all tables are populated and before any computation.
    void finalize();

    const FBlock &f_block(SimpleId a, SimpleId b, SimpleId j, SimpleId k) const;
    bool f_block_exists(SimpleId a, SimpleId b, SimpleId j, SimpleId k) const;

    // Duality normalization constants, fixed by the zig-zag equations in
    // the gauge ev_i := (chosen basis of Hom(i* x i -> 1)):
    //   coev_i  = coev_scale[i]  * (dual basis of Hom(1 -> i x i*))
    //   tev_i   = tev_scale[i]   * (basis of Hom(i x i* -> 1))
    //   tcoev_i = tcoev_scale[i] * (dual basis of Hom(1 -> i* x i))
    std::vector<cplx> coev_scale, tev_scale, tcoev_scale;

    cplx global_dimension() const;

    // Braid block access (rows: (j,i)->k basis, cols: (i,j)->k basis).
    const CMatrix &braid_block(SimpleId i, SimpleId j, SimpleId k) const;
    CMatrix braid_block_inv(SimpleId i, SimpleId j, SimpleId k) const;

  private:
    std::unordered_map<FKey, FBlock, FKeyHash> f_blocks_;
    // F-block of a tuple with no admissible trees is represented by absence.
    void build_duality_constants();

    mutable std::unordered_map<RKey, CMatrix, RKeyHash> braid_inv_cache_;
};

// ---- verification passes over a loaded category ----
VerificationReport verify_fusion_ring(const CategoryData &cat);
VerificationReport verify_pentagon(const CategoryData &cat);
VerificationReport verify_spherical(const CategoryData &cat);
VerificationReport verify_ribbon(const CategoryData &cat);
VerificationReport verify_modularity(const CategoryData &cat);

// All applicable verifiers in order; stops adding checks after a failure
// of a stage later stages depend on.
VerificationReport verify_all(const CategoryData &cat);

} // namespace tqft
