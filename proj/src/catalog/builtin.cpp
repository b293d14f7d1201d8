#include "catalog/builtin.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace tqft {

namespace {

const double pi = std::numbers::pi;

void default_pivotal(CategoryData &cat) {
    // pick t_i so that the right trace of id_i is the stored dimension;
    // verify_spherical then independently checks the left trace.
    cat.pivotal.clear();
    cat.finalize();
    std::vector<cplx> t(cat.n_simples());
    for (std::size_t i = 0; i < cat.n_simples(); ++i)
        t[i] = cat.dim[i] / cat.coev_scale[i];
    cat.pivotal = t;
    cat.finalize();
}

void set_group_fusion(CategoryData &cat, int n) {
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            cat.fusion[{a, b, (a + b) % n}] = 1;
    cat.dual.resize(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        cat.dual[static_cast<std::size_t>(a)] = (n - a) % n;
}

} // namespace

CategoryData builtin_vec() {
    CategoryData cat;
    cat.name = "vec";
    cat.names = {"1"};
    cat.unit = 0;
    set_group_fusion(cat, 1);
    cat.dim = {1.0};
    cat.sqrt_dim = {1.0};
    RibbonData rib;
    rib.twist = {1.0};
    CMatrix r(1, 1);
    r(0, 0) = 1.0;
    rib.braid[RKey{0, 0, 0}] = r;
    cat.ribbon = rib;
    default_pivotal(cat);
    return cat;
}

CategoryData builtin_vec_group(int n, int cocycle_k) {
    if (n < 1)
        throw std::runtime_error("vec_g: group order must be positive");
    CategoryData cat;
    std::ostringstream nm;
    nm << "vec_g:Z" << n;
    if (cocycle_k % n != 0)
        nm << ":w" << (cocycle_k % n);
    cat.name = nm.str();
    for (int a = 0; a < n; ++a)
        cat.names.push_back(a == 0 ? "1" : (a == 1 ? "g" : "g" + std::to_string(a)));
    cat.unit = 0;
    set_group_fusion(cat, n);
    cat.dim.assign(static_cast<std::size_t>(n), 1.0);
    cat.sqrt_dim.assign(static_cast<std::size_t>(n), 1.0);

    // standard representative of the cocycle class k in H^3(Z_n, U(1)):
    // w(a,b,c) = exp(2 pi i k a (b + c - [b+c]) / n^2)
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (a == 0 || b == 0 || c == 0)
                    continue; // strict gauge handled by finalize
                const int carry = (b + c) / n;
                const double ang = 2.0 * pi * cocycle_k * a * carry / n;
                const cplx w = std::polar(1.0, ang);
                const int ab = (a + b) % n, bc = (b + c) % n,
                          abc = (a + b + c) % n;
                cat.set_F(a, b, c, abc, ab, 0, bc, 0, 0, 0, w);
            }

    if (cocycle_k % n == 0) {
        // ships with the symmetric flip braiding and trivial twists
        RibbonData rib;
        rib.twist.assign(static_cast<std::size_t>(n), 1.0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                CMatrix r(1, 1);
                r(0, 0) = 1.0;
                rib.braid[RKey{a, b, (a + b) % n}] = r;
            }
        cat.ribbon = rib;
    }
    default_pivotal(cat);
    return cat;
}

CategoryData builtin_vec_z2_chi() {
    CategoryData cat = builtin_vec_group(2, 0);
    cat.name = "vec_z2_chi";
    RibbonData rib;
    rib.twist = {1.0, -1.0};
    auto put = [&rib](int a, int b, int k, cplx v) {
        CMatrix r(1, 1);
        r(0, 0) = v;
        rib.braid[RKey{a, b, k}] = r;
    };
    // c_{a,b} = chi(a,b) id with chi the bicharacter of q(g) = +-i;
    // the twist is the fermionic one forced by the ribbon relation.
    put(0, 0, 0, 1.0);
    put(0, 1, 1, 1.0);
    put(1, 0, 1, 1.0);
    put(1, 1, 0, -1.0);
    cat.ribbon = rib;
    default_pivotal(cat);
    return cat;
}

CategoryData builtin_fibonacci() {
    CategoryData cat;
    cat.name = "fibonacci";
    cat.names = {"1", "tau"};
    cat.unit = 0;
    cat.dual = {0, 1};
    cat.fusion[{0, 0, 0}] = 1;
    cat.fusion[{0, 1, 1}] = 1;
    cat.fusion[{1, 0, 1}] = 1;
    cat.fusion[{1, 1, 0}] = 1;
    cat.fusion[{1, 1, 1}] = 1;
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    cat.dim = {1.0, phi};
    cat.sqrt_dim = {1.0, std::sqrt(phi)};

    cat.set_F(1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1.0 / phi);
    cat.set_F(1, 1, 1, 1, 0, 0, 1, 0, 0, 0, 1.0 / std::sqrt(phi));
    cat.set_F(1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 1.0 / std::sqrt(phi));
    cat.set_F(1, 1, 1, 1, 1, 0, 1, 0, 0, 0, -1.0 / phi);
    cat.set_F(1, 1, 1, 0, 1, 0, 1, 0, 0, 0, 1.0);

    RibbonData rib;
    rib.twist = {1.0, std::polar(1.0, 4.0 * pi / 5.0)};
    auto put = [&rib](int a, int b, int k, cplx v) {
        CMatrix r(1, 1);
        r(0, 0) = v;
        rib.braid[RKey{a, b, k}] = r;
    };
    put(0, 0, 0, 1.0);
    put(0, 1, 1, 1.0);
    put(1, 0, 1, 1.0);
    put(1, 1, 0, std::polar(1.0, -4.0 * pi / 5.0));
    put(1, 1, 1, std::polar(1.0, 3.0 * pi / 5.0));
    cat.ribbon = rib;
    default_pivotal(cat);
    return cat;
}

CategoryData builtin_ising() {
    // underlying category of TY(Z2, chi from q(g)=i, tau=+1/sqrt2),
    // braided as the spin-1/16 Ising modular category.
    CategoryData cat;
    cat.name = "ising";
    cat.names = {"1", "g", "X"};
    cat.unit = 0;
    cat.dual = {0, 1, 2};
    const int I = 0, G = 1, X = 2;
    cat.fusion[{0, 0, 0}] = 1;
    cat.fusion[{0, 1, 1}] = 1;
    cat.fusion[{1, 0, 1}] = 1;
    cat.fusion[{1, 1, 0}] = 1;
    cat.fusion[{0, 2, 2}] = 1;
    cat.fusion[{2, 0, 2}] = 1;
    cat.fusion[{1, 2, 2}] = 1;
    cat.fusion[{2, 1, 2}] = 1;
    cat.fusion[{2, 2, 0}] = 1;
    cat.fusion[{2, 2, 1}] = 1;
    const double s2 = std::sqrt(2.0);
    cat.dim = {1.0, 1.0, s2};
    cat.sqrt_dim = {1.0, 1.0, std::pow(2.0, 0.25)};

    const double chi_gg = -1.0; // chi(g,g) = q(1)/q(g)^2
    const double tau = 1.0 / s2;
    cat.set_F(G, G, G, G, I, 0, I, 0, 0, 0, 1.0);
    cat.set_F(G, G, X, X, I, 0, X, 0, 0, 0, 1.0);
    cat.set_F(G, X, G, X, X, 0, X, 0, 0, 0, chi_gg);
    cat.set_F(X, G, G, X, X, 0, I, 0, 0, 0, 1.0);
    cat.set_F(G, X, X, I, X, 0, G, 0, 0, 0, 1.0);
    cat.set_F(G, X, X, G, X, 0, I, 0, 0, 0, 1.0);
    cat.set_F(X, G, X, I, X, 0, X, 0, 0, 0, 1.0);        // chi(g, 1)
    cat.set_F(X, G, X, G, X, 0, X, 0, 0, 0, chi_gg);     // chi(g, g)
    cat.set_F(X, X, G, I, G, 0, X, 0, 0, 0, 1.0);
    cat.set_F(X, X, G, G, I, 0, X, 0, 0, 0, 1.0);
    // (X,X,X,X): rows c, cols d in {1,g}: tau * chi(c,d)^{-1}
    cat.set_F(X, X, X, X, I, 0, I, 0, 0, 0, tau);
    cat.set_F(X, X, X, X, I, 0, G, 0, 0, 0, tau);
    cat.set_F(X, X, X, X, G, 0, I, 0, 0, 0, tau);
    cat.set_F(X, X, X, X, G, 0, G, 0, 0, 0, tau * chi_gg);

    RibbonData rib;
    rib.twist = {1.0, -1.0, std::polar(1.0, pi / 8.0)};
    auto put = [&rib](int a, int b, int k, cplx v) {
        CMatrix r(1, 1);
        r(0, 0) = v;
        rib.braid[RKey{a, b, k}] = r;
    };
    put(I, I, I, 1.0);
    put(I, G, G, 1.0);
    put(G, I, G, 1.0);
    put(I, X, X, 1.0);
    put(X, I, X, 1.0);
    put(G, G, I, -1.0);
    put(G, X, X, cplx(0, -1));
    put(X, G, X, cplx(0, -1));
    put(X, X, I, std::polar(1.0, -pi / 8.0));
    put(X, X, G, std::polar(1.0, 3.0 * pi / 8.0));
    cat.ribbon = rib;
    default_pivotal(cat);
    return cat;
}

// ---------------------------------------------------------------------------

namespace {
std::vector<std::string> split_spec(const std::string &spec) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : spec) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else
            cur.push_back(ch);
    }
    parts.push_back(cur);
    return parts;
}
} // namespace

bool is_builtin_category(const std::string &spec) {
    const std::string head = split_spec(spec)[0];
    return head == "vec" || head == "vec_g" || head == "vec_z2_chi" ||
           head == "fibonacci" || head == "ising";
}

CategoryData builtin_category(const std::string &spec) {
    auto parts = split_spec(spec);
    const std::string &head = parts[0];
    if (head == "vec")
        return builtin_vec();
    if (head == "vec_z2_chi")
        return builtin_vec_z2_chi();
    if (head == "fibonacci")
        return builtin_fibonacci();
    if (head == "ising")
        return builtin_ising();
    if (head == "vec_g") {
        int n = 2, k = 0;
        for (std::size_t i = 1; i < parts.size(); ++i) {
            const std::string &p = parts[i];
            if (p.rfind("Z", 0) == 0)
                n = std::stoi(p.substr(1));
            else if (p.rfind("cocycle=", 0) == 0) {
                const std::string v = p.substr(8);
                k = (v == "trivial") ? 0 : (v == "w" ? 1 : std::stoi(v));
            }
        }
        return builtin_vec_group(n, k);
    }
    throw std::runtime_error("unknown builtin category '" + spec + "'");
}

std::vector<std::string> builtin_category_names() {
    return {"vec", "vec_g:Z2", "vec_g:Z2:cocycle=w", "vec_z2_chi", "fibonacci",
            "ising"};
}

} // namespace tqft
