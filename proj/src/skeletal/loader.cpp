#include "skeletal/loader.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace tqft {

using nlohmann::json;

namespace {

cplx json_complex(const json &re, const json &im) {
    return cplx(re.get<double>(), im.get<double>());
}

SimpleId index1(const CategoryData &cat, const json &j, const char *what) {
    // 1-based integer index into the simples array
    if (!j.is_number_integer())
        throw std::runtime_error(std::string("expected 1-based index for ") +
                                 what);
    const long v = j.get<long>();
    if (v < 1 || v > static_cast<long>(cat.n_simples()))
        throw std::runtime_error(std::string(what) + ": index " +
                                 std::to_string(v) + " out of range");
    return static_cast<SimpleId>(v - 1);
}

} // namespace

CategoryData load_category_json(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::runtime_error(std::string("category file: ") + e.what());
    }
    if (!j.is_object() || j.value("format", "") != "fuscat/1")
        throw std::runtime_error("category file: missing format \"fuscat/1\"");

    CategoryData cat;
    cat.name = j.value("name", "unnamed");
    if (!j.contains("simples") || !j["simples"].is_array() ||
        j["simples"].empty())
        throw std::runtime_error("category file: missing simples");
    std::set<std::string> seen;
    for (const auto &s : j["simples"]) {
        const std::string lab = s.get<std::string>();
        if (lab.empty())
            throw std::runtime_error("category file: empty simple label");
        if (!seen.insert(lab).second)
            throw std::runtime_error("category file: duplicate simple label '" +
                                     lab + "'");
        cat.names.push_back(lab);
    }
    if (!j.contains("unit"))
        throw std::runtime_error("category file: missing unit");
    cat.unit = cat.id_of(j["unit"].get<std::string>());

    cat.dual.assign(cat.n_simples(), -1);
    if (!j.contains("dual"))
        throw std::runtime_error("category file: missing dual map");
    for (const auto &[k, v] : j["dual"].items())
        cat.dual[static_cast<std::size_t>(cat.id_of(k))] =
            cat.id_of(v.get<std::string>());
    for (std::size_t i = 0; i < cat.n_simples(); ++i)
        if (cat.dual[i] < 0)
            throw std::runtime_error("category file: dual map misses '" +
                                     cat.names[i] + "'");

    if (!j.contains("N") || !j["N"].is_array())
        throw std::runtime_error("category file: missing N table");
    for (const auto &row : j["N"]) {
        if (!row.is_array() || row.size() != 4)
            throw std::runtime_error("category file: N rows are [i,j,k,n]");
        const SimpleId a = index1(cat, row[0], "N.i");
        const SimpleId b = index1(cat, row[1], "N.j");
        const SimpleId c = index1(cat, row[2], "N.k");
        const int n = row[3].get<int>();
        if (n < 0)
            throw std::runtime_error("category file: negative multiplicity");
        if (n > 0)
            cat.fusion[{a, b, c}] = n;
    }

    cat.dim.assign(cat.n_simples(), cplx(0, 0));
    if (!j.contains("dims"))
        throw std::runtime_error("category file: missing dims");
    for (const auto &[k, v] : j["dims"].items()) {
        cplx d;
        if (v.is_number())
            d = cplx(v.get<double>(), 0.0);
        else
            d = json_complex(v[0], v[1]);
        cat.dim[static_cast<std::size_t>(cat.id_of(k))] = d;
    }
    if (j.contains("sqrt_dims")) {
        cat.sqrt_dim.assign(cat.n_simples(), cplx(0, 0));
        for (const auto &[k, v] : j["sqrt_dims"].items()) {
            cplx d;
            if (v.is_number())
                d = cplx(v.get<double>(), 0.0);
            else
                d = json_complex(v[0], v[1]);
            cat.sqrt_dim[static_cast<std::size_t>(cat.id_of(k))] = d;
        }
    }

    if (j.contains("F"))
        for (const auto &row : j["F"]) {
            if (!row.is_array() || row.size() != 12)
                throw std::runtime_error(
                    "category file: F rows are [a,b,j,k,c,l,m,d,l',m',re,im]");
            const SimpleId a = index1(cat, row[0], "F.a");
            const SimpleId b = index1(cat, row[1], "F.b");
            const SimpleId jj = index1(cat, row[2], "F.j");
            const SimpleId k = index1(cat, row[3], "F.k");
            const SimpleId c = index1(cat, row[4], "F.c");
            const int m1 = row[5].get<int>() - 1;
            const int m2 = row[6].get<int>() - 1;
            const SimpleId d = index1(cat, row[7], "F.d");
            const int m1p = row[8].get<int>() - 1;
            const int m2p = row[9].get<int>() - 1;
            cat.set_F(a, b, jj, k, c, m1, d, m1p, m2, m2p,
                      json_complex(row[10], row[11]));
        }

    if (j.contains("pivotal")) {
        cat.pivotal.assign(cat.n_simples(), cplx(1, 0));
        for (const auto &[k, v] : j["pivotal"].items()) {
            cplx d;
            if (v.is_number())
                d = cplx(v.get<double>(), 0.0);
            else
                d = json_complex(v[0], v[1]);
            cat.pivotal[static_cast<std::size_t>(cat.id_of(k))] = d;
        }
    }

    if (j.contains("R")) {
        RibbonData rib;
        rib.twist.assign(cat.n_simples(), cplx(1, 0));
        std::map<std::tuple<int, int, int>, std::vector<std::tuple<int, int, cplx>>>
            entries;
        for (const auto &row : j["R"]) {
            if (!row.is_array() || row.size() != 7)
                throw std::runtime_error(
                    "category file: R rows are [i,j,k,al,be,re,im]");
            const SimpleId a = index1(cat, row[0], "R.i");
            const SimpleId b = index1(cat, row[1], "R.j");
            const SimpleId k = index1(cat, row[2], "R.k");
            entries[{a, b, k}].push_back({row[3].get<int>() - 1,
                                          row[4].get<int>() - 1,
                                          json_complex(row[5], row[6])});
        }
        for (const auto &[key, rows] : entries) {
            const auto [a, b, k] = key;
            const int nr = cat.N(b, a, k), nc = cat.N(a, b, k);
            CMatrix m(static_cast<std::size_t>(nr), static_cast<std::size_t>(nc));
            for (const auto &[al, be, v] : rows) {
                if (al < 0 || al >= nr || be < 0 || be >= nc)
                    throw std::runtime_error(
                        "category file: R multiplicity index out of range");
                m(static_cast<std::size_t>(al), static_cast<std::size_t>(be)) = v;
            }
            rib.braid[RKey{a, b, k}] = m;
        }
        if (j.contains("twist"))
            for (const auto &[k, v] : j["twist"].items()) {
                cplx d;
                if (v.is_number())
                    d = cplx(v.get<double>(), 0.0);
                else
                    d = json_complex(v[0], v[1]);
                rib.twist[static_cast<std::size_t>(cat.id_of(k))] = d;
            }
        cat.ribbon = rib;
    }

    cat.tolerance = j.value("tolerance", 1e-9);
    cat.finalize();
    return cat;
}

CategoryData load_category_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_category_json(ss.str());
}

std::string category_to_json(const CategoryData &cat) {
    json j;
    j["format"] = "fuscat/1";
    j["name"] = cat.name;
    j["simples"] = cat.names;
    j["unit"] = cat.names[static_cast<std::size_t>(cat.unit)];
    json dual = json::object();
    for (std::size_t i = 0; i < cat.n_simples(); ++i)
        dual[cat.names[i]] = cat.names[static_cast<std::size_t>(cat.dual[i])];
    j["dual"] = dual;
    json N = json::array();
    for (const auto &[key, n] : cat.fusion) {
        const auto [a, b, c] = key;
        N.push_back({a + 1, b + 1, c + 1, n});
    }
    j["N"] = N;
    auto cmap = [&](const std::vector<cplx> &v) {
        json m = json::object();
        for (std::size_t i = 0; i < v.size(); ++i)
            m[cat.names[i]] = {v[i].real(), v[i].imag()};
        return m;
    };
    j["dims"] = cmap(cat.dim);
    if (!cat.sqrt_dim.empty())
        j["sqrt_dims"] = cmap(cat.sqrt_dim);
    j["pivotal"] = cmap(cat.pivotal);
    json F = json::array();
    const SimpleId n = static_cast<SimpleId>(cat.n_simples());
    for (SimpleId a = 0; a < n; ++a)
        for (SimpleId b = 0; b < n; ++b)
            for (SimpleId jj = 0; jj < n; ++jj)
                for (SimpleId k = 0; k < n; ++k) {
                    if (a == cat.unit || b == cat.unit || jj == cat.unit)
                        continue; // strict gauge, implied
                    if (!cat.f_block_exists(a, b, jj, k))
                        continue;
                    const FBlock &blk = cat.f_block(a, b, jj, k);
                    for (std::size_t r = 0; r < blk.left.size(); ++r)
                        for (std::size_t c = 0; c < blk.right.size(); ++c) {
                            const cplx v = blk.coeff(r, c);
                            if (v == cplx(0, 0))
                                continue;
                            F.push_back({a + 1, b + 1, jj + 1, k + 1,
                                         blk.left[r].mid + 1, blk.left[r].m1 + 1,
                                         blk.left[r].m2 + 1, blk.right[c].mid + 1,
                                         blk.right[c].m1 + 1, blk.right[c].m2 + 1,
                                         v.real(), v.imag()});
                        }
                }
    j["F"] = F;
    if (cat.ribbon) {
        json R = json::array();
        for (const auto &[key, m] : cat.ribbon->braid)
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c) {
                    const cplx v = m(r, c);
                    if (v == cplx(0, 0))
                        continue;
                    R.push_back({key.i + 1, key.j + 1, key.k + 1,
                                 static_cast<int>(r) + 1, static_cast<int>(c) + 1,
                                 v.real(), v.imag()});
                }
        j["R"] = R;
        j["twist"] = cmap(cat.ribbon->twist);
    }
    j["tolerance"] = cat.tolerance;
    return j.dump(1);
}

} // namespace tqft
