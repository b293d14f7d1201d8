#include "orbifold/datum_io.hpp"
#include "skeletal/loader.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tqft {

using nlohmann::json;

namespace {

json tree_to_json(const Tree &t) {
    return json::array({t.pick, t.out, t.mult});
}

Tree tree_from_json(const json &j) {
    Tree t;
    t.pick = j.at(0).get<std::vector<int>>();
    t.out = j.at(1).get<std::vector<SimpleId>>();
    t.mult = j.at(2).get<std::vector<int>>();
    t.n = static_cast<int>(t.pick.size());
    return t;
}

json morphism_to_json(const Morphism &m) {
    json rows = json::array();
    for (const auto &[k, v] : m.coeff)
        rows.push_back(json::array({tree_to_json(k.src), tree_to_json(k.tgt),
                                    v.real(), v.imag()}));
    return rows;
}

Morphism morphism_from_json(const CategoryData &cat, Word src, Word tgt,
                            const json &rows) {
    Morphism m = morphism_zero(cat, std::move(src), std::move(tgt));
    for (const auto &row : rows)
        m.add(tree_from_json(row.at(0)), tree_from_json(row.at(1)),
              cplx(row.at(2).get<double>(), row.at(3).get<double>()));
    return m;
}

json obj_to_json(const CategoryData &cat, const Obj &x) {
    json a = json::array();
    for (SimpleId s : x.s)
        a.push_back(cat.names[static_cast<std::size_t>(s)]);
    return a;
}

Obj obj_from_json(const CategoryData &cat, const json &a) {
    Obj x;
    for (const auto &s : a)
        x.s.push_back(cat.id_of(s.get<std::string>()));
    return x;
}

} // namespace

std::string datum_to_json(const OrbifoldDatum &d) {
    const CategoryData &cat = *d.cat;
    json j;
    j["format"] = "orbdatum/1";
    j["name"] = d.name;
    j["category"] = json::parse(category_to_json(cat));
    j["carrier_A"] = obj_to_json(cat, d.Ac());
    j["carrier_T"] = obj_to_json(cat, d.Tc());
    j["mu"] = morphism_to_json(d.alg->mu);
    j["eta"] = morphism_to_json(d.alg->eta);
    j["delta"] = morphism_to_json(d.alg->delta);
    j["eps"] = morphism_to_json(d.alg->eps);
    j["act0"] = morphism_to_json(d.T.action(0).act);
    j["act1"] = morphism_to_json(d.T.action(1).act);
    j["act2"] = morphism_to_json(d.T.action(2).act);
    j["alpha"] = morphism_to_json(d.alpha);
    j["alphabar"] = morphism_to_json(d.alphabar);
    j["psi"] = morphism_to_json(d.psi);
    j["phi_sq"] = {d.phi_sq.real(), d.phi_sq.imag()};
    j["phi"] = {d.phi.real(), d.phi.imag()};
    return j.dump(1);
}

OrbifoldDatum datum_from_json(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::runtime_error(std::string("datum file: ") + e.what());
    }
    if (j.value("format", "") != "orbdatum/1")
        throw std::runtime_error("datum file: missing format orbdatum/1");

    OrbifoldDatum d;
    auto cat = std::make_shared<CategoryData>(
        load_category_json(j.at("category").dump()));
    d.cat_owned = cat;
    d.cat = cat.get();
    d.name = j.value("name", "datum");

    const Obj A = obj_from_json(*cat, j.at("carrier_A"));
    const Obj T = obj_from_json(*cat, j.at("carrier_T"));
    const Word wA = Word::of({A}), wT = Word::of({T});
    const Word wAA = Word::of({A, A}), wTT = Word::of({T, T});

    auto alg = std::make_shared<FrobeniusAlgebraData>();
    alg->cat = cat.get();
    alg->name = d.name + ":A";
    alg->carrier = A;
    alg->mu = morphism_from_json(*cat, wAA, wA, j.at("mu"));
    alg->eta = morphism_from_json(*cat, Word{}, wA, j.at("eta"));
    alg->delta = morphism_from_json(*cat, wA, wAA, j.at("delta"));
    alg->eps = morphism_from_json(*cat, wA, Word{}, j.at("eps"));
    d.alg = alg;

    d.T.cat = cat.get();
    d.T.name = d.name + ":T";
    d.T.carrier = T;
    d.T.actions.push_back(
        {Side::Left, alg.get(),
         morphism_from_json(*cat, Word::of({A, T}), wT, j.at("act0"))});
    d.T.actions.push_back(
        {Side::Right, alg.get(),
         morphism_from_json(*cat, Word::of({T, A}), wT, j.at("act1"))});
    d.T.actions.push_back(
        {Side::Right, alg.get(),
         morphism_from_json(*cat, Word::of({T, A}), wT, j.at("act2"))});
    d.alpha = morphism_from_json(*cat, wTT, wTT, j.at("alpha"));
    d.alphabar = morphism_from_json(*cat, wTT, wTT, j.at("alphabar"));
    d.psi = morphism_from_json(*cat, wA, wA, j.at("psi"));
    d.phi_sq = cplx(j.at("phi_sq").at(0).get<double>(),
                    j.at("phi_sq").at(1).get<double>());
    d.phi = cplx(j.at("phi").at(0).get<double>(),
                 j.at("phi").at(1).get<double>());
    return d;
}

OrbifoldDatum datum_from_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return datum_from_json(ss.str());
}

bool same_category_tables(const CategoryData &a, const CategoryData &b) {
    if (a.names != b.names || a.unit != b.unit || a.dual != b.dual ||
        a.fusion != b.fusion)
        return false;
    for (std::size_t i = 0; i < a.dim.size(); ++i)
        if (std::abs(a.dim[i] - b.dim[i]) > 1e-12 ||
            std::abs(a.pivotal[i] - b.pivotal[i]) > 1e-12)
            return false;
    return true;
}

void rebase_datum(OrbifoldDatum &d, const CategoryData *cat) {
    if (!same_category_tables(*d.cat, *cat))
        throw std::runtime_error("rebase_datum: category tables differ");
    d.cat = cat;
    d.cat_owned.reset();
    d.alg->cat = cat;
    d.alg->mu.cat = cat;
    d.alg->eta.cat = cat;
    d.alg->delta.cat = cat;
    d.alg->eps.cat = cat;
    d.T.cat = cat;
    for (auto &a : d.T.actions)
        a.act.cat = cat;
    d.alpha.cat = cat;
    d.alphabar.cat = cat;
    d.psi.cat = cat;
}

std::string condition_report_to_json(const ConditionReport &rep) {
    json j;
    j["name"] = rep.name;
    j["passed"] = rep.passed();
    j["max_residual"] = rep.max_residual();
    auto dump = [](const std::vector<CheckResult> &cs) {
        json a = json::array();
        for (const auto &c : cs) {
            json jc;
            jc["id"] = c.id;
            jc["residual"] = c.residual;
            jc["pass"] = c.pass;
            if (!c.detail.empty())
                jc["detail"] = c.detail;
            a.push_back(jc);
        }
        return a;
    };
    j["prechecks"] = dump(rep.prechecks);
    j["conditions"] = dump(rep.conditions);
    return j.dump(2);
}

} // namespace tqft
