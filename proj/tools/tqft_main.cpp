// tqft - verification and computation for Turaev-Viro state sums and
// special orbifold data in skeletal ribbon fusion categories.
//
// Exit codes: 0 = pass, 1 = input/schema error, 2 = verification failure.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "catalog/builtin.hpp"
#include "catalog/crossed.hpp"
#include "catalog/triangulations.hpp"
#include "orbifold/datum_io.hpp"
#include "skeletal/loader.hpp"
#include "statesum/statesum.hpp"
#include "support/report_json.hpp"

using namespace tqft;
using nlohmann::json;

namespace {

constexpr const char *tool_version = "tqft 1.0.0";

// cheap stable digest of an input spec or file for report provenance
std::string input_digest(const std::string &spec) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string &s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    mix(spec);
    if (std::filesystem::exists(spec)) {
        std::ifstream in(spec, std::ios::binary);
        std::string chunk(4096, '\0');
        while (in.read(chunk.data(), static_cast<long>(chunk.size())) ||
               in.gcount())
            mix(chunk.substr(0, static_cast<std::size_t>(in.gcount())));
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

std::string catalog_dir() {
    if (const char *env = std::getenv("TQFT_CATALOG_DIR"))
        return env;
    return "data/catalog-v1";
}

// resolve a category argument: builtin spec, catalog file name, or path
CategoryData resolve_category(const std::string &spec, double tol_override) {
    CategoryData cat;
    if (is_builtin_category(spec))
        cat = builtin_category(spec);
    else if (std::filesystem::exists(spec))
        cat = load_category_file(spec);
    else {
        const std::string p = catalog_dir() + "/" + spec + ".json";
        if (!std::filesystem::exists(p))
            throw std::runtime_error("cannot resolve category '" + spec + "'");
        cat = load_category_file(p);
    }
    if (tol_override > 0) {
        cat.tolerance = tol_override;
        cat.finalize();
    }
    return cat;
}

Triangulation resolve_triangulation(const std::string &spec) {
    if (is_builtin_triangulation(spec))
        return builtin_triangulation(spec);
    if (std::filesystem::exists(spec))
        return load_triangulation_file(spec);
    const std::string p = catalog_dir() + "/" + spec + ".json";
    if (std::filesystem::exists(p))
        return load_triangulation_file(p);
    throw std::runtime_error("cannot resolve triangulation '" + spec + "'");
}

void emit(json report, const std::string &report_path) {
    report["tool"] = tool_version;
    std::cout << report.dump(2) << std::endl;
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << report.dump(2) << std::endl;
    }
}

json report_json(const VerificationReport &rep) {
    return json::parse(report_to_json(rep));
}

int run_validate(const std::string &target, double tol, int jobs,
                 const std::string &report_path) {
    (void)jobs;
    json out;
    out["command"] = "validate";
    out["input"] = target;
    out["input_digest"] = input_digest(target);
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;

    auto file_is_crossed = [](const std::string &p) {
        if (!std::filesystem::exists(p))
            return false;
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return json_is_crossed(ss.str());
    };
    if (is_builtin_crossed(target) || file_is_crossed(target) ||
        file_is_crossed(catalog_dir() + "/" + target + ".json")) {
        CrossedCategoryData data =
            is_builtin_crossed(target)
                ? builtin_crossed(target)
                : load_crossed_file(std::filesystem::exists(target)
                                        ? target
                                        : catalog_dir() + "/" + target +
                                              ".json");
        if (tol > 0) {
            data.underlying->tolerance = tol;
            data.underlying->finalize();
        }
        auto rep = validate_crossed(data);
        out["reports"] = {report_json(rep)};
        pass = rep.passed();
    } else if (is_builtin_triangulation(target) ||
               target.find("tri") != std::string::npos) {
        Triangulation tri = resolve_triangulation(target);
        out["triangulation"] = {{"tetrahedra", tri.n_tets},
                                {"vertices", tri.n_vertices},
                                {"edges", tri.n_edges},
                                {"faces", tri.n_faces}};
        pass = true;
    } else {
        CategoryData cat = resolve_category(target, tol);
        json reports = json::array();
        auto push = [&](const VerificationReport &rep) {
            reports.push_back(report_json(rep));
            pass = pass && rep.passed();
        };
        push(verify_fusion_ring(cat));
        push(verify_pentagon(cat));
        push(verify_spherical(cat));
        if (cat.ribbon) {
            push(verify_ribbon(cat));
            auto mod = verify_modularity(cat);
            reports.push_back(report_json(mod)); // informational
        }
        out["reports"] = reports;
    }
    const auto t1 = std::chrono::steady_clock::now();
    out["wall_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    out["passed"] = pass;
    emit(out, report_path);
    std::cerr << "validate " << target << ": " << (pass ? "PASS" : "FAIL")
              << "\n";
    return pass ? 0 : 2;
}

int run_tv(const std::string &cat_spec, const std::string &tri_spec,
           bool both_paths, double tol, int jobs,
           const std::string &report_path) {
    CategoryData cat = resolve_category(cat_spec, tol);
    Triangulation tri = resolve_triangulation(tri_spec);
    StateSumOptions opt;
    opt.jobs = jobs;
    json out;
    out["command"] = "tv";
    out["category"] = cat.name;
    out["triangulation"] = tri.name;
    out["input_digest"] = input_digest(cat_spec) + ":" + input_digest(tri_spec);
    const auto t0 = std::chrono::steady_clock::now();
    const cplx v = tv_invariant(cat, tri, opt);
    out["tv"] = {v.real(), v.imag()};
    bool pass = true;
    if (both_paths) {
        const cplx w = orbifold_state_sum(cat, tri, opt);
        out["orbifold"] = {w.real(), w.imag()};
        out["difference"] = std::abs(v - w);
        pass = std::abs(v - w) < 10 * cat.tolerance;
    }
    const auto t1 = std::chrono::steady_clock::now();
    out["wall_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    out["passed"] = pass;
    emit(out, report_path);
    std::cerr << "tv(" << cat.name << ", " << tri.name << ") = " << v.real();
    if (std::abs(v.imag()) > 1e-12)
        std::cerr << (v.imag() > 0 ? "+" : "") << v.imag() << "i";
    std::cerr << (both_paths ? (pass ? "  [both paths agree]" : "  [MISMATCH]")
                             : "")
              << "\n";
    return pass ? 0 : 2;
}

OrbifoldDatum resolve_datum_source(const std::string &from_spherical,
                                   const std::string &from_commutative,
                                   const std::string &from_crossed,
                                   double tol) {
    if (!from_spherical.empty()) {
        CategoryData cat = resolve_category(from_spherical, tol);
        SphericalDatum sd = from_spherical_category(cat);
        return sd.datum; // owns its engine category
    }
    if (!from_commutative.empty()) {
        // the shipped commutative instance: the group algebra of a pointed
        // category (all simples, mu = the group law, delta = 1/n-split)
        auto cat = std::make_shared<CategoryData>(
            resolve_category(from_commutative, tol));
        auto alg = std::make_shared<FrobeniusAlgebraData>();
        alg->cat = cat.get();
        alg->name = "k[" + cat->name + "]";
        for (std::size_t i = 0; i < cat->n_simples(); ++i)
            alg->carrier.s.push_back(static_cast<SimpleId>(i));
        const Word w1 = Word::of({alg->carrier});
        const Word w2 = Word::of({alg->carrier, alg->carrier});
        alg->mu = morphism_zero(*cat, w2, w1);
        alg->eta = morphism_zero(*cat, Word{}, w1);
        alg->delta = morphism_zero(*cat, w1, w2);
        alg->eps = morphism_zero(*cat, w1, Word{});
        const double n = static_cast<double>(cat->n_simples());
        Tree t0;
        t0.n = 0;
        for (std::size_t i = 0; i < cat->n_simples(); ++i)
            for (std::size_t j = 0; j < cat->n_simples(); ++j) {
                SimpleId k = -1;
                for (SimpleId kk = 0;
                     kk < static_cast<SimpleId>(cat->n_simples()); ++kk)
                    if (cat->N(static_cast<SimpleId>(i),
                               static_cast<SimpleId>(j), kk))
                        k = kk;
                if (k < 0)
                    throw std::runtime_error(
                        "--from-commutative needs a pointed category");
                Tree s;
                s.n = 2;
                s.pick = {static_cast<int>(i), static_cast<int>(j)};
                s.out = {k};
                s.mult = {0};
                Tree t;
                t.n = 1;
                t.pick = {k};
                alg->mu.add(s, t, 1.0);
                alg->delta.add(t, s, 1.0 / n);
            }
        Tree tu;
        tu.n = 1;
        tu.pick = {cat->unit};
        alg->eta.add(t0, tu, 1.0);
        alg->eps.add(tu, t0, n);
        OrbifoldDatum d = from_commutative_frobenius(alg);
        d.cat_owned = cat;
        return d;
    }
    if (!from_crossed.empty()) {
        CrossedCategoryData data = builtin_crossed(from_crossed);
        if (tol > 0) {
            data.underlying->tolerance = tol;
            data.underlying->finalize();
        }
        auto rep = validate_crossed(data);
        if (!rep.passed())
            throw std::runtime_error("crossed data failed validation");
        std::vector<SimpleId> m(data.elements.size(), -1);
        m[0] = data.underlying->unit;
        for (std::size_t g = 1; g < data.elements.size(); ++g)
            for (std::size_t s = 0; s < data.underlying->n_simples(); ++s)
                if (data.grading[s] == static_cast<int>(g) && m[g] < 0)
                    m[g] = static_cast<SimpleId>(s);
        OrbifoldDatum d = from_crossed_extension(data, m);
        d.cat_owned = data.underlying;
        return d;
    }
    throw std::runtime_error("no datum source given");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Turaev-Viro state sums and special orbifold data"};
    app.require_subcommand(1);

    double tol = -1.0;
    int jobs = 1;
    std::string report_path;
    app.add_option("--tolerance", tol, "override the file tolerance");
    app.add_option("--jobs", jobs, "worker count for colouring sweeps");
    app.add_option("--report", report_path, "write the JSON report here");

    auto *validate = app.add_subcommand("validate", "run all verifiers");
    std::string v_target;
    validate->add_option("target", v_target, "category/crossed/triangulation")
        ->required();

    auto *tv = app.add_subcommand("tv", "Turaev-Viro invariant");
    std::string t_cat, t_tri;
    bool both_paths = false;
    tv->add_option("category", t_cat)->required();
    tv->add_option("triangulation", t_tri)->required();
    tv->add_flag("--both-paths", both_paths,
                 "also evaluate through the orbifold datum tables");

    auto *orb = app.add_subcommand("orbifold", "orbifold data operations");
    orb->require_subcommand(1);
    auto *build = orb->add_subcommand("build", "construct a datum");
    std::string from_spherical, from_commutative, from_crossed;
    std::string out_path = "datum.json";
    build->add_option("--from-spherical", from_spherical);
    build->add_option("--from-commutative", from_commutative);
    build->add_option("--from-crossed", from_crossed);
    build->add_option("-o,--output", out_path);
    auto *check = orb->add_subcommand("check", "verify the ten conditions");
    std::string check_path;
    check->add_option("datum", check_path)->required();
    auto *transport = orb->add_subcommand("transport", "Morita transport");
    std::string tr_path, along = "split:2,1";
    std::string tr_out = "datum-transported.json";
    transport->add_option("datum", tr_path)->required();
    transport->add_option("--along", along,
                          "split:n1,n2,... matrix-block Morita module");
    transport->add_option("-o,--output", tr_out);
    auto *isochk = orb->add_subcommand(
        "iso-check", "search for a T-compatible isomorphism");
    std::string iso_a, iso_b;
    isochk->add_option("datum1", iso_a)->required();
    isochk->add_option("datum2", iso_b)->required();

    auto *cat_cmd = app.add_subcommand("catalog", "catalog operations");
    auto *list = cat_cmd->add_subcommand("list", "list built-in data");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed())
            return run_validate(v_target, tol, jobs, report_path);
        if (tv->parsed())
            return run_tv(t_cat, t_tri, both_paths, tol, jobs, report_path);
        if (orb->parsed()) {
            if (build->parsed()) {
                OrbifoldDatum d = resolve_datum_source(
                    from_spherical, from_commutative, from_crossed, tol);
                std::ofstream out(out_path);
                if (!out)
                    throw std::runtime_error("cannot write '" + out_path + "'");
                out << datum_to_json(d);
                std::cerr << "wrote " << out_path << "\n";
                json rep;
                rep["command"] = "orbifold build";
                rep["output"] = out_path;
                rep["passed"] = true;
                emit(rep, report_path);
                return 0;
            }
            if (check->parsed()) {
                OrbifoldDatum d = datum_from_file(check_path);
                auto rep = verify_orbifold_datum(d, tol);
                std::cout << condition_report_to_json(rep) << std::endl;
                if (!report_path.empty()) {
                    std::ofstream out(report_path);
                    out << condition_report_to_json(rep) << std::endl;
                }
                for (const auto &c : rep.prechecks)
                    if (!c.pass)
                        std::cerr << "precheck " << c.id << " FAILED ("
                                  << c.residual << ")\n";
                for (const auto &c : rep.conditions)
                    std::cerr << c.id << ": " << (c.pass ? "pass" : "FAIL")
                              << " (residual " << c.residual << ")\n";
                return rep.passed() ? 0 : 2;
            }
            if (transport->parsed()) {
                OrbifoldDatum d = datum_from_file(tr_path);
                if (along.rfind("split:", 0) != 0)
                    throw std::runtime_error("--along expects split:n1,n2,...");
                std::vector<int> sizes;
                std::stringstream ss(along.substr(6));
                std::string tokp;
                while (std::getline(ss, tokp, ','))
                    sizes.push_back(std::stoi(tokp));
                MoritaModule mm = matrix_split_morita(d, sizes);
                OrbifoldDatum td = morita_transport(d, mm);
                std::ofstream out(tr_out);
                out << datum_to_json(td);
                std::cerr << "wrote " << tr_out << "\n";
                auto rep = verify_orbifold_datum(td, tol);
                std::cout << condition_report_to_json(rep) << std::endl;
                return rep.passed() ? 0 : 2;
            }
            if (isochk->parsed()) {
                OrbifoldDatum d1 = datum_from_file(iso_a);
                OrbifoldDatum d2 = datum_from_file(iso_b);
                rebase_datum(d2, d1.cat);
                auto iso = find_T_compatible_iso(d1, d2);
                json out;
                out["command"] = "orbifold iso-check";
                out["found"] = iso.has_value();
                if (iso)
                    out["report"] = json::parse(
                        report_to_json(check_T_compatible_iso(d1, d2, *iso)));
                emit(out, report_path);
                std::cerr << (iso ? "T-compatible isomorphism found"
                                  : "no T-compatible isomorphism found")
                          << "\n";
                return iso ? 0 : 2;
            }
        }
        if (cat_cmd->parsed() && list->parsed()) {
            json out;
            out["categories"] = builtin_category_names();
            out["crossed"] = {"ty:Z2:q=i:tau=+", "ty:Z2:q=i:tau=-",
                              "ty:Z2:q=-i:tau=+", "ty:Z2:q=-i:tau=-"};
            out["triangulations"] = builtin_triangulation_names();
            out["catalog_dir"] = catalog_dir();
            emit(out, report_path);
            return 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
