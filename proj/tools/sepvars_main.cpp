// Command-line front end: separation of variables in bivariate polynomial
// ideals over Q. See README.md for the command overview.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "sepvars/driver.hpp"
#include "sepvars/oracle.hpp"
#include "sepvars/parse.hpp"
#include "sepvars/principal.hpp"
#include "sepvars/sepsets.hpp"

using namespace sepvars;
using nlohmann::json;

namespace {

struct GlobalOpts {
    std::string format = "text";
    std::string vars = "x,y";
    unsigned long seed = 1;
    bool verify = false;
};

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        const auto a = item.find_first_not_of(" \t");
        const auto b = item.find_last_not_of(" \t");
        if (a != std::string::npos) out.push_back(item.substr(a, b - a + 1));
    }
    return out;
}

std::string read_generators_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::string line, joined;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!joined.empty()) joined += ";";
        joined += line;
    }
    return joined;
}

json pair_json(const PairFG& p) {
    return json{{"f", to_string(p.f, "x")}, {"g", to_string(p.g, "y")}};
}

void emit(const GlobalOpts& g, const json& doc, const std::string& text) {
    if (g.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

bool verify_pairs(const Ideal& I, const std::vector<PairFG>& pairs) {
    for (const auto& p : pairs) {
        const MPoly diff =
            from_unipoly(p.f, I.vars(), 0) - from_unipoly(p.g, I.vars(), 1);
        if (!I.is_zero_ideal() && !contains(I, diff)) return false;
        if (I.is_zero_ideal() && !diff.is_zero()) return false;
    }
    return true;
}

std::set<std::pair<int, int>> parse_points(const std::string& text) {
    std::set<std::pair<int, int>> pts;
    size_t pos = 0;
    while (pos < text.size()) {
        const auto open = text.find('(', pos);
        if (open == std::string::npos) break;
        const auto comma = text.find(',', open);
        const auto close = text.find(')', open);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw std::runtime_error("malformed point list, expected \"(i,j),(k,l),...\"");
        const int i = std::stoi(text.substr(open + 1, comma - open - 1));
        const int j = std::stoi(text.substr(comma + 1, close - comma - 1));
        pts.emplace(i, j);
        pos = close + 1;
    }
    return pts;
}

int run_separate(const GlobalOpts& g, const std::string& gens, const std::string& file) {
    const auto vars = split_list(g.vars, ',');
    const std::string source = file.empty() ? gens : read_generators_file(file);
    Ideal I(parse_poly_list(source, vars));
    const SeparationResult res = separate(I);
    if (g.verify && !verify_pairs(I, res.generators)) {
        std::cerr << "verification failed\n";
        return 2;
    }

    json doc;
    doc["generators"] = json::array();
    for (const auto& p : res.generators) doc["generators"].push_back(pair_json(p));
    doc["certificates"] = json::array();
    for (const auto& c : res.certificates) doc["certificates"].push_back(to_string(c, "t"));
    doc["a"] = res.a ? pair_json(*res.a) : json(nullptr);

    std::ostringstream text;
    text << "generators (" << res.generators.size() << "):\n";
    for (const auto& p : res.generators)
        text << "  (" << to_string(p.f, "x") << ", " << to_string(p.g, "y") << ")\n";
    if (res.a)
        text << "a = (" << to_string(res.a->f, "x") << ", " << to_string(res.a->g, "y") << ")\n";
    for (const auto& c : res.certificates) text << "certificate: " << to_string(c, "t") << "\n";
    emit(g, doc, text.str());
    return 0;
}

int run_minsep(const GlobalOpts& g, const std::string& poly, bool verdict_only) {
    const auto vars = split_list(g.vars, ',');
    const MPoly p = parse_poly(poly, vars);
    if (p.is_zero() || !p.depends_on(0) || !p.depends_on(1)) {
        std::cerr << "minsep requires a polynomial involving both variables\n";
        return 1;
    }
    const PrincipalResult r = minimal_separated_multiple(p);
    if (g.verify && !r.trivial) {
        const MPoly diff = from_unipoly(r.generator.f, vars, 0) - from_unipoly(r.generator.g, vars, 1);
        if (!divides(p, diff)) {
            std::cerr << "verification failed\n";
            return 2;
        }
    }
    json doc{{"separable", !r.trivial},
             {"f", to_string(r.generator.f, "x")},
             {"g", to_string(r.generator.g, "y")},
             {"N", r.n_bound ? json(*r.n_bound) : json(nullptr)}};
    std::ostringstream text;
    if (verdict_only) {
        text << (r.trivial ? "not separable\n" : "separable\n");
        if (!r.trivial)
            text << "minimal separated multiple: (" << to_string(r.generator.f, "x") << ") - ("
                 << to_string(r.generator.g, "y") << ")\n";
    } else {
        text << "separable: " << (r.trivial ? "false" : "true") << "\n"
             << "f = " << to_string(r.generator.f, "x") << "\n"
             << "g = " << to_string(r.generator.g, "y") << "\n";
        if (r.n_bound) text << "N = " << *r.n_bound << "\n";
    }
    emit(g, doc, text.str());
    return 0;
}

int run_oracle_separable(const GlobalOpts& g, const std::string& poly, int max_deg) {
    const auto vars = split_list(g.vars, ',');
    const auto w = oracle_separable(parse_poly(poly, vars), max_deg);
    json doc{{"found", w.has_value()}};
    std::ostringstream text;
    if (w) {
        doc["cofactor"] = to_string(w->cofactor);
        doc["multiple"] = to_string(w->multiple);
        text << "cofactor: " << to_string(w->cofactor) << "\n"
             << "multiple: " << to_string(w->multiple) << "\n";
    } else {
        text << "no separated multiple with cofactor degree <= " << max_deg << "\n";
    }
    emit(g, doc, text.str());
    return 0;
}

int run_oracle_slice(const GlobalOpts& g, const std::string& gens, int max_deg) {
    const auto vars = split_list(g.vars, ',');
    Ideal I(parse_poly_list(gens, vars));
    const auto basis = oracle_algebra_slice(I, max_deg);
    json doc{{"dimension", basis.size()}, {"basis", json::array()}};
    std::ostringstream text;
    text << "slice dimension " << basis.size() << ":\n";
    for (const auto& p : basis) {
        doc["basis"].push_back(pair_json(p));
        text << "  (" << to_string(p.f, "x") << ", " << to_string(p.g, "y") << ")\n";
    }
    emit(g, doc, text.str());
    return 0;
}

int run_sepset(const GlobalOpts& g, bool closure, int m, int n, const std::string& points) {
    SepSet t(m, n, parse_points(points));
    json doc;
    std::ostringstream text;
    if (closure) {
        const SepSet c = separated_closure(t);
        doc["points"] = json::array();
        text << "closure:";
        for (const auto& [i, j] : c.points) {
            doc["points"].push_back(json::array({i, j}));
            text << " (" << i << "," << j << ")";
        }
        text << "\n";
    } else {
        const bool sep = is_separated(t);
        doc["separated"] = sep;
        text << (sep ? "separated: true\n" : "separated: false\n");
    }
    emit(g, doc, text.str());
    return 0;
}

int run_project(const GlobalOpts& g, const std::string& poly, const std::string& xi,
                const std::string& eta) {
    const auto vars = split_list(g.vars, ',');
    const MPoly p = parse_poly(poly, vars);

    // substitution maps "v->expr, ..." — xi images live in Q[x], eta in Q[y]
    auto parse_map = [&](const std::string& mapping, int target_var) {
        std::map<std::string, UniPoly> images;
        for (const auto& entry : split_list(mapping, ',')) {
            const auto arrow = entry.find("->");
            if (arrow == std::string::npos)
                throw std::runtime_error("substitution entries look like \"y1->y^2\"");
            const std::string v = split_list(entry.substr(0, arrow), ' ').at(0);
            const std::string expr = entry.substr(arrow + 2);
            const std::vector<std::string> tv{target_var == 0 ? "x" : "y"};
            images[v] = to_unipoly(parse_poly(expr, tv), 0);
        }
        return images;
    };
    const auto xi_map = parse_map(xi, 0);
    const auto eta_map = parse_map(eta, 1);

    std::vector<UniPoly> x_images, y_images;
    int n_x = 0;
    for (const auto& v : vars) {
        if (xi_map.count(v)) {
            if (!y_images.empty())
                throw std::runtime_error("x-block variables must precede y-block variables");
            x_images.push_back(xi_map.at(v));
            ++n_x;
        } else if (eta_map.count(v)) {
            y_images.push_back(eta_map.at(v));
        } else {
            throw std::runtime_error("variable '" + v + "' has no substitution");
        }
    }

    const ProjectionReport rep = projected_separability(p, n_x, x_images, y_images);
    json doc{{"image", to_string(rep.image)},
             {"possibly_separable", rep.possibly_separable()}};
    std::ostringstream text;
    text << "image: " << to_string(rep.image) << "\n";
    switch (rep.outcome) {
        case ProjectionOutcome::certified_not_separable:
            doc["verdict"] = "not separable";
            text << "verdict: not separable (image is not separable)\n";
            break;
        case ProjectionOutcome::inconclusive_separable:
            doc["verdict"] = "inconclusive";
            text << "verdict: inconclusive (image is separable)\n";
            break;
        case ProjectionOutcome::inconclusive_univariate:
            doc["verdict"] = "inconclusive";
            text << "verdict: inconclusive (image involves only one variable block)\n";
            break;
    }
    emit(g, doc, text.str());
    return 0;
}

int run_selftest(const GlobalOpts& g) {
    std::mt19937_64 rng(g.seed);
    std::uniform_int_distribution<int> coeff(-4, 4);
    const std::vector<std::string> xy{"x", "y"};
    int checked = 0;
    for (int trial = 0; trial < 25; ++trial) {
        UniPoly f({Rational(coeff(rng)), Rational(coeff(rng)), Rational(coeff(rng)),
                   Rational(1)});
        UniPoly gg({Rational(coeff(rng)), Rational(coeff(rng)), Rational(1)});
        const MPoly p = from_unipoly(f, xy, 0) - from_unipoly(gg, xy, 1);
        const auto r = minimal_separated_multiple(p);
        const MPoly diff = from_unipoly(r.generator.f, xy, 0) - from_unipoly(r.generator.g, xy, 1);
        if (r.trivial || !divides(p, diff)) {
            std::cerr << "selftest failure on " << to_string(p) << "\n";
            return 2;
        }
        ++checked;
    }
    emit(g, json{{"checked", checked}, {"ok", true}},
         "selftest ok (" + std::to_string(checked) + " random separated inputs)\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"separated polynomials of bivariate ideals over Q"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--vars", g.vars, "comma-separated ring variables (default x,y)");
    app.add_option("--seed", g.seed, "seed for randomized self-tests");
    app.add_flag("--verify", g.verify, "re-check membership of every output pair");

    std::string gens, file, poly, xi, eta, points;
    int max_deg = 4, m = 1, n = 1;

    auto* sep = app.add_subcommand("separate", "generators of the separated-pair algebra");
    sep->add_option("--gens", gens, "semicolon-separated ideal generators");
    sep->add_option("--file", file, "file with one generator per line, # comments");

    auto* minsep = app.add_subcommand("minsep", "minimal separated multiple of a polynomial");
    minsep->add_option("--poly", poly)->required();

    auto* issep = app.add_subcommand("is-separable", "separability verdict for a polynomial");
    issep->add_option("--poly", poly)->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force reference computations");
    oracle->require_subcommand(1);
    auto* osep = oracle->add_subcommand("separable", "bounded-degree cofactor search");
    osep->add_option("--poly", poly)->required();
    osep->add_option("--max-deg", max_deg);
    auto* oslice = oracle->add_subcommand("slice", "degree slice of the separated-pair algebra");
    oslice->add_option("--gens", gens)->required();
    oslice->add_option("--max-deg", max_deg);

    auto* sepset = app.add_subcommand("sepset", "separated subsets of a finite grid");
    sepset->require_subcommand(1);
    auto* sclosure = sepset->add_subcommand("closure", "separated closure of a point set");
    auto* scheck = sepset->add_subcommand("check", "separatedness test for a point set");
    for (auto* sc : {sclosure, scheck}) {
        sc->add_option("--m", m)->required();
        sc->add_option("--n", n)->required();
        sc->add_option("--points", points)->required();
    }

    auto* project = app.add_subcommand("project", "necessary-condition projection to two variables");
    project->add_option("--poly", poly)->required();
    project->add_option("--xi", xi, "x-block substitutions, e.g. \"x1->x\"")->required();
    project->add_option("--eta", eta, "y-block substitutions, e.g. \"y1->y^2, y2->y\"")->required();

    auto* selftest = app.add_subcommand("selftest", "randomized smoke checks");

    // allow the global flags to appear after the subcommand as well
    for (auto* sc : {sep, minsep, issep, oracle, sepset, project, selftest}) sc->fallthrough();
    for (auto* sc : {osep, oslice, sclosure, scheck}) sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sep->parsed()) {
            if (gens.empty() && file.empty()) {
                std::cerr << "separate: provide --gens or --file\n";
                return 1;
            }
            return run_separate(g, gens, file);
        }
        if (minsep->parsed()) return run_minsep(g, poly, false);
        if (issep->parsed()) return run_minsep(g, poly, true);
        if (oracle->parsed()) {
            if (osep->parsed()) return run_oracle_separable(g, poly, max_deg);
            return run_oracle_slice(g, gens, max_deg);
        }
        if (sepset->parsed()) return run_sepset(g, sclosure->parsed(), m, n, points);
        if (project->parsed()) return run_project(g, poly, xi, eta);
        if (selftest->parsed()) return run_selftest(g);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
