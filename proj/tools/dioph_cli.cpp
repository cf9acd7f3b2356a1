// Command line front end. Every subcommand reads an optional JSON file and
// lets inline flags override its fields. Exit codes: 0 ok, 1 violation, 2 error.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "dioph/errors.hpp"
#include "dioph/filtration.hpp"
#include "dioph/ideal.hpp"
#include "dioph/moving.hpp"
#include "dioph/places.hpp"
#include "dioph/polynomial.hpp"
#include "dioph/position.hpp"
#include "dioph/verifier.hpp"

using namespace dioph;
using nlohmann::json;

namespace {

struct Inputs {
    std::string file;
    std::vector<std::string> variety, hyps, weights, log_deltas, b, c;
    std::string point, poly, scalar, place, places;
    long num_vars = 0, alpha = -1;
    unsigned n = 0;
    bool degree = false;
    std::string csv;
};

json load_json(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::vector<std::string> strings_of(const json& doc, const char* key) {
    std::vector<std::string> out;
    if (!doc.contains(key)) return out;
    for (const auto& x : doc[key]) out.push_back(x.is_string() ? x.get<std::string>() : x.dump());
    return out;
}

std::string string_of(const json& doc, const char* key) {
    if (!doc.contains(key)) return "";
    const auto& x = doc[key];
    if (x.is_string()) return x.get<std::string>();
    if (x.is_array()) {
        std::string s;
        for (const auto& e : x) s += (s.empty() ? "" : ",") + (e.is_string() ? e.get<std::string>() : e.dump());
        return s;
    }
    return x.dump();
}

// Fill fields left empty on the command line from the JSON document.
void merge(Inputs& in) {
    const json doc = load_json(in.file);
    auto fill = [&](std::vector<std::string>& v, const char* key) {
        if (v.empty()) v = strings_of(doc, key);
    };
    auto fill_s = [&](std::string& s, const char* key) {
        if (s.empty()) s = string_of(doc, key);
    };
    if (in.variety.empty() && doc.contains("variety")) {
        const auto& v = doc["variety"];
        in.variety = v.is_object() ? strings_of(v, "generators") : strings_of(doc, "variety");
    }
    fill(in.hyps, "hypersurfaces");
    fill(in.weights, "weights");
    fill(in.log_deltas, "log_deltas");
    fill(in.b, "b");
    fill(in.c, "c");
    fill_s(in.point, "point");
    fill_s(in.poly, "poly");
    fill_s(in.scalar, "scalar");
    fill_s(in.place, "place");
    if (in.num_vars == 0 && doc.contains("num_vars")) in.num_vars = doc["num_vars"].get<long>();
    if (in.n == 0 && doc.contains("n")) in.n = doc["n"].get<unsigned>();
    if (in.alpha < 0 && doc.contains("alpha")) in.alpha = doc["alpha"].get<long>();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, sep);)
        if (item.find_first_not_of(' ') != std::string::npos) out.push_back(item);
    return out;
}

ProjPoint point_of(const std::string& text) {
    std::string t = text;
    for (char& ch : t)
        if (ch == '(' || ch == ')' || ch == '[' || ch == ']') ch = ' ';
    std::vector<Rational> c;
    for (const auto& item : split(t, t.find(':') != std::string::npos ? ':' : ',')) c.push_back(parse_rational(item));
    return ProjPoint(c);
}

std::size_t infer_vars(const Inputs& in) {
    if (in.num_vars > 0) return static_cast<std::size_t>(in.num_vars);
    if (!in.point.empty()) return point_of(in.point).size();
    std::size_t nv = 1;
    for (const auto* list : {&in.variety, &in.hyps})
        for (const auto& s : *list) nv = std::max(nv, parse_polynomial(s).num_vars());
    if (!in.poly.empty()) nv = std::max(nv, parse_polynomial(in.poly).num_vars());
    return nv;
}

std::vector<HomPoly> forms(const std::vector<std::string>& texts, std::size_t nv) {
    std::vector<HomPoly> out;
    for (const auto& s : texts) out.push_back(parse_hom_poly(s, nv));
    return out;
}

std::vector<Rational> rationals(const std::vector<std::string>& texts) {
    std::vector<Rational> out;
    for (const auto& s : texts) out.push_back(parse_rational(s));
    return out;
}

std::vector<double> reals(const std::vector<std::string>& texts) {
    std::vector<double> out;
    for (const auto& s : texts) out.push_back(std::stod(s));
    return out;
}

WeightedConfiguration configuration(const Inputs& in) {
    const std::size_t nv = infer_vars(in);
    const Ideal v(nv, forms(in.variety, nv));
    auto hyps = forms(in.hyps, nv);
    if (in.weights.empty()) return WeightedConfiguration(v, hyps);
    return WeightedConfiguration(v, hyps, rationals(in.weights));
}

int run_height(const Inputs& in) {
    std::cout << std::setprecision(12);
    if (!in.scalar.empty()) {
        const Rational x = parse_rational(in.scalar);
        std::cout << "h(" << to_string(x) << ") = " << height_scalar(x) << '\n';
    } else if (!in.poly.empty()) {
        const HomPoly q = parse_hom_poly(in.poly, infer_vars(in));
        std::cout << "h(" << q.poly().to_string() << ") = " << height_poly(q) << '\n';
    } else if (!in.point.empty()) {
        const ProjPoint x = point_of(in.point);
        std::cout << "H = " << multiplicative_height(x) << '\n' << "h = " << height_point(x) << '\n';
    } else {
        throw InvalidConfiguration("height needs --point, --poly or --scalar");
    }
    return 0;
}

int run_weil(const Inputs& in) {
    if (in.poly.empty() || in.point.empty()) throw InvalidConfiguration("weil needs --poly and --point");
    const ProjPoint x = point_of(in.point);
    const HomPoly q = parse_hom_poly(in.poly, x.size());
    const Place v = Place::parse(in.place.empty() ? "inf" : in.place);
    std::cout << std::setprecision(12) << "argument = " << to_string(weil_argument(q, v, x)) << '\n'
              << "lambda = " << weil(q, v, x).value << '\n';
    return 0;
}

int run_codim(const Inputs& in) {
    const std::size_t nv = infer_vars(in);
    const Ideal v(nv, forms(in.variety, nv));
    std::cout << "dim V = " << proj_dim(v).value << '\n'
              << "codim = " << codim_in(v, forms(in.hyps, nv)).to_string() << '\n';
    return 0;
}

int run_hilbert(const Inputs& in) {
    const std::size_t nv = infer_vars(in);
    const Ideal v(nv, forms(in.variety, nv));
    if (in.degree) {
        std::cout << "degree = " << degree_of_variety(v) << '\n';
    } else {
        const auto g = groebner(v);
        for (unsigned k = 0; k <= in.n; ++k) std::cout << "H(" << k << ") = " << hilbert_function(g, k) << '\n';
    }
    return 0;
}

int run_delta(const Inputs& in) {
    const auto cfg = configuration(in);
    std::cout << "Delta = " << to_string(distributive_constant(cfg)) << '\n';
    std::cout << "index " << cfg.dimension() << ": " << (check_index(cfg, cfg.dimension()).holds ? "yes" : "no") << '\n';
    return 0;
}

int run_factor(const Inputs& in) {
    const auto cfg = configuration(in);
    const auto wf = weighted_factor(cfg);
    std::cout << "weighted factor = " << to_string(wf.value) << '\n'
              << "witness = " << format_subset(wf.witness.subset) << " codim " << wf.witness.codim.to_string()
              << " alpha(W) " << to_string(wf.witness.alpha_value) << '\n';
    return 0;
}

int run_chebyshev(const Inputs& in) {
    const FiltrationInstance inst(reals(in.log_deltas), reals(in.b), reals(in.c));
    const auto lo = chebyshev_lower(inst);
    std::cout << std::setprecision(12) << "lower bound = " << lo.value << " j_star = " << lo.j_star + 1 << '\n'
              << "  " << inst.b_side() << " >= " << lo.value * inst.c_side() << '\n';
    if (inst.b()[0] != 0) {
        const auto up = chebyshev_upper(inst);
        std::cout << "upper factor = " << up.value << " j_star = " << up.j_star + 1 << '\n'
                  << "  " << up.value * inst.b_side() << " >= " << inst.c_side() << '\n';
    } else {
        std::cout << "upper factor: b_1 = 0\n";
    }
    return brute_force_check(inst) ? 0 : 1;
}

int run_verify(const Inputs& in) {
    const auto cfg = load_config(in.file);
    const auto report = verify(cfg);
    if (in.csv.empty()) {
        write_csv(report, std::cout);
    } else {
        std::ofstream out(in.csv);
        if (!out) throw ParseError("cannot write " + in.csv);
        write_csv(report, out);
    }
    for (const auto& w : cfg.warnings) std::cerr << "warning: " << w << '\n';
    return report.passed() ? 0 : 1;
}

int run_trace(const Inputs& in) {
    const auto cfg = load_config(in.file);
    std::vector<Place> places;
    if (!in.place.empty())
        places.push_back(Place::parse(in.place));
    else
        places.assign(cfg.places.begin(), cfg.places.end());
    std::vector<long> alphas;
    if (in.alpha >= 0)
        alphas.push_back(in.alpha);
    else
        for (long a = cfg.alpha_first; a <= cfg.alpha_last; ++a) alphas.push_back(a);
    bool ok = true;
    for (long a : alphas) {
        for (const auto& v : places) {
            try {
                const auto t = filtration_trace(cfg, a, v);
                print_trace(t, std::cout);
                ok &= t.holds;
            } catch (const ExcludedAlpha& e) {
                std::cout << "alpha=" << a << " v=" << v.to_string() << " excluded: " << e.what() << '\n';
            }
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heights, Weil functions and weighted Diophantine inequality checks over Q"};
    app.require_subcommand(1);
    Inputs in;

    auto* verify_cmd = app.add_subcommand("verify", "Check the weighted inequality over a range of alpha");
    verify_cmd->add_option("config", in.file, "JSON configuration")->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("--csv", in.csv, "Write the CSV here instead of stdout");

    auto* trace_cmd = app.add_subcommand("trace", "Per-(v, alpha) filtration derivation");
    trace_cmd->add_option("config", in.file, "JSON configuration")->required()->check(CLI::ExistingFile);
    trace_cmd->add_option("--alpha", in.alpha, "Single alpha (default: whole range)");
    trace_cmd->add_option("--place", in.place, "Single place, inf or p:N (default: all of S)");

    auto common = [&](CLI::App* cmd) {
        cmd->add_option("json", in.file, "JSON input")->check(CLI::ExistingFile);
        cmd->add_option("--num-vars", in.num_vars, "Number of homogeneous variables");
    };
    auto* height_cmd = app.add_subcommand("height", "Height of a point, a scalar or a form");
    common(height_cmd);
    height_cmd->add_option("--point", in.point, "Coordinates, e.g. 1:2:4 or 1,2/3,4");
    height_cmd->add_option("--poly", in.poly, "Homogeneous polynomial");
    height_cmd->add_option("--scalar", in.scalar, "Rational number");

    auto* weil_cmd = app.add_subcommand("weil", "Weil function of a form at a point and place");
    common(weil_cmd);
    weil_cmd->add_option("--poly", in.poly, "Homogeneous polynomial");
    weil_cmd->add_option("--point", in.point, "Coordinates");
    weil_cmd->add_option("--place", in.place, "inf or p:N");

    auto variety_opts = [&](CLI::App* cmd) {
        common(cmd);
        cmd->add_option("--variety", in.variety, "Generators of I(V) (repeatable; empty means P^M)");
    };
    auto* codim_cmd = app.add_subcommand("codim", "Codimension of V cut by hypersurfaces");
    variety_opts(codim_cmd);
    codim_cmd->add_option("--hyp", in.hyps, "Hypersurface (repeatable)");

    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function or degree of V");
    variety_opts(hilbert_cmd);
    hilbert_cmd->add_option("--n", in.n, "Largest degree to tabulate");
    hilbert_cmd->add_flag("--degree", in.degree, "Print the degree instead");

    auto* delta_cmd = app.add_subcommand("delta", "Distributive constant of a configuration");
    variety_opts(delta_cmd);
    delta_cmd->add_option("--hyp", in.hyps, "Hypersurface (repeatable)");

    auto* factor_cmd = app.add_subcommand("factor", "Weighted factor with its witness");
    variety_opts(factor_cmd);
    factor_cmd->add_option("--hyp", in.hyps, "Hypersurface (repeatable)");
    factor_cmd->add_option("--weights", in.weights, "Weights c_i")->delimiter(',');

    auto* cheb_cmd = app.add_subcommand("chebyshev", "Filtration inequality on one instance");
    common(cheb_cmd);
    cheb_cmd->add_option("--log-deltas", in.log_deltas, "Nonincreasing values")->delimiter(',');
    cheb_cmd->add_option("--b", in.b, "Indicators b_i")->delimiter(',');
    cheb_cmd->add_option("--c", in.c, "Indicators c_i")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify_cmd->parsed()) return run_verify(in);
        if (trace_cmd->parsed()) return run_trace(in);
        merge(in);
        if (height_cmd->parsed()) return run_height(in);
        if (weil_cmd->parsed()) return run_weil(in);
        if (codim_cmd->parsed()) return run_codim(in);
        if (hilbert_cmd->parsed()) return run_hilbert(in);
        if (delta_cmd->parsed()) return run_delta(in);
        if (factor_cmd->parsed()) return run_factor(in);
        if (cheb_cmd->parsed()) return run_chebyshev(in);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
