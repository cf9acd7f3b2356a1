#include "dioph/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "dioph/errors.hpp"

namespace dioph {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Configuration

bool VerificationConfig::unit_weights() const {
    return std::all_of(weights.begin(), weights.end(), [](const Rational& c) { return c == 1; });
}

void VerificationConfig::validate() const {
    if (family.empty()) throw InvalidConfiguration("family: at least one moving hypersurface is required");
    if (weights.size() != family.size())
        throw InvalidConfiguration("weights: expected " + std::to_string(family.size()) + " entries, got " +
                                   std::to_string(weights.size()));
    for (const auto& c : weights)
        if (c < 0) throw InvalidConfiguration("weights: negative weight " + to_string(c));
    if (std::all_of(weights.begin(), weights.end(), [](const Rational& c) { return c == 0; }))
        throw InvalidConfiguration("weights: at least one weight must be positive");
    if (places.empty()) throw InvalidConfiguration("places: S must be nonempty");
    if (epsilons.empty()) throw InvalidConfiguration("epsilon: missing");
    for (double e : epsilons)
        if (!(e > 0)) throw InvalidConfiguration("epsilon: must be > 0");
    if (alpha_first > alpha_last) throw InvalidConfiguration("alpha_range: empty range");
    if (!(tolerance >= 0)) throw InvalidConfiguration("tolerance: must be >= 0");
    if (point.num_vars() != variety.num_vars())
        throw InvalidConfiguration("point: " + std::to_string(point.num_vars()) + " coordinates but the ambient ring has " +
                                   std::to_string(variety.num_vars()) + " variables");
    for (std::size_t j = 0; j < family.size(); ++j)
        if (family[j].num_vars() != variety.num_vars())
            throw InvalidConfiguration("family[" + std::to_string(j) + "]: wrong number of variables");
}

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& msg) {
    throw InvalidConfiguration(path + ": " + msg);
}

Rational json_rational(const json& j, const std::string& path) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number()) return parse_rational(j.dump());
    } catch (const ParseError& e) {
        field_error(path, e.what());
    }
    field_error(path, "expected a number or a \"p/q\" string");
}

double json_double(const json& j, const std::string& path) {
    if (!j.is_number()) field_error(path, "expected a number");
    return j.get<double>();
}

long json_long(const json& j, const std::string& path) {
    if (!j.is_number_integer()) field_error(path, "expected an integer");
    return j.get<long>();
}

std::string json_string(const json& j, const std::string& path) {
    if (!j.is_string()) field_error(path, "expected a string");
    return j.get<std::string>();
}

Exponent parse_exponent_key(const std::string& key, const std::string& path) {
    Exponent e;
    std::string digits;
    auto flush = [&] {
        if (digits.empty()) field_error(path, "malformed exponent tuple '" + key + "'");
        e.push_back(static_cast<unsigned>(std::stoul(digits)));
        digits.clear();
    };
    for (char c : key) {
        if (std::isdigit(static_cast<unsigned char>(c)))
            digits += c;
        else if (c == ',')
            flush();
        else if (c != ' ' && c != '[' && c != ']' && c != '(' && c != ')')
            field_error(path, "malformed exponent tuple '" + key + "'");
    }
    flush();
    return e;
}

template <class F>
auto with_path(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        if (std::string_view(e.what()).find(path) != std::string_view::npos) throw;
        field_error(path, e.what());
    }
}

}  // namespace

VerificationConfig parse_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        const std::size_t byte = std::min<std::size_t>(e.byte, json_text.size());
        const auto line = 1 + std::count(json_text.begin(), json_text.begin() + static_cast<long>(byte), '\n');
        throw InvalidConfiguration("config: malformed JSON at line " + std::to_string(line) + ": " + e.what());
    }
    if (!doc.is_object()) throw InvalidConfiguration("config: top level must be a JSON object");

    VerificationConfig cfg;
    if (doc.contains("index_symbol")) cfg.index_symbol = json_string(doc["index_symbol"], "index_symbol");
    const std::string& sym = cfg.index_symbol;

    if (!doc.contains("point")) field_error("point", "missing");
    const json& jp = doc["point"];
    if (!jp.is_array() || jp.empty()) field_error("point", "expected a nonempty array of expressions");
    std::vector<SeqExpr> coords;
    for (std::size_t i = 0; i < jp.size(); ++i) {
        const std::string path = "point[" + std::to_string(i) + "]";
        coords.push_back(with_path(path, [&] { return SeqExpr::parse(json_string(jp[i], path), sym); }));
    }
    cfg.point = MovingPoint(std::move(coords));

    std::size_t num_vars = cfg.point.num_vars();
    std::vector<HomPoly> gens;
    if (doc.contains("variety")) {
        const json& jv = doc["variety"];
        if (!jv.is_object()) field_error("variety", "expected an object");
        if (jv.contains("num_vars")) {
            const long nv = json_long(jv["num_vars"], "variety.num_vars");
            if (nv < 1 || static_cast<std::size_t>(nv) != num_vars)
                field_error("variety.num_vars", "must equal the number of point coordinates (" +
                                                    std::to_string(num_vars) + ")");
        }
        if (jv.contains("generators")) {
            const json& jg = jv["generators"];
            if (!jg.is_array()) field_error("variety.generators", "expected an array of polynomial strings");
            for (std::size_t i = 0; i < jg.size(); ++i) {
                const std::string path = "variety.generators[" + std::to_string(i) + "]";
                gens.push_back(with_path(path, [&] { return parse_hom_poly(json_string(jg[i], path), num_vars); }));
            }
        }
    }
    cfg.variety = Ideal(num_vars, std::move(gens));

    if (!doc.contains("family")) field_error("family", "missing");
    const json& jf = doc["family"];
    if (!jf.is_array() || jf.empty()) field_error("family", "expected a nonempty array");
    for (std::size_t j = 0; j < jf.size(); ++j) {
        const std::string path = "family[" + std::to_string(j) + "]";
        const json& h = jf[j];
        if (!h.is_object() || !h.contains("coeffs") || !h["coeffs"].is_object() || h["coeffs"].empty())
            field_error(path + ".coeffs", "expected a nonempty object mapping exponent tuples to expressions");
        std::vector<std::pair<Exponent, SeqExpr>> coeffs;
        for (const auto& [key, value] : h["coeffs"].items()) {
            const std::string cpath = path + ".coeffs[\"" + key + "\"]";
            Exponent e = parse_exponent_key(key, cpath);
            if (e.size() != num_vars)
                field_error(cpath, "exponent tuple has " + std::to_string(e.size()) + " entries, expected " +
                                       std::to_string(num_vars));
            SeqExpr expr = with_path(cpath, [&] {
                if (value.is_number()) return SeqExpr::constant(json_rational(value, cpath));
                return SeqExpr::parse(json_string(value, cpath), sym);
            });
            coeffs.emplace_back(std::move(e), std::move(expr));
        }
        unsigned degree = total_degree(coeffs.front().first);
        if (h.contains("degree")) {
            const long d = json_long(h["degree"], path + ".degree");
            if (d < 1) field_error(path + ".degree", "must be >= 1");
            degree = static_cast<unsigned>(d);
        }
        cfg.family.push_back(with_path(path, [&] { return MovingHypersurface(num_vars, degree, coeffs); }));
    }

    if (doc.contains("weights")) {
        const json& jw = doc["weights"];
        if (!jw.is_array()) field_error("weights", "expected an array");
        for (std::size_t i = 0; i < jw.size(); ++i)
            cfg.weights.push_back(json_rational(jw[i], "weights[" + std::to_string(i) + "]"));
    } else {
        cfg.weights.assign(cfg.family.size(), Rational(1));
    }

    if (doc.contains("places")) {
        const json& js = doc["places"];
        if (!js.is_array()) field_error("places", "expected an array such as [\"inf\", \"p:2\"]");
        for (std::size_t i = 0; i < js.size(); ++i) {
            const std::string path = "places[" + std::to_string(i) + "]";
            cfg.places.insert(with_path(path, [&] { return Place::parse(json_string(js[i], path)); }));
        }
    } else {
        cfg.places.insert(Place::archimedean());
    }
    if (!cfg.places.count(Place::archimedean()))
        cfg.warnings.push_back("S does not contain the archimedean place");

    if (doc.contains("epsilon")) {
        const json& je = doc["epsilon"];
        cfg.epsilons.clear();
        if (je.is_array()) {
            for (std::size_t i = 0; i < je.size(); ++i)
                cfg.epsilons.push_back(json_double(je[i], "epsilon[" + std::to_string(i) + "]"));
        } else {
            cfg.epsilons.push_back(json_double(je, "epsilon"));
        }
    }
    if (doc.contains("alpha_range")) {
        const json& jr = doc["alpha_range"];
        if (!jr.is_array() || jr.size() != 2) field_error("alpha_range", "expected [first, last]");
        cfg.alpha_first = json_long(jr[0], "alpha_range[0]");
        cfg.alpha_last = json_long(jr[1], "alpha_range[1]");
    }
    if (doc.contains("tolerance")) cfg.tolerance = json_double(doc["tolerance"], "tolerance");
    if (doc.contains("smallness_threshold"))
        cfg.smallness_threshold = json_double(doc["smallness_threshold"], "smallness_threshold");
    if (doc.contains("caps")) {
        const json& jc = doc["caps"];
        if (!jc.is_object()) field_error("caps", "expected an object");
        if (jc.contains("max_pairs")) cfg.caps.max_pairs = static_cast<std::size_t>(json_long(jc["max_pairs"], "caps.max_pairs"));
        if (jc.contains("max_degree")) cfg.caps.max_degree = static_cast<unsigned>(json_long(jc["max_degree"], "caps.max_degree"));
    }
    cfg.validate();
    return cfg;
}

VerificationConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidConfiguration("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

// ---------------------------------------------------------------------------
// Per-alpha evaluation

namespace {

struct Prepared {
    Instance inst;
    WeightedConfiguration wcfg;
    double h_x;
};

Prepared prepare(const VerificationConfig& cfg, long alpha) {
    std::optional<Instance> inst;
    try {
        inst = instantiate(cfg.family, cfg.point, alpha);
    } catch (const DivisionByZeroAt& e) {
        throw ExcludedAlpha("division by zero");
    } catch (const DegenerateInstance& e) {
        throw ExcludedAlpha(e.which() == 0 ? "point is zero" : "D_" + std::to_string(e.which()) + " is zero");
    }
    for (const auto& g : cfg.variety.generators())
        if (evaluate(g, inst->point) != 0) throw ExcludedAlpha("point not on V");
    for (std::size_t i = 0; i < inst->hypersurfaces.size(); ++i)
        if (evaluate(inst->hypersurfaces[i], inst->point) == 0)
            throw ExcludedAlpha("point on D_" + std::to_string(i + 1));
    const double h = height_point(inst->point);
    if (h == 0) throw ExcludedAlpha("h(x) = 0");
    try {
        WeightedConfiguration wcfg(cfg.variety, inst->hypersurfaces, cfg.weights, cfg.caps);
        return {std::move(*inst), std::move(wcfg), h};
    } catch (const InvalidConfiguration& e) {
        throw ExcludedAlpha(e.what());
    }
}

double lhs_of(const VerificationConfig& cfg, const Instance& inst) {
    double sum = 0;
    for (const auto& v : cfg.places)
        for (std::size_t i = 0; i < inst.hypersurfaces.size(); ++i) {
            if (cfg.weights[i] == 0) continue;
            const HomPoly& q = inst.hypersurfaces[i];
            sum += cfg.weights[i].get_d() / q.degree() * weil(q, v, inst.point).value;
        }
    return sum;
}

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

std::string fmt(const Rational& x) {
    if (x.get_den() == 1) return x.get_str();
    return fmt(x.get_d());
}

}  // namespace

double compute_lhs(const VerificationConfig& cfg, long alpha) {
    const Prepared p = prepare(cfg, alpha);
    return lhs_of(cfg, p.inst);
}

Rational compute_factor(const VerificationConfig& cfg, long alpha) {
    const Prepared p = prepare(cfg, alpha);
    return Rational(p.wcfg.dimension() + 1) * weighted_factor(p.wcfg).value;
}

std::string VerificationRow::status_string() const {
    switch (status) {
        case RowStatus::Ok:
            return "OK";
        case RowStatus::Violation:
            return "VIOLATION";
        case RowStatus::Excluded:
            return "EXCLUDED(" + reason + ")";
    }
    return "";
}

VerificationRow evaluate_row(const VerificationConfig& cfg, long alpha) {
    VerificationRow row;
    row.alpha = alpha;
    std::optional<Prepared> p;
    try {
        p = prepare(cfg, alpha);
    } catch (const ExcludedAlpha& e) {
        row.status = RowStatus::Excluded;
        row.reason = e.what();
        return row;
    }
    row.h_x = p->h_x;
    row.lhs = lhs_of(cfg, p->inst);
    const WeightedFactor wf = weighted_factor(p->wcfg);
    row.witness = wf.witness;
    row.factor = Rational(p->wcfg.dimension() + 1) * wf.value;
    if (cfg.unit_weights()) row.distributive = distributive_constant(p->wcfg);
    row.normalized = row.lhs / row.h_x;
    row.margin = row.factor.get_d() + cfg.epsilon() - row.normalized;
    row.status = row.margin < -cfg.tolerance ? RowStatus::Violation : RowStatus::Ok;
    return row;
}

VerificationReport verify(const VerificationConfig& cfg) {
    cfg.validate();
    VerificationReport report;
    const std::size_t count = static_cast<std::size_t>(cfg.alpha_last - cfg.alpha_first + 1);
    report.rows.resize(count);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < count;) {
            try {
                report.rows[k] = evaluate_row(cfg, cfg.alpha_first + static_cast<long>(k));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    VerificationSummary& s = report.summary;
    s.dim_v = proj_dim(cfg.variety, cfg.caps).value;
    s.max_normalized = -std::numeric_limits<double>::infinity();
    s.min_margin = std::numeric_limits<double>::infinity();
    std::map<std::string, std::size_t> reasons;
    std::optional<Rational> max_delta;
    bool equality = true;
    for (const auto& r : report.rows) {
        if (r.status == RowStatus::Excluded) {
            ++s.excluded;
            ++reasons[r.reason];
            continue;
        }
        r.status == RowStatus::Ok ? ++s.ok : ++s.violations;
        s.max_normalized = std::max(s.max_normalized, r.normalized);
        s.min_margin = std::min(s.min_margin, r.margin);
        s.max_factor = std::max(s.max_factor, r.factor);
        if (r.distributive) {
            if (!max_delta || *r.distributive > *max_delta) max_delta = *r.distributive;
            if (r.factor != Rational(s.dim_v + 1) * *r.distributive) equality = false;
        }
    }
    if (s.ok + s.violations == 0) {
        s.max_normalized = 0;
        s.min_margin = 0;
        s.notes.push_back("no evaluable alpha in range");
    }
    if (max_delta) {
        s.unweighted_bound = Rational(s.dim_v + 1) * *max_delta;
        s.remark_equality = equality;
    }
    for (const auto& [reason, n] : reasons) {
        if (n == count && reason.rfind("point on D_", 0) == 0)
            s.notes.push_back("hypothesis failure: point sequence degenerate on " + reason.substr(9));
        else if (n == count)
            s.notes.push_back("hypothesis failure: every alpha excluded (" + reason + ")");
    }
    for (const auto& w : cfg.warnings) s.notes.push_back("warning: " + w);

    s.smallness = smallness_report(cfg.family, cfg.point, cfg.alpha_first, cfg.alpha_last, cfg.smallness_threshold);
    for (const auto& w : s.smallness.warnings) s.notes.push_back("warning: " + w);

    for (double eps : cfg.epsilons) {
        SweepEntry e{eps, 0, std::numeric_limits<double>::infinity()};
        for (const auto& r : report.rows) {
            if (r.status == RowStatus::Excluded) continue;
            const double m = r.factor.get_d() + eps - r.normalized;
            e.min_margin = std::min(e.min_margin, m);
            if (m < -cfg.tolerance) ++e.violations;
        }
        s.sweep.push_back(e);
    }
    return report;
}

void write_csv(const VerificationReport& report, std::ostream& out) {
    out << "alpha,h_x,lhs,factor,normalized,margin,status\n";
    for (const auto& r : report.rows) {
        out << r.alpha << ',';
        if (r.status == RowStatus::Excluded) {
            out << ",,,,,";
        } else {
            out << fmt(r.h_x) << ',' << fmt(r.lhs) << ',' << fmt(r.factor) << ',' << fmt(r.normalized) << ','
                << fmt(r.margin) << ',';
        }
        std::string st = r.status_string();
        if (st.find_first_of(",\"") != std::string::npos) {
            std::string quoted = "\"";
            for (char c : st) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
            st = quoted + "\"";
        }
        out << st << '\n';
    }
    const auto& s = report.summary;
    out << "# summary\n";
    out << "# rows=" << report.rows.size() << " ok=" << s.ok << " violations=" << s.violations
        << " excluded=" << s.excluded << '\n';
    out << "# dim_v=" << s.dim_v << " max_factor=" << fmt(s.max_factor) << '\n';
    out << "# max_normalized=" << fmt(s.max_normalized) << " min_margin=" << fmt(s.min_margin) << '\n';
    if (s.unweighted_bound)
        out << "# unweighted_bound=(n+1)*Delta=" << fmt(*s.unweighted_bound)
            << " factor_matches_distributive=" << (*s.remark_equality ? "true" : "false") << '\n';
    out << "# smallness_slope=" << fmt(s.smallness.slope);
    if (!s.smallness.rows.empty()) out << " final_ratio=" << fmt(s.smallness.rows.back().ratio);
    out << '\n';
    for (const auto& e : s.sweep)
        out << "# sweep epsilon=" << fmt(e.epsilon) << " violations=" << e.violations
            << " min_margin=" << fmt(e.min_margin) << '\n';
    for (const auto& n : s.notes) out << "# " << n << '\n';
    out << "# result=" << (report.passed() ? "PASS" : "FAIL") << '\n';
}

// ---------------------------------------------------------------------------
// Filtration trace

FiltrationTrace filtration_trace(const VerificationConfig& cfg, long alpha, const Place& v) {
    const Prepared p = prepare(cfg, alpha);
    FiltrationTrace t{alpha, v, order_weil(p.inst.hypersurfaces, v, p.inst.point), {}, 0, 0, {}, false};
    t.profile = prefix_profile(p.wcfg, t.weil.order);
    t.factor = prefix_factor(t.profile, cfg.weights);
    t.weighted_factor = weighted_factor(p.wcfg).value;
    std::vector<double> inv_degrees;
    for (const auto& q : p.inst.hypersurfaces) inv_degrees.push_back(1.0 / q.degree());
    t.sides = apply_weighted_filtration(t.profile, t.weil.sorted_weil, inv_degrees, cfg.weights);
    t.holds = t.sides.lhs >= t.sides.rhs - cfg.tolerance * std::max(1.0, std::abs(t.sides.rhs));
    return t;
}

void print_trace(const FiltrationTrace& t, std::ostream& out) {
    auto list = [&](const auto& v, auto&& f) {
        out << '(';
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << f(v[i]);
        out << ')';
    };
    out << "alpha = " << t.alpha << ", v = " << t.place.to_string() << '\n';
    out << "order (1-based): ";
    list(t.weil.order, [](std::size_t i) { return i + 1; });
    out << "\nsorted lambda:   ";
    list(t.weil.sorted_weil, [](double x) { return fmt(x); });
    if (t.weil.clamp > 0) out << "  (clamped by " << fmt(t.weil.clamp) << ")";
    out << "\nprefix codims b: ";
    list(t.profile.b, [](int x) { return x; });
    out << "\nb steps:         ";
    list(t.profile.b_steps, [](int x) { return x; });
    out << "\nl = " << t.profile.l << '\n';
    out << "factor = " << t.factor.get_str() << " (weighted_factor = " << t.weighted_factor.get_str() << ")\n";
    out << "lhs = " << fmt(t.sides.lhs) << ", rhs = " << fmt(t.sides.rhs) << ", lhs >= rhs: "
        << (t.holds ? "yes" : "NO") << '\n';
}

}  // namespace dioph
