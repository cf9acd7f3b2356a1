#include "dioph/moving.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <optional>

#include "dioph/errors.hpp"

namespace dioph {

struct SeqExpr::Node {
    enum class Kind { Literal, Index, Add, Sub, Mul, Div, Pow, Neg } kind;
    Rational value;
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const SeqExpr::Node>;
using Kind = SeqExpr::Node::Kind;

NodePtr make(Kind k, NodePtr a = nullptr, NodePtr b = nullptr, Rational v = 0) {
    return std::make_shared<const SeqExpr::Node>(SeqExpr::Node{k, std::move(v), std::move(a), std::move(b)});
}

constexpr long max_exponent = 100000;

class SeqParser {
public:
    SeqParser(std::string_view s, std::string_view symbol) : s_(s), symbol_(symbol) {}

    NodePtr parse() {
        NodePtr e = expr();
        skip_ws();
        if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
        return e;
    }

private:
    NodePtr expr() {
        NodePtr e = term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                e = make(Kind::Add, e, term());
            else if (accept('-'))
                e = make(Kind::Sub, e, term());
            else
                return e;
        }
    }

    NodePtr term() {
        NodePtr e = unary();
        for (;;) {
            skip_ws();
            if (accept('*'))
                e = make(Kind::Mul, e, unary());
            else if (accept('/'))
                e = make(Kind::Div, e, unary());
            else
                return e;
        }
    }

    NodePtr unary() {
        skip_ws();
        if (accept('-')) return make(Kind::Neg, unary());
        if (accept('+')) return unary();
        return power();
    }

    // Right associative; the exponent may carry a sign: 2^-a.
    NodePtr power() {
        NodePtr base = primary();
        skip_ws();
        if (accept('^')) return make(Kind::Pow, base, unary());
        return base;
    }

    NodePtr primary() {
        skip_ws();
        if (at_end()) fail("unexpected end of expression");
        const char c = peek();
        if (accept('(')) {
            NodePtr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) ++pos_;
            return make(Kind::Literal, nullptr, nullptr, parse_rational(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
            const std::string_view name = s_.substr(start, pos_ - start);
            if (name == symbol_ || name == "alpha") return make(Kind::Index);
            if (name == "pow") {
                expect('(');
                NodePtr b = expr();
                expect(',');
                NodePtr e = expr();
                expect(')');
                return make(Kind::Pow, b, e);
            }
            pos_ = start;
            fail("unknown identifier '" + std::string(name) + "' (index variable is '" + std::string(symbol_) + "')");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    bool accept(char c) {
        skip_ws();
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("expression '" + std::string(s_) + "', position " + std::to_string(pos_) + ": " + msg);
    }

    std::string_view s_;
    std::string_view symbol_;
    std::size_t pos_ = 0;
};

Rational eval_node(const SeqExpr::Node& n, long alpha) {
    switch (n.kind) {
        case Kind::Literal:
            return n.value;
        case Kind::Index:
            return Rational(alpha);
        case Kind::Neg:
            return -eval_node(*n.lhs, alpha);
        case Kind::Add:
            return eval_node(*n.lhs, alpha) + eval_node(*n.rhs, alpha);
        case Kind::Sub:
            return eval_node(*n.lhs, alpha) - eval_node(*n.rhs, alpha);
        case Kind::Mul:
            return eval_node(*n.lhs, alpha) * eval_node(*n.rhs, alpha);
        case Kind::Div: {
            const Rational d = eval_node(*n.rhs, alpha);
            if (d == 0) throw DivisionByZeroAt(alpha);
            return eval_node(*n.lhs, alpha) / d;
        }
        case Kind::Pow: {
            const Rational b = eval_node(*n.lhs, alpha);
            const Rational e = eval_node(*n.rhs, alpha);
            if (e.get_den() != 1)
                throw PreconditionViolated("non-integer exponent " + to_string(e) + " at alpha = " +
                                           std::to_string(alpha));
            if (abs(e) > max_exponent) throw ResourceLimit("exponent " + to_string(e) + " too large");
            const long k = e.get_num().get_si();
            if (k < 0 && b == 0) throw DivisionByZeroAt(alpha);
            return pow(b, k);
        }
    }
    return 0;
}

}  // namespace

SeqExpr SeqExpr::parse(std::string_view text, std::string_view symbol) {
    return SeqExpr(SeqParser(text, symbol).parse(), std::string(text));
}

SeqExpr SeqExpr::constant(const Rational& c) {
    return SeqExpr(make(Kind::Literal, nullptr, nullptr, c), to_string(c));
}

Rational SeqExpr::eval(long alpha) const { return eval_node(*root_, alpha); }

MovingHypersurface::MovingHypersurface(std::size_t num_vars, unsigned degree,
                                       std::vector<std::pair<Exponent, SeqExpr>> coeffs)
    : num_vars_(num_vars), degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree_ == 0) throw PreconditionViolated("moving hypersurface degree must be >= 1");
    if (coeffs_.empty()) throw InvalidConfiguration("moving hypersurface without coefficients");
    for (const auto& [e, expr] : coeffs_) {
        if (e.size() != num_vars_)
            throw DimensionMismatch("exponent tuple of length " + std::to_string(e.size()) + ", expected " +
                                    std::to_string(num_vars_));
        if (total_degree(e) != degree_)
            throw InvalidConfiguration("exponent tuple of degree " + std::to_string(total_degree(e)) +
                                       " in a degree-" + std::to_string(degree_) + " family");
    }
}

HomPoly MovingHypersurface::at(long alpha, std::size_t which) const {
    std::vector<Term> terms;
    terms.reserve(coeffs_.size());
    for (const auto& [e, expr] : coeffs_) terms.push_back({e, expr.eval(alpha)});
    Polynomial p(num_vars_, std::move(terms));
    if (p.is_zero()) throw DegenerateInstance(alpha, which);
    return HomPoly(std::move(p));
}

MovingPoint::MovingPoint(std::vector<SeqExpr> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw DimensionMismatch("moving point without coordinates");
}

ProjPoint MovingPoint::at(long alpha) const {
    std::vector<Rational> c;
    c.reserve(coords_.size());
    for (const auto& e : coords_) c.push_back(e.eval(alpha));
    if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; })) throw DegenerateInstance(alpha, 0);
    return ProjPoint(std::move(c));
}

Instance instantiate(const MovingFamily& family, const MovingPoint& point, long alpha) {
    std::vector<HomPoly> hyps;
    hyps.reserve(family.size());
    for (std::size_t j = 0; j < family.size(); ++j) {
        if (family[j].num_vars() != point.num_vars())
            throw DimensionMismatch("D_" + std::to_string(j + 1) + " and the point have different variable counts");
        hyps.push_back(family[j].at(alpha, j + 1));
    }
    return {std::move(hyps), point.at(alpha)};
}

SmallnessReport smallness_report(const MovingFamily& family, const MovingPoint& point, long first, long last,
                                 double threshold) {
    SmallnessReport report;
    for (long alpha = first; alpha <= last; ++alpha) {
        std::optional<Instance> inst;
        try {
            inst = instantiate(family, point, alpha);
        } catch (const DivisionByZeroAt&) {
        } catch (const DegenerateInstance&) {
        }
        if (!inst) {
            report.skipped.push_back(alpha);
            continue;
        }
        const double hx = height_point(inst->point);
        if (hx == 0) {
            report.skipped.push_back(alpha);
            continue;
        }
        double hq = 0;
        for (const auto& q : inst->hypersurfaces) hq = std::max(hq, height_poly(q));
        report.rows.push_back({alpha, hx, hq, hq / hx});
    }
    const std::size_t n = report.rows.size();
    if (n >= 2) {
        double mx = 0, my = 0;
        for (const auto& r : report.rows) {
            mx += static_cast<double>(r.alpha);
            my += r.ratio;
        }
        mx /= static_cast<double>(n);
        my /= static_cast<double>(n);
        double sxy = 0, sxx = 0;
        for (const auto& r : report.rows) {
            sxy += (static_cast<double>(r.alpha) - mx) * (r.ratio - my);
            sxx += (static_cast<double>(r.alpha) - mx) * (static_cast<double>(r.alpha) - mx);
        }
        report.slope = sxx > 0 ? sxy / sxx : 0.0;
    }
    if (!report.rows.empty()) {
        const double final_ratio = report.rows.back().ratio;
        const bool any_nonzero =
            std::any_of(report.rows.begin(), report.rows.end(), [](const SmallnessRow& r) { return r.ratio > 0; });
        if (any_nonzero && report.slope >= 0)
            report.warnings.push_back("smallness: ratio h(D)/h(x) is not decreasing (slope " +
                                      std::to_string(report.slope) + ")");
        if (final_ratio > threshold)
            report.warnings.push_back("smallness: final ratio h(D)/h(x) = " + std::to_string(final_ratio) +
                                      " exceeds " + std::to_string(threshold));
    }
    return report;
}

WeilOrder order_weil(const std::vector<HomPoly>& hypersurfaces, const Place& v, const ProjPoint& x) {
    WeilOrder out;
    const std::size_t q = hypersurfaces.size();
    out.raw_weil.reserve(q);
    for (const auto& h : hypersurfaces) out.raw_weil.push_back(weil(h, v, x).value);
    std::vector<double> clamped(q);
    for (std::size_t i = 0; i < q; ++i) {
        clamped[i] = std::max(0.0, out.raw_weil[i]);
        out.clamp = std::max(out.clamp, clamped[i] - out.raw_weil[i]);
    }
    out.order.resize(q);
    std::iota(out.order.begin(), out.order.end(), std::size_t{0});
    std::stable_sort(out.order.begin(), out.order.end(),
                     [&](std::size_t a, std::size_t b) { return clamped[a] > clamped[b]; });
    for (auto i : out.order) out.sorted_weil.push_back(clamped[i]);
    return out;
}

PrefixProfile prefix_profile(const WeightedConfiguration& cfg, const std::vector<std::size_t>& order) {
    const int n = cfg.dimension();
    PrefixProfile p;
    p.order = order;
    Subset prefix;
    int prev = 0;
    for (std::size_t j = 0; j < order.size(); ++j) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), order[j]), order[j]);
        const Codim c = cfg.codim(prefix);
        if (c.is_infinite()) break;
        const int b = std::min(c.value(), n);
        p.b.push_back(b);
        p.b_steps.push_back(b - prev);
        prev = b;
        p.l = j + 1;
    }
    validate_profile(p, n);
    return p;
}

PrefixProfile prefix_profile(const Ideal& variety, const std::vector<HomPoly>& sorted, const GroebnerLimits& limits) {
    WeightedConfiguration cfg(variety, sorted, limits);
    std::vector<std::size_t> order(sorted.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return prefix_profile(cfg, order);
}

}  // namespace dioph
