#include "dioph/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

#include "dioph/errors.hpp"

namespace dioph {

unsigned total_degree(const Exponent& e) {
    unsigned d = 0;
    for (unsigned k : e) d += k;
    return d;
}

bool divides(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool grevlex_greater(const Exponent& a, const Exponent& b) {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

namespace {

std::string monomial_string(const Exponent& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += "x" + std::to_string(i);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

struct GrevlexDesc {
    bool operator()(const Exponent& a, const Exponent& b) const { return grevlex_greater(a, b); }
};

}  // namespace

Polynomial::Polynomial(std::size_t num_vars, std::vector<Term> terms) : num_vars_(num_vars) {
    std::map<Exponent, Rational, GrevlexDesc> acc;
    for (auto& t : terms) {
        if (t.exponent.size() != num_vars_)
            throw DimensionMismatch("term " + monomial_string(t.exponent) + " has wrong variable count");
        t.coeff.canonicalize();
        acc[t.exponent] += t.coeff;
    }
    for (auto& [e, c] : acc)
        if (c != 0) terms_.push_back({e, c});
}

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
    return Polynomial(num_vars, {Term{Exponent(num_vars, 0), c}});
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
    Exponent e(num_vars, 0);
    e.at(index) = 1;
    return Polynomial(num_vars, {Term{std::move(e), Rational(1)}});
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.exponent));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = total_degree(terms_.front().exponent);
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term& t) { return total_degree(t.exponent) == d; });
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (o.num_vars_ != num_vars_) throw DimensionMismatch("adding polynomials in different rings");
    Polynomial r(num_vars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        if (grevlex_greater(a->exponent, b->exponent)) {
            r.terms_.push_back(*a++);
        } else if (grevlex_greater(b->exponent, a->exponent)) {
            r.terms_.push_back(*b++);
        } else {
            Rational c = a->coeff + b->coeff;
            if (c != 0) r.terms_.push_back({a->exponent, std::move(c)});
            ++a;
            ++b;
        }
    }
    r.terms_.insert(r.terms_.end(), a, terms_.end());
    r.terms_.insert(r.terms_.end(), b, o.terms_.end());
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.scaled(-1); }

Polynomial Polynomial::tail() const {
    Polynomial r(num_vars_);
    if (!terms_.empty()) r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(num_vars_);
    if (c == 0) return r;
    Rational k = c;
    k.canonicalize();
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff *= k;
    return r;
}

Polynomial Polynomial::times_term(const Exponent& e, const Rational& c) const {
    Polynomial r(num_vars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Exponent sum = t.exponent;
        for (std::size_t i = 0; i < num_vars_; ++i) sum[i] += e[i];
        // Multiplication by a monomial preserves grevlex order.
        r.terms_.push_back({std::move(sum), t.coeff * c});
    }
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (o.num_vars_ != num_vars_) throw DimensionMismatch("multiplying polynomials in different rings");
    Polynomial r(num_vars_);
    for (const auto& t : o.terms_) r = r + times_term(t.exponent, t.coeff);
    return r;
}

Polynomial Polynomial::extended(std::size_t extra) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        Exponent e = t.exponent;
        e.resize(num_vars_ + extra, 0);
        ts.push_back({std::move(e), t.coeff});
    }
    return Polynomial(num_vars_ + extra, std::move(ts));
}

Rational Polynomial::evaluate(const std::vector<Rational>& x) const {
    if (x.size() != num_vars_)
        throw DimensionMismatch("evaluating a polynomial in " + std::to_string(num_vars_) + " variables at a point with " +
                                std::to_string(x.size()) + " coordinates");
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational m = t.coeff;
        for (std::size_t i = 0; i < num_vars_ && m != 0; ++i)
            if (t.exponent[i] != 0) m *= pow(x[i], t.exponent[i]);
        sum += m;
    }
    return sum;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            c = abs(c);
        }
        first = false;
        const bool constant = total_degree(t.exponent) == 0;
        if (constant) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << monomial_string(t.exponent);
        }
    }
    return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.num_vars_ != b.num_vars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exponent != b.terms_[i].exponent || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

HomPoly::HomPoly(Polynomial p) : poly_(std::move(p)), degree_(0) {
    if (poly_.is_zero()) throw ZeroPolynomial("hypersurface polynomial is zero");
    if (!poly_.is_homogeneous()) throw PreconditionViolated("polynomial " + poly_.to_string() + " is not homogeneous");
    degree_ = poly_.degree();
    if (degree_ == 0) throw PreconditionViolated("hypersurface polynomial must have degree >= 1");
}

Rational HomPoly::coefficient(const Exponent& e) const {
    for (const auto& t : poly_.terms())
        if (t.exponent == e) return t.coeff;
    return 0;
}

std::vector<Rational> HomPoly::coefficient_vector() const {
    std::vector<Rational> out;
    out.reserve(poly_.terms().size());
    for (const auto& t : poly_.terms()) out.push_back(t.coeff);
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct ParsedTerm {
    Exponent exponent;  // grows as variables are seen
    Rational coeff;
    std::string text;
};

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    std::vector<ParsedTerm> parse() {
        std::vector<ParsedTerm> terms;
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial");
        bool negative = false;
        if (peek() == '+' || peek() == '-') negative = get() == '-';
        terms.push_back(term(negative));
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const char c = get();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            terms.push_back(term(c == '-'));
        }
        return terms;
    }

private:
    ParsedTerm term(bool negative) {
        ParsedTerm t;
        t.coeff = negative ? -1 : 1;
        const std::size_t start = pos_;
        factor(t);
        for (;;) {
            skip_ws();
            if (at_end() || peek() != '*') break;
            get();
            factor(t);
        }
        t.text = trim(s_.substr(start, pos_ - start));
        return t;
    }

    void factor(ParsedTerm& t) {
        skip_ws();
        if (at_end()) fail("unexpected end of input");
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = integer();
            skip_ws();
            if (!at_end() && peek() == '/') {
                get();
                skip_ws();
                Integer den = integer();
                if (den == 0) fail("zero denominator");
                Rational r(num, den);
                r.canonicalize();
                t.coeff *= r;
            } else {
                t.coeff *= num;
            }
        } else if (c == 'x') {
            get();
            if (!at_end() && peek() == '_') get();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index after 'x'");
            const unsigned long idx = integer().get_ui();
            unsigned long e = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                get();
                skip_ws();
                e = integer().get_ui();
            }
            if (t.exponent.size() <= idx) t.exponent.resize(idx + 1, 0);
            t.exponent[idx] += static_cast<unsigned>(e);
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
    }

    Integer integer() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Integer(std::string(s_.substr(start, pos_ - start)), 10);
    }

    static std::string trim(std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
        return std::string(v);
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("polynomial '" + std::string(s_) + "', position " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char get() { return s_[pos_++]; }

    std::string_view s_;
    std::size_t pos_ = 0;
};

std::vector<ParsedTerm> parse_terms(std::string_view text, std::size_t& num_vars) {
    auto parsed = PolyParser(text).parse();
    std::size_t needed = 1;
    for (const auto& t : parsed) needed = std::max(needed, t.exponent.size());
    if (num_vars == 0) {
        num_vars = needed;
    } else if (needed > num_vars) {
        throw DimensionMismatch("polynomial '" + std::string(text) + "' uses x" + std::to_string(needed - 1) +
                                " but the ring has " + std::to_string(num_vars) + " variables");
    }
    for (auto& t : parsed) t.exponent.resize(num_vars, 0);
    return parsed;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t num_vars) {
    auto parsed = parse_terms(text, num_vars);
    std::vector<Term> terms;
    for (auto& t : parsed) terms.push_back({std::move(t.exponent), std::move(t.coeff)});
    return Polynomial(num_vars, std::move(terms));
}

HomPoly parse_hom_poly(std::string_view text, std::size_t num_vars) {
    auto parsed = parse_terms(text, num_vars);
    const unsigned d = total_degree(parsed.front().exponent);
    for (const auto& t : parsed) {
        if (total_degree(t.exponent) != d)
            throw ParseError("polynomial '" + std::string(text) + "' is not homogeneous: monomial '" + t.text +
                             "' has degree " + std::to_string(total_degree(t.exponent)) + ", expected " +
                             std::to_string(d));
    }
    std::vector<Term> terms;
    for (auto& t : parsed) terms.push_back({std::move(t.exponent), std::move(t.coeff)});
    return HomPoly(Polynomial(num_vars, std::move(terms)));
}

// ---------------------------------------------------------------------------
// Norms and Weil functions

Integer monomial_count(unsigned degree, std::size_t num_vars) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), degree + num_vars - 1, num_vars - 1);
    return r;
}

Rational evaluate(const HomPoly& q, const ProjPoint& x) { return q.poly().evaluate(x.coords()); }

Rational v_norm(const HomPoly& q, const Place& v) {
    Rational best = 0;
    for (const auto& t : q.terms()) best = std::max(best, normalized_abs(v, t.coeff));
    return best;
}

double height_poly(const HomPoly& q) { return height_point(ProjPoint(q.coefficient_vector())); }

Rational weil_argument(const HomPoly& q, const Place& v, const ProjPoint& x) {
    if (x.size() != q.num_vars())
        throw DimensionMismatch("point has " + std::to_string(x.size()) + " coordinates, polynomial has " +
                                std::to_string(q.num_vars()) + " variables");
    const Rational value = evaluate(q, x);
    if (value == 0) throw PointOnDivisor("point lies on {" + q.to_string() + " = 0}");
    return pow(point_norm(v, x), q.degree()) * v_norm(q, v) / normalized_abs(v, value);
}

WeilValue weil(const HomPoly& q, const Place& v, const ProjPoint& x) {
    return {log_of(weil_argument(q, v, x)), v};
}

Exponent default_pivot(const HomPoly& q) {
    Exponent best = q.terms().front().exponent;
    for (const auto& t : q.terms())
        if (t.exponent < best) best = t.exponent;
    return best;
}

HomPoly normalize(const HomPoly& q, const Exponent& pivot) {
    const Rational a = q.coefficient(pivot);
    if (a == 0) throw ZeroPivot("pivot monomial has zero coefficient in " + q.to_string());
    return HomPoly(q.poly().scaled(Rational(1) / a));
}

HomPoly normalize(const HomPoly& q) { return normalize(q, default_pivot(q)); }

double weil_min(const WeightedHypersurfaces& entries, const Place& v, const ProjPoint& x) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [q, c] : entries) {
        const double lambda = weil(q, v, x).value;
        best = std::min(best, c * lambda);
    }
    return best;
}

double weil_sum(const WeightedHypersurfaces& entries, const Place& v, const ProjPoint& x) {
    double sum = 0.0;
    for (const auto& [q, c] : entries) sum += c * weil(q, v, x).value;
    return sum;
}

}  // namespace dioph
