#ifndef DIOPH_POLYNOMIAL_HPP
#define DIOPH_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dioph/places.hpp"
#include "dioph/rational.hpp"

namespace dioph {

/// Exponent vector (i_0, ..., i_M) of a monomial x^I.
using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);
bool divides(const Exponent& a, const Exponent& b);
Exponent lcm(const Exponent& a, const Exponent& b);
/// Graded reverse lexicographic: a > b if deg a > deg b, or equal degrees and
/// the last nonzero entry of a - b is negative.
bool grevlex_greater(const Exponent& a, const Exponent& b);

struct Term {
    Exponent exponent;
    Rational coeff;
};

/// Sparse polynomial over Q in a fixed number of variables. Terms are kept
/// sorted in decreasing grevlex order with no zero coefficients.
class Polynomial {
public:
    explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}
    Polynomial(std::size_t num_vars, std::vector<Term> terms);

    static Polynomial constant(std::size_t num_vars, const Rational& c);
    static Polynomial variable(std::size_t num_vars, std::size_t index);

    std::size_t num_vars() const noexcept { return num_vars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    const Term& leading() const { return terms_.front(); }
    /// Maximal total degree over terms; 0 for the zero polynomial.
    unsigned degree() const;
    bool is_homogeneous() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const { return scaled(-1); }
    /// This polynomial without its leading term.
    Polynomial tail() const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times_term(const Exponent& e, const Rational& c) const;
    /// Appends `extra` variables with exponent 0.
    Polynomial extended(std::size_t extra) const;

    Rational evaluate(const std::vector<Rational>& x) const;

    std::string to_string() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    std::size_t num_vars_;
    std::vector<Term> terms_;
};

/// Homogeneous nonzero polynomial Q = sum_{I in T_d} a_I x^I with d >= 1.
class HomPoly {
public:
    /// Throws ZeroPolynomial if zero, PreconditionViolated if not homogeneous
    /// or of degree 0.
    explicit HomPoly(Polynomial p);

    std::size_t num_vars() const noexcept { return poly_.num_vars(); }
    unsigned degree() const noexcept { return degree_; }
    const Polynomial& poly() const noexcept { return poly_; }
    const std::vector<Term>& terms() const noexcept { return poly_.terms(); }
    /// a_I, zero when absent.
    Rational coefficient(const Exponent& e) const;
    std::vector<Rational> coefficient_vector() const;

    std::string to_string() const { return poly_.to_string(); }
    friend bool operator==(const HomPoly& a, const HomPoly& b) { return a.poly_ == b.poly_; }

private:
    Polynomial poly_;
    unsigned degree_;
};

/// Parses `c * x0^a0 * x1^a1 * ...` terms joined by + and -. Coefficients are
/// integers or p/q. `num_vars` of 0 infers M+1 from the largest index used.
Polynomial parse_polynomial(std::string_view text, std::size_t num_vars = 0);
/// As parse_polynomial, rejecting non-homogeneous input with the offending monomial named.
HomPoly parse_hom_poly(std::string_view text, std::size_t num_vars = 0);

/// #T_d = C(d + M, M) for M+1 variables.
Integer monomial_count(unsigned degree, std::size_t num_vars);

Rational evaluate(const HomPoly& q, const ProjPoint& x);
/// ||Q||_v = max_I ||a_I||_v.
Rational v_norm(const HomPoly& q, const Place& v);
/// h(Q) = sum_v log ||Q||_v, the height of the coefficient vector.
double height_poly(const HomPoly& q);

/// Local proximity lambda_{Q,v}(x) of x to {Q = 0}.
struct WeilValue {
    double value;
    Place place;
};

/// The exact argument ||x||_v^d ||Q||_v / ||Q(x)||_v of the Weil function.
/// Throws PointOnDivisor if Q(x) = 0.
Rational weil_argument(const HomPoly& q, const Place& v, const ProjPoint& x);
WeilValue weil(const HomPoly& q, const Place& v, const ProjPoint& x);

/// Q / a_pivot. Throws ZeroPivot if the pivot coefficient is zero.
HomPoly normalize(const HomPoly& q, const Exponent& pivot);
/// Pivot at the lexicographically smallest exponent with nonzero coefficient.
HomPoly normalize(const HomPoly& q);
Exponent default_pivot(const HomPoly& q);

/// (Q_i, c_i) pairs for weighted intersections and sums of hypersurfaces.
using WeightedHypersurfaces = std::vector<std::pair<HomPoly, double>>;

/// min_i c_i lambda_{Q_i,v}(x): Weil function of c_1 D_1 cap ... cap c_r D_r.
/// Returns +infinity for an empty list.
double weil_min(const WeightedHypersurfaces& entries, const Place& v, const ProjPoint& x);
/// sum_i c_i lambda_{Q_i,v}(x): Weil function of c_1 D_1 + ... + c_r D_r.
double weil_sum(const WeightedHypersurfaces& entries, const Place& v, const ProjPoint& x);

}  // namespace dioph

#endif
