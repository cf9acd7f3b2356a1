#ifndef DIOPH_PLACES_HPP
#define DIOPH_PLACES_HPP

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dioph/rational.hpp"

namespace dioph {

/// A place of Q: the archimedean absolute value or the p-adic one for a prime p.
class Place {
public:
    enum class Kind { Archimedean, Finite };

    static Place archimedean() { return Place{}; }
    /// Throws PreconditionViolated unless p is prime.
    static Place finite(const Integer& p);
    /// "inf" or "p:<prime>".
    static Place parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    bool is_archimedean() const noexcept { return kind_ == Kind::Archimedean; }
    const Integer& prime() const noexcept { return prime_; }
    /// n_v = [k_v : Q_v] / [k : Q]; always 1 over Q.
    int local_degree() const noexcept { return 1; }

    std::string to_string() const;

    friend bool operator==(const Place& a, const Place& b) {
        return a.kind_ == b.kind_ && a.prime_ == b.prime_;
    }
    /// Archimedean first, then primes ascending.
    friend bool operator<(const Place& a, const Place& b) {
        if (a.kind_ != b.kind_) return a.kind_ == Kind::Archimedean;
        return a.prime_ < b.prime_;
    }

private:
    Place() = default;
    Kind kind_ = Kind::Archimedean;
    Integer prime_ = 0;
};

using PlaceSet = std::set<Place>;

PlaceSet parse_place_set(const std::vector<std::string>& items);

/// A point of P^M(Q) given by M+1 homogeneous coordinates, not all zero.
class ProjPoint {
public:
    explicit ProjPoint(std::vector<Rational> coords);

    std::size_t size() const noexcept { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }

    /// Representative with coprime integer coordinates whose first nonzero entry is positive.
    std::vector<Integer> primitive_coords() const;
    ProjPoint scaled(const Rational& lambda) const;

    /// Projective equality: coordinates proportional.
    friend bool operator==(const ProjPoint& a, const ProjPoint& b);

private:
    std::vector<Rational> coords_;
};

/// Prime factors of |n| in ascending order, without multiplicity. n != 0.
std::vector<Integer> prime_factors(const Integer& n);
bool is_prime(const Integer& n);
/// Exponent of p in x != 0 (negative when p divides the denominator).
long ord_p(const Rational& x, const Integer& p);

/// ||x||_v. Zero maps to zero at every place.
Rational normalized_abs(const Place& v, const Rational& x);
/// Archimedean place plus every prime dividing numerator or denominator.
PlaceSet support_places(const Rational& x);
/// prod over support_places(x) of ||x||_v; equal to 1 by the product formula.
Rational product_over_places(const Rational& x);

/// max_i ||x_i||_v.
Rational point_norm(const Place& v, const ProjPoint& x);

/// prod_v max_i ||x_i||_v, the exponential of h(x), exactly.
Integer multiplicative_height(const ProjPoint& x);
/// h(x) = sum_v log max_i ||x_i||_v.
double height_point(const ProjPoint& x);
/// h(x) = sum_v log+ ||x||_v. Throws ZeroInput on 0.
double height_scalar(const Rational& x);

}  // namespace dioph

#endif
