#ifndef DIOPH_IDEAL_HPP
#define DIOPH_IDEAL_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dioph/polynomial.hpp"

namespace dioph {

/// Caps on Buchberger's algorithm. Exceeding either raises ResourceLimit.
struct GroebnerLimits {
    std::size_t max_pairs = 10000;
    unsigned max_degree = 30;
};

/// Homogeneous ideal of Q[x_0, ..., x_M]. No generators is the zero ideal.
class Ideal {
public:
    explicit Ideal(std::size_t num_vars, std::vector<HomPoly> generators = {});

    std::size_t num_vars() const noexcept { return num_vars_; }
    const std::vector<HomPoly>& generators() const noexcept { return generators_; }
    bool is_zero() const noexcept { return generators_.empty(); }

    /// I + (extra).
    Ideal plus(const std::vector<HomPoly>& extra) const;

private:
    std::size_t num_vars_;
    std::vector<HomPoly> generators_;
};

/// Reduced Groebner basis under grevlex: monic, no leading monomial divides another.
class GroebnerBasis {
public:
    GroebnerBasis(std::size_t num_vars, std::vector<Polynomial> basis);

    std::size_t num_vars() const noexcept { return num_vars_; }
    const std::vector<Polynomial>& basis() const noexcept { return basis_; }
    std::vector<Exponent> leading_monomials() const;
    /// True iff the basis is {1}.
    bool is_unit() const;

    /// Full reduction of f modulo the basis.
    Polynomial normal_form(const Polynomial& f) const;

private:
    std::size_t num_vars_;
    std::vector<Polynomial> basis_;
};

/// Buchberger's algorithm with normal selection and both criteria. Works on
/// arbitrary (not necessarily homogeneous) generators of the same ring.
GroebnerBasis groebner(std::size_t num_vars, const std::vector<Polynomial>& generators,
                       const GroebnerLimits& limits = {});
GroebnerBasis groebner(const Ideal& ideal, const GroebnerLimits& limits = {});

/// f in I, decided by the normal form modulo G.
bool member(const Polynomial& f, const GroebnerBasis& g);
bool member(const HomPoly& f, const GroebnerBasis& g);

/// f in sqrt(I): 1 in I + (1 - y f) over Q[x_0, ..., x_M, y].
bool radical_member(const HomPoly& f, const Ideal& ideal, const GroebnerLimits& limits = {});

/// Dimension of the projective scheme; -1 encodes the empty scheme.
struct ProjDim {
    int value;
    bool empty() const noexcept { return value < 0; }
    friend auto operator<=>(const ProjDim&, const ProjDim&) = default;
};

/// Krull dimension of the cone minus one, read off the initial ideal.
ProjDim proj_dim(const GroebnerBasis& g);
ProjDim proj_dim(const Ideal& ideal, const GroebnerLimits& limits = {});

/// A codimension, with infinity standing for the codimension of the empty set.
class Codim {
public:
    static Codim infinite() { return Codim(); }
    static Codim finite(int value) { return Codim(value); }

    bool is_infinite() const noexcept { return !value_; }
    /// Throws PreconditionViolated when infinite.
    int value() const;

    /// True iff this codimension satisfies >= bound (infinity passes every bound).
    bool at_least(int bound) const noexcept { return is_infinite() || *value_ >= bound; }

    std::string to_string() const { return is_infinite() ? "inf" : std::to_string(*value_); }
    friend bool operator==(const Codim&, const Codim&) = default;

private:
    Codim() = default;
    explicit Codim(int v) : value_(v) {}
    std::optional<int> value_;
};

/// Codimension of V cap {W_extra = 0} inside V.
Codim codim_in(const Ideal& variety, const std::vector<HomPoly>& extra, const GroebnerLimits& limits = {});
/// Same, from precomputed bases of V and of the intersection.
Codim codim_between(const GroebnerBasis& variety, const GroebnerBasis& intersection);

/// Number of degree-N monomials outside the initial ideal.
Integer hilbert_function(const GroebnerBasis& g, unsigned n);
Integer hilbert_function(const Ideal& variety, unsigned n, const GroebnerLimits& limits = {});

/// Leading coefficient of the Hilbert polynomial times n!, for n = dim V.
/// Throws EmptyScheme when the projective scheme is empty.
Integer degree_of_variety(const Ideal& variety, const GroebnerLimits& limits = {});

}  // namespace dioph

#endif
