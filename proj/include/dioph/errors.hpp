#ifndef DIOPH_ERRORS_HPP
#define DIOPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dioph {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define DIOPH_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                   \
    public:                                                       \
        explicit Name(const std::string& what) : Error(what) {}   \
    };

DIOPH_DEFINE_ERROR(ZeroInput)
DIOPH_DEFINE_ERROR(ZeroPolynomial)
DIOPH_DEFINE_ERROR(DimensionMismatch)
DIOPH_DEFINE_ERROR(PointOnDivisor)
DIOPH_DEFINE_ERROR(ZeroPivot)
DIOPH_DEFINE_ERROR(ResourceLimit)
DIOPH_DEFINE_ERROR(EmptyScheme)
DIOPH_DEFINE_ERROR(AllWeightsZero)
DIOPH_DEFINE_ERROR(AllCZero)
DIOPH_DEFINE_ERROR(B1Zero)
DIOPH_DEFINE_ERROR(ParseError)
DIOPH_DEFINE_ERROR(PreconditionViolated)
DIOPH_DEFINE_ERROR(InvalidConfiguration)
DIOPH_DEFINE_ERROR(ExcludedAlpha)

#undef DIOPH_DEFINE_ERROR

/// Division by an index expression that vanishes at this alpha.
class DivisionByZeroAt : public Error {
public:
    explicit DivisionByZeroAt(long alpha)
        : Error("division by zero at alpha = " + std::to_string(alpha)), alpha_(alpha) {}
    long alpha() const noexcept { return alpha_; }

private:
    long alpha_;
};

/// A hypersurface with all coefficients zero, or an all-zero point, at alpha.
/// `which` is the 1-based hypersurface index, or 0 for the point.
class DegenerateInstance : public Error {
public:
    DegenerateInstance(long alpha, std::size_t which)
        : Error(which == 0 ? "point is all-zero at alpha = " + std::to_string(alpha)
                           : "hypersurface D_" + std::to_string(which) +
                                 " has all coefficients zero at alpha = " + std::to_string(alpha)),
          alpha_(alpha),
          which_(which) {}
    long alpha() const noexcept { return alpha_; }
    std::size_t which() const noexcept { return which_; }

private:
    long alpha_;
    std::size_t which_;
};

}  // namespace dioph

#endif
