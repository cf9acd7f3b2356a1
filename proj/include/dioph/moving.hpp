#ifndef DIOPH_MOVING_HPP
#define DIOPH_MOVING_HPP

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dioph/filtration.hpp"
#include "dioph/ideal.hpp"
#include "dioph/places.hpp"
#include "dioph/polynomial.hpp"
#include "dioph/position.hpp"

namespace dioph {

/// Expression in the index variable alpha over Q: literals, alpha, + - * /,
/// and powers whose exponent evaluates to an integer (so both x^3 and 2^a).
class SeqExpr {
public:
    /// Parses text such as "a^2 + 1", "1/(a - 2)", "2^a", "pow(3/2, a)".
    /// `symbol` names the index variable; "alpha" is always accepted too.
    static SeqExpr parse(std::string_view text, std::string_view symbol = "a");
    static SeqExpr constant(const Rational& c);

    /// Exact value at alpha. Throws DivisionByZeroAt(alpha).
    Rational eval(long alpha) const;
    const std::string& text() const noexcept { return text_; }

    struct Node;

private:
    SeqExpr(std::shared_ptr<const Node> root, std::string text) : root_(std::move(root)), text_(std::move(text)) {}
    std::shared_ptr<const Node> root_;
    std::string text_;
};

inline Rational eval_seq(const SeqExpr& e, long alpha) { return e.eval(alpha); }

/// Q_j = sum_{I in T_{d_j}} a_{j,I}(alpha) x^I.
class MovingHypersurface {
public:
    MovingHypersurface(std::size_t num_vars, unsigned degree, std::vector<std::pair<Exponent, SeqExpr>> coeffs);

    std::size_t num_vars() const noexcept { return num_vars_; }
    unsigned degree() const noexcept { return degree_; }
    const std::vector<std::pair<Exponent, SeqExpr>>& coeffs() const noexcept { return coeffs_; }

    /// Throws DegenerateInstance(alpha, which) if every coefficient vanishes.
    HomPoly at(long alpha, std::size_t which = 1) const;

private:
    std::size_t num_vars_;
    unsigned degree_;
    std::vector<std::pair<Exponent, SeqExpr>> coeffs_;
};

/// alpha -> x(alpha) in P^M(Q).
class MovingPoint {
public:
    explicit MovingPoint(std::vector<SeqExpr> coords);
    std::size_t num_vars() const noexcept { return coords_.size(); }
    const std::vector<SeqExpr>& coords() const noexcept { return coords_; }
    /// Throws DegenerateInstance(alpha, 0) if all coordinates vanish.
    ProjPoint at(long alpha) const;

private:
    std::vector<SeqExpr> coords_;
};

using MovingFamily = std::vector<MovingHypersurface>;

struct Instance {
    std::vector<HomPoly> hypersurfaces;
    ProjPoint point;
};

Instance instantiate(const MovingFamily& family, const MovingPoint& point, long alpha);

struct SmallnessRow {
    long alpha;
    double h_x;
    double max_h_q;
    double ratio;
};

struct SmallnessReport {
    std::vector<SmallnessRow> rows;
    /// alphas skipped as degenerate or with h(x(alpha)) = 0.
    std::vector<long> skipped;
    /// Least-squares slope of ratio against alpha.
    double slope = 0;
    std::vector<std::string> warnings;
};

/// Heights h(x(alpha)) against max_j h(Q_j(alpha)) over [first, last].
/// Warns when the final ratio exceeds `threshold` or the ratios are nonzero
/// with a nonnegative trend.
SmallnessReport smallness_report(const MovingFamily& family, const MovingPoint& point, long first, long last,
                                 double threshold = 0.2);

/// Hypersurfaces sorted by decreasing Weil value at (v, x).
struct WeilOrder {
    /// sigma: sorted position -> original index.
    std::vector<std::size_t> order;
    /// lambda_{sigma(j)}, nonincreasing, negatives clamped to 0.
    std::vector<double> sorted_weil;
    /// Unclamped values by original index.
    std::vector<double> raw_weil;
    /// Largest amount a value was raised by the clamp.
    double clamp = 0;
};

/// Throws PointOnDivisor if x lies on some hypersurface. Ties go to the smaller index.
WeilOrder order_weil(const std::vector<HomPoly>& hypersurfaces, const Place& v, const ProjPoint& x);

/// Prefix codimensions of the configuration's hypersurfaces taken in `order`.
PrefixProfile prefix_profile(const WeightedConfiguration& cfg, const std::vector<std::size_t>& order);
/// Same for an already sorted list.
PrefixProfile prefix_profile(const Ideal& variety, const std::vector<HomPoly>& sorted,
                             const GroebnerLimits& limits = {});

}  // namespace dioph

#endif
