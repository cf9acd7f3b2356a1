#ifndef DIOPH_FILTRATION_HPP
#define DIOPH_FILTRATION_HPP

#include <cstddef>
#include <vector>

#include "dioph/rational.hpp"

namespace dioph {

/// Data of the weighted filtration inequality: values log Delta_i (sorted
/// nonincreasing, nonnegative) with two families of indicators b_i, c_i >= 0.
class FiltrationInstance {
public:
    /// Throws PreconditionViolated on unsorted or negative log_deltas, negative
    /// indicators or length mismatch, and AllCZero if every c_i is zero.
    FiltrationInstance(std::vector<double> log_deltas, std::vector<double> b, std::vector<double> c);

    std::size_t size() const noexcept { return log_deltas_.size(); }
    const std::vector<double>& log_deltas() const noexcept { return log_deltas_; }
    const std::vector<double>& b() const noexcept { return b_; }
    const std::vector<double>& c() const noexcept { return c_; }

    /// sum_i b_i log Delta_i
    double b_side() const;
    /// sum_i c_i log Delta_i
    double c_side() const;

private:
    std::vector<double> log_deltas_, b_, c_;
};

/// An optimal prefix ratio and where it is attained (0-based, smallest on ties).
struct PrefixRatio {
    double value;
    std::size_t j_star;
};

/// min over j >= i_0 of B_j / C_j (prefix sums), with i_0 the first index where c is nonzero.
/// Guarantees sum b_i log Delta_i >= value * sum c_i log Delta_i.
PrefixRatio chebyshev_lower(const FiltrationInstance& inst);
/// max over j of C_j / B_j. Requires b_1 != 0 (B1Zero otherwise).
/// Guarantees value * sum b_i log Delta_i >= sum c_i log Delta_i.
PrefixRatio chebyshev_upper(const FiltrationInstance& inst);

/// Exhaustive recheck of both inequalities and of the optimizers.
/// The upper contract is skipped when b_1 = 0. Tolerance 1e-9.
bool brute_force_check(const FiltrationInstance& inst, double tolerance = 1e-9);

/// Ordering of hypersurfaces by decreasing Weil value with the prefix
/// codimension data b_j = min(codim(cap_{s<=j} D_{sigma(s)} cap V), n).
struct PrefixProfile {
    /// sigma: sorted position -> original 0-based index.
    std::vector<std::size_t> order;
    /// Last prefix length with nonempty intersection.
    std::size_t l = 0;
    /// Cumulative b_1..b_l.
    std::vector<int> b;
    /// b_j - b_{j-1} for j = 1..l, with b_0 = 0.
    std::vector<int> b_steps;
};

/// Checks order is a permutation, l <= size, b nondecreasing, steps consistent.
void validate_profile(const PrefixProfile& profile, int dim_v);

/// max_{j<=l} (sum_{j'<=j} c_{sigma(j')}) / b_j, exactly. Zero when l = 0.
Rational prefix_factor(const PrefixProfile& profile, const std::vector<Rational>& weights);

struct FiltrationSides {
    double factor;
    double lhs;
    double rhs;
};

/// Both sides of the weighted filtration applied to a sorted Weil profile.
/// `sorted_weil` is in sorted order; `inv_degrees` and `weights` are indexed by
/// original hypersurface. Slot values are mu_s = min_{s'<=s} lambda_{s'} / d_{s'}.
/// rhs = sum_{j<=l} c_{sigma(j)} mu_j, lhs = factor * sum_{s<=l} (b_s - b_{s-1}) mu_s.
FiltrationSides apply_weighted_filtration(const PrefixProfile& profile, const std::vector<double>& sorted_weil,
                                          const std::vector<double>& inv_degrees,
                                          const std::vector<Rational>& weights);

}  // namespace dioph

#endif
