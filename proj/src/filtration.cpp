#include "dioph/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "dioph/errors.hpp"

namespace dioph {

FiltrationInstance::FiltrationInstance(std::vector<double> log_deltas, std::vector<double> b, std::vector<double> c)
    : log_deltas_(std::move(log_deltas)), b_(std::move(b)), c_(std::move(c)) {
    if (log_deltas_.empty()) throw PreconditionViolated("filtration instance needs n >= 1");
    if (b_.size() != log_deltas_.size() || c_.size() != log_deltas_.size())
        throw PreconditionViolated("filtration instance vectors differ in length");
    for (std::size_t i = 0; i < log_deltas_.size(); ++i) {
        if (!(log_deltas_[i] >= 0)) throw PreconditionViolated("log Delta_" + std::to_string(i + 1) + " is negative");
        if (i > 0 && log_deltas_[i] > log_deltas_[i - 1])
            throw PreconditionViolated("log Delta must be nonincreasing (index " + std::to_string(i + 1) + ")");
        if (!(b_[i] >= 0) || !(c_[i] >= 0)) throw PreconditionViolated("indicators must be nonnegative");
    }
    if (std::all_of(c_.begin(), c_.end(), [](double x) { return x == 0; }))
        throw AllCZero("every c_i is zero");
}

double FiltrationInstance::b_side() const {
    return std::inner_product(b_.begin(), b_.end(), log_deltas_.begin(), 0.0);
}

double FiltrationInstance::c_side() const {
    return std::inner_product(c_.begin(), c_.end(), log_deltas_.begin(), 0.0);
}

PrefixRatio chebyshev_lower(const FiltrationInstance& inst) {
    const auto& b = inst.b();
    const auto& c = inst.c();
    const auto i0 = static_cast<std::size_t>(std::find_if(c.begin(), c.end(), [](double x) { return x != 0; }) - c.begin());
    double sb = 0, sc = 0;
    PrefixRatio best{std::numeric_limits<double>::infinity(), i0};
    for (std::size_t j = 0; j < inst.size(); ++j) {
        sb += b[j];
        sc += c[j];
        if (j < i0) continue;
        const double r = sb / sc;
        if (r < best.value) best = {r, j};
    }
    return best;
}

PrefixRatio chebyshev_upper(const FiltrationInstance& inst) {
    const auto& b = inst.b();
    const auto& c = inst.c();
    if (b.front() == 0) throw B1Zero("chebyshev_upper requires b_1 != 0");
    double sb = 0, sc = 0;
    PrefixRatio best{-std::numeric_limits<double>::infinity(), 0};
    for (std::size_t j = 0; j < inst.size(); ++j) {
        sb += b[j];
        sc += c[j];
        const double r = sc / sb;
        if (r > best.value) best = {r, j};
    }
    return best;
}

bool brute_force_check(const FiltrationInstance& inst, double tolerance) {
    const std::size_t n = inst.size();
    const auto& b = inst.b();
    const auto& c = inst.c();
    auto prefix = [&](const std::vector<double>& v, std::size_t j) {
        double s = 0;
        for (std::size_t i = 0; i <= j; ++i) s += v[i];
        return s;
    };
    // Lower contract: scan every admissible j.
    std::size_t i0 = 0;
    while (c[i0] == 0) ++i0;
    double lo = 0;
    std::size_t lo_j = n;
    for (std::size_t j = i0; j < n; ++j) {
        const double r = prefix(b, j) / prefix(c, j);
        if (lo_j == n || r < lo) {
            lo = r;
            lo_j = j;
        }
    }
    const PrefixRatio lower = chebyshev_lower(inst);
    if (lower.j_star != lo_j || std::abs(lower.value - lo) > tolerance * std::max(1.0, std::abs(lo))) return false;
    const double scale = std::max({1.0, inst.b_side(), inst.c_side()});
    if (inst.b_side() < lo * inst.c_side() - tolerance * scale) return false;

    if (b.front() != 0) {
        double hi = 0;
        std::size_t hi_j = n;
        for (std::size_t j = 0; j < n; ++j) {
            const double r = prefix(c, j) / prefix(b, j);
            if (hi_j == n || r > hi) {
                hi = r;
                hi_j = j;
            }
        }
        const PrefixRatio upper = chebyshev_upper(inst);
        if (upper.j_star != hi_j || std::abs(upper.value - hi) > tolerance * std::max(1.0, std::abs(hi)))
            return false;
        const double upper_scale = std::max(scale, hi * inst.b_side());
        if (hi * inst.b_side() < inst.c_side() - tolerance * upper_scale) return false;
    }
    return true;
}

void validate_profile(const PrefixProfile& p, int dim_v) {
    std::vector<std::size_t> sorted = p.order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i) throw PreconditionViolated("prefix profile order is not a permutation");
    if (p.l > p.order.size() || p.b.size() != p.l || p.b_steps.size() != p.l)
        throw PreconditionViolated("prefix profile lengths inconsistent with l");
    int prev = 0;
    for (std::size_t j = 0; j < p.l; ++j) {
        if (p.b[j] < prev || p.b[j] > dim_v) throw PreconditionViolated("prefix codimensions must be nondecreasing and <= dim V");
        if (p.b_steps[j] != p.b[j] - prev) throw PreconditionViolated("b_steps are not successive differences");
        prev = p.b[j];
    }
}

Rational prefix_factor(const PrefixProfile& profile, const std::vector<Rational>& weights) {
    Rational best = 0;
    Rational running = 0;
    for (std::size_t j = 0; j < profile.l; ++j) {
        running += weights.at(profile.order[j]);
        if (profile.b[j] == 0) throw B1Zero("prefix codimension is zero at position " + std::to_string(j + 1));
        best = std::max(best, Rational(running / profile.b[j]));
    }
    return best;
}

FiltrationSides apply_weighted_filtration(const PrefixProfile& profile, const std::vector<double>& sorted_weil,
                                          const std::vector<double>& inv_degrees,
                                          const std::vector<Rational>& weights) {
    const std::size_t q = profile.order.size();
    if (sorted_weil.size() != q || inv_degrees.size() != q || weights.size() != q)
        throw PreconditionViolated("apply_weighted_filtration: inconsistent lengths");
    for (std::size_t j = 0; j < q; ++j) {
        if (sorted_weil[j] < 0) throw PreconditionViolated("sorted Weil values must be nonnegative");
        if (j > 0 && sorted_weil[j] > sorted_weil[j - 1])
            throw PreconditionViolated("Weil values must be sorted nonincreasing");
    }
    const double factor = profile.l == 0 ? 0.0 : prefix_factor(profile, weights).get_d();
    double lhs_sum = 0, rhs = 0;
    double mu = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < profile.l; ++s) {
        const std::size_t i = profile.order[s];
        mu = std::min(mu, sorted_weil[s] * inv_degrees[i]);
        lhs_sum += profile.b_steps[s] * mu;
        rhs += weights[i].get_d() * mu;
    }
    return {factor, factor * lhs_sum, rhs};
}

}  // namespace dioph
