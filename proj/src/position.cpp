#include "dioph/position.hpp"

#include <algorithm>
#include <functional>

#include "dioph/errors.hpp"

namespace dioph {

std::string format_subset(const Subset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i] + 1);
    }
    return out + "}";
}

namespace {

std::uint32_t mask_of(const Subset& s) {
    std::uint32_t m = 0;
    for (auto i : s) m |= std::uint32_t{1} << i;
    return m;
}

}  // namespace

WeightedConfiguration::WeightedConfiguration(Ideal variety, std::vector<HomPoly> hypersurfaces,
                                             std::vector<Rational> weights, GroebnerLimits limits)
    : variety_(std::move(variety)),
      hypersurfaces_(std::move(hypersurfaces)),
      weights_(std::move(weights)),
      limits_(limits),
      cache_(std::make_shared<Cache>()) {
    if (hypersurfaces_.size() != weights_.size())
        throw InvalidConfiguration(std::to_string(hypersurfaces_.size()) + " hypersurfaces but " +
                                   std::to_string(weights_.size()) + " weights");
    if (hypersurfaces_.size() > max_hypersurfaces)
        throw ResourceLimit("configuration has " + std::to_string(hypersurfaces_.size()) +
                            " hypersurfaces; subset enumeration is capped at " + std::to_string(max_hypersurfaces));
    for (const auto& c : weights_)
        if (c < 0) throw InvalidConfiguration("negative weight " + to_string(c));
    const auto base = intersection_basis({});
    for (std::size_t i = 0; i < hypersurfaces_.size(); ++i) {
        if (hypersurfaces_[i].num_vars() != variety_.num_vars())
            throw DimensionMismatch("D_" + std::to_string(i + 1) + " is in the wrong number of variables");
        if (member(hypersurfaces_[i], *base))
            throw InvalidConfiguration("D_" + std::to_string(i + 1) + " = {" + hypersurfaces_[i].to_string() +
                                       " = 0} contains V");
    }
}

WeightedConfiguration::WeightedConfiguration(Ideal variety, std::vector<HomPoly> hypersurfaces, GroebnerLimits limits)
    : WeightedConfiguration(variety, hypersurfaces, std::vector<Rational>(hypersurfaces.size(), Rational(1)), limits) {
}

WeightedConfiguration WeightedConfiguration::with_weights(std::vector<Rational> weights) const {
    WeightedConfiguration copy = *this;
    if (weights.size() != hypersurfaces_.size()) throw InvalidConfiguration("weight count mismatch");
    for (const auto& c : weights)
        if (c < 0) throw InvalidConfiguration("negative weight " + to_string(c));
    copy.weights_ = std::move(weights);
    return copy;
}

int WeightedConfiguration::dimension() const { return proj_dim(*intersection_basis({})).value; }

std::shared_ptr<const GroebnerBasis> WeightedConfiguration::intersection_basis(const Subset& s) const {
    const std::uint32_t key = mask_of(s);
    {
        std::lock_guard lock(cache_->mutex);
        if (auto it = cache_->bases.find(key); it != cache_->bases.end()) return it->second;
    }
    std::vector<HomPoly> extra;
    for (auto i : s) extra.push_back(hypersurfaces_.at(i));
    auto basis = std::make_shared<const GroebnerBasis>(groebner(variety_.plus(extra), limits_));
    std::lock_guard lock(cache_->mutex);
    cache_->bases[key] = basis;
    return basis;
}

Codim WeightedConfiguration::codim(const Subset& s) const {
    return codim_between(*intersection_basis({}), *intersection_basis(s));
}

std::vector<Subset> nonempty_subsets(std::size_t q, std::size_t max_size) {
    std::vector<Subset> out;
    Subset cur;
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t k) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < q; ++i) {
            cur.push_back(i);
            choose(i + 1, k);
            cur.pop_back();
        }
    };
    for (std::size_t k = 1; k <= std::min(q, max_size); ++k) choose(0, k);
    return out;
}

SubgeneralResult check_subgeneral(const WeightedConfiguration& cfg, int m) {
    const int n = cfg.dimension();
    if (m < n) throw PreconditionViolated("m = " + std::to_string(m) + " is smaller than dim V = " + std::to_string(n));
    for (const auto& s : nonempty_subsets(cfg.size(), static_cast<std::size_t>(m) + 1)) {
        const int bound = n - (m - static_cast<int>(s.size()));
        if (!cfg.codim(s).at_least(bound)) return {false, s};
    }
    return {};
}

SubgeneralResult check_index(const WeightedConfiguration& cfg, int kappa) {
    const int n = cfg.dimension();
    if (kappa < 1 || kappa > n)
        throw PreconditionViolated("index kappa = " + std::to_string(kappa) + " outside [1, dim V = " +
                                   std::to_string(n) + "]");
    for (const auto& s : nonempty_subsets(cfg.size(), static_cast<std::size_t>(kappa))) {
        if (!cfg.codim(s).at_least(static_cast<int>(s.size()))) return {false, s};
    }
    return {};
}

namespace {

void require_proper(const Codim& c, const Subset& s) {
    if (!c.is_infinite() && c.value() <= 0)
        throw InvalidConfiguration("intersection over " + format_subset(s) + " has codimension " + c.to_string() +
                                   " in V (is V irreducible?)");
}

}  // namespace

Rational distributive_constant(const WeightedConfiguration& cfg) {
    Rational best = 1;
    for (const auto& s : nonempty_subsets(cfg.size(), cfg.size())) {
        const Codim c = cfg.codim(s);
        if (c.is_infinite()) continue;
        require_proper(c, s);
        best = std::max(best, Rational(Rational(static_cast<long>(s.size())) / c.value()));
    }
    return best;
}

WeightedFactor weighted_factor(const WeightedConfiguration& cfg) {
    const auto& weights = cfg.weights();
    if (std::all_of(weights.begin(), weights.end(), [](const Rational& c) { return c == 0; }))
        throw AllWeightsZero("weighted_factor needs at least one positive weight");

    WeightedFactor best{0, {}};
    bool found = false;
    for (const auto& s : nonempty_subsets(cfg.size(), cfg.size())) {
        const Codim c = cfg.codim(s);
        if (c.is_infinite()) continue;
        require_proper(c, s);
        std::vector<HomPoly> extra;
        for (auto j : s) extra.push_back(cfg.hypersurfaces()[j]);
        const Ideal w = cfg.variety().plus(extra);
        const auto basis = cfg.intersection_basis(s);

        Rational alpha = 0;
        for (std::size_t i = 0; i < cfg.size(); ++i) {
            if (weights[i] == 0) continue;
            const bool listed = std::binary_search(s.begin(), s.end(), i);
            if (listed || member(cfg.hypersurfaces()[i], *basis) ||
                radical_member(cfg.hypersurfaces()[i], w, cfg.limits()))
                alpha += weights[i];
        }
        Rational ratio = alpha / c.value();
        if (!found || ratio > best.value) {
            best = {ratio, {s, c, alpha, ratio}};
            found = true;
        }
    }
    return best;
}

Rational seshadri_hypersurface(unsigned degree) {
    if (degree == 0) throw PreconditionViolated("hypersurface degree must be >= 1");
    return Rational(1, degree);
}

}  // namespace dioph
