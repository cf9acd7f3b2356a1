#ifndef DIOPH_POSITION_HPP
#define DIOPH_POSITION_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dioph/ideal.hpp"
#include "dioph/polynomial.hpp"

namespace dioph {

/// Sorted 0-based indices into a configuration's hypersurface list.
using Subset = std::vector<std::size_t>;

/// "{1,3}" style, 1-based.
std::string format_subset(const Subset& s);

/// Variety V with hypersurfaces D_1..D_q and weights c_1..c_q.
class WeightedConfiguration {
public:
    /// Checks lengths, nonnegative weights, and that no Q_i lies in I(V).
    WeightedConfiguration(Ideal variety, std::vector<HomPoly> hypersurfaces, std::vector<Rational> weights,
                          GroebnerLimits limits = {});
    /// All weights 1.
    WeightedConfiguration(Ideal variety, std::vector<HomPoly> hypersurfaces, GroebnerLimits limits = {});

    static constexpr std::size_t max_hypersurfaces = 12;

    const Ideal& variety() const noexcept { return variety_; }
    const std::vector<HomPoly>& hypersurfaces() const noexcept { return hypersurfaces_; }
    const std::vector<Rational>& weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return hypersurfaces_.size(); }
    const GroebnerLimits& limits() const noexcept { return limits_; }
    /// n = dim V.
    int dimension() const;

    /// Groebner basis of I(V) + (Q_j : j in s), memoized per subset.
    std::shared_ptr<const GroebnerBasis> intersection_basis(const Subset& s) const;
    /// codim of (cap_{j in s} D_j) cap V in V.
    Codim codim(const Subset& s) const;

    /// Copy with different weights sharing the intersection cache.
    WeightedConfiguration with_weights(std::vector<Rational> weights) const;

private:
    struct Cache {
        std::mutex mutex;
        std::map<std::uint32_t, std::shared_ptr<const GroebnerBasis>> bases;
    };

    Ideal variety_;
    std::vector<HomPoly> hypersurfaces_;
    std::vector<Rational> weights_;
    GroebnerLimits limits_;
    std::shared_ptr<Cache> cache_;
};

/// Nonempty subsets of {0..q-1} ordered by size, then lexicographically.
std::vector<Subset> nonempty_subsets(std::size_t q, std::size_t max_size);

struct SubgeneralResult {
    bool holds = true;
    /// First violating subset when `holds` is false.
    std::optional<Subset> violation;
};

/// m-subgeneral position: codim >= dim V - (m - #G) for every #G <= m + 1.
SubgeneralResult check_subgeneral(const WeightedConfiguration& cfg, int m);
/// Index kappa condition: codim >= #G for every #G <= kappa.
SubgeneralResult check_index(const WeightedConfiguration& cfg, int kappa);

/// max(1, max_G #G / codim(cap_G D_j cap V)) with #G / inf = 0.
Rational distributive_constant(const WeightedConfiguration& cfg);

struct SubschemeWitness {
    Subset subset;
    Codim codim = Codim::infinite();
    Rational alpha_value;
    Rational ratio;
};

struct WeightedFactor {
    Rational value;
    SubschemeWitness witness;
};

/// max over W = cap_{j in G} D_j cap V, empty != W != V, of alpha(W) / codim W
/// where alpha(W) sums c_i over every i with W inside Supp D_i.
WeightedFactor weighted_factor(const WeightedConfiguration& cfg);

/// Seshadri constant of a degree-d hypersurface with respect to a hyperplane.
Rational seshadri_hypersurface(unsigned degree);

}  // namespace dioph

#endif
