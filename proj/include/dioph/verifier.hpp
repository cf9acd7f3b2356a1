#ifndef DIOPH_VERIFIER_HPP
#define DIOPH_VERIFIER_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dioph/filtration.hpp"
#include "dioph/ideal.hpp"
#include "dioph/moving.hpp"
#include "dioph/places.hpp"
#include "dioph/position.hpp"

namespace dioph {

struct VerificationConfig {
    Ideal variety{1};
    MovingFamily family;
    MovingPoint point{{SeqExpr::constant(1)}};
    std::vector<Rational> weights;
    PlaceSet places;
    /// First entry is the primary epsilon; further entries form a sweep.
    std::vector<double> epsilons{0.5};
    long alpha_first = 5;
    long alpha_last = 60;
    double tolerance = 1e-9;
    GroebnerLimits caps;
    double smallness_threshold = 0.2;
    std::string index_symbol = "a";
    /// Non-fatal observations made while loading (e.g. S without "inf").
    std::vector<std::string> warnings;

    double epsilon() const { return epsilons.front(); }
    bool unit_weights() const;
    /// Checks the invariants; throws InvalidConfiguration.
    void validate() const;
};

/// Parses the JSON configuration document. Errors name the offending field
/// and, for malformed JSON, the line.
VerificationConfig parse_config(std::string_view json_text);
VerificationConfig load_config(const std::string& path);

/// sum_{v in S} sum_i (c_i / d_i) lambda_{D_i(alpha), v}(x(alpha)).
/// Throws ExcludedAlpha with the reason when alpha is exceptional.
double compute_lhs(const VerificationConfig& cfg, long alpha);
/// (dim V + 1) * weighted_factor of the configuration instantiated at alpha.
Rational compute_factor(const VerificationConfig& cfg, long alpha);

enum class RowStatus { Ok, Violation, Excluded };

struct VerificationRow {
    long alpha = 0;
    double h_x = 0;
    double lhs = 0;
    Rational factor = 0;
    double normalized = 0;
    double margin = 0;
    RowStatus status = RowStatus::Excluded;
    std::string reason;
    /// Exact distributive constant at alpha (computed for unit weights only).
    std::optional<Rational> distributive;
    SubschemeWitness witness;

    std::string status_string() const;
};

struct SweepEntry {
    double epsilon;
    std::size_t violations;
    double min_margin;
};

struct VerificationSummary {
    std::size_t ok = 0, violations = 0, excluded = 0;
    double max_normalized = 0;
    double min_margin = 0;
    Rational max_factor = 0;
    int dim_v = 0;
    /// (n+1) * max_alpha Delta, reported for unit weights.
    std::optional<Rational> unweighted_bound;
    /// factor == (n+1) * Delta on every evaluated row (unit weights only).
    std::optional<bool> remark_equality;
    SmallnessReport smallness;
    std::vector<SweepEntry> sweep;
    std::vector<std::string> notes;
};

struct VerificationReport {
    std::vector<VerificationRow> rows;
    VerificationSummary summary;
    bool passed() const { return summary.violations == 0; }
};

VerificationRow evaluate_row(const VerificationConfig& cfg, long alpha);
/// Rows for every alpha in range, computed concurrently and merged in alpha order.
VerificationReport verify(const VerificationConfig& cfg);

/// CSV with header alpha,h_x,lhs,factor,normalized,margin,status followed by
/// the summary as '#' comment lines. 12 significant digits.
void write_csv(const VerificationReport& report, std::ostream& out);

struct FiltrationTrace {
    long alpha;
    Place place = Place::archimedean();
    WeilOrder weil;
    PrefixProfile profile;
    /// max_j (sum_{j'<=j} c_{sigma(j')}) / b_j, exact.
    Rational factor;
    /// weighted_factor of the instantiated configuration.
    Rational weighted_factor;
    FiltrationSides sides;
    bool holds;
};

/// Per-(v, alpha) derivation from the Weil ordering through the weighted
/// filtration inequality. Throws ExcludedAlpha.
FiltrationTrace filtration_trace(const VerificationConfig& cfg, long alpha, const Place& v);
void print_trace(const FiltrationTrace& trace, std::ostream& out);

}  // namespace dioph

#endif
