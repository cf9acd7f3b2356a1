#include <doctest.h>

#include "dioph/errors.hpp"
#include "dioph/position.hpp"
#include "fixtures.hpp"

using namespace dioph;

namespace {

WeightedConfiguration plane(std::initializer_list<const char*> hyps, std::vector<Rational> weights = {}) {
    std::vector<HomPoly> h;
    for (auto s : hyps) h.push_back(parse_hom_poly(s, 3));
    if (weights.empty()) weights.assign(h.size(), 1);
    return WeightedConfiguration(Ideal(3), h, weights);
}

}  // namespace

TEST_CASE("configuration invariants") {
    const Ideal conic(3, {parse_hom_poly("x0*x2 - x1^2", 3)});
    CHECK_THROWS_AS(WeightedConfiguration(conic, {parse_hom_poly("2*x0*x2 - 2*x1^2", 3)}), InvalidConfiguration);
    CHECK_THROWS_AS(WeightedConfiguration(Ideal(3), {parse_hom_poly("x0", 3)}, {Rational(1), Rational(2)}),
                    InvalidConfiguration);
    CHECK_THROWS_AS(WeightedConfiguration(Ideal(3), {parse_hom_poly("x0", 3)}, {Rational(-1)}), InvalidConfiguration);
    CHECK(format_subset({0, 2}) == "{1,3}");
    CHECK(nonempty_subsets(3, 3).size() == 7);
    CHECK(nonempty_subsets(4, 2).size() == 10);
}

TEST_CASE("subgeneral position") {
    CHECK(check_subgeneral(plane({"x0", "x1", "x2"}), 2).holds);
    const auto dup = check_subgeneral(plane({"x0", "2*x0", "x1"}), 2);
    CHECK_FALSE(dup.holds);
    REQUIRE(dup.violation);
    CHECK(*dup.violation == Subset{0, 1});
    CHECK(check_subgeneral(plane({"x0"}), 2).holds);
    // duplicates are fine in 3-subgeneral position: codim 1 >= 2 - (3 - 2)
    CHECK(check_subgeneral(plane({"x0", "2*x0", "x1"}), 3).holds);
    CHECK_THROWS_AS(check_subgeneral(plane({"x0"}), 1), PreconditionViolated);
}

TEST_CASE("index condition") {
    CHECK(check_index(plane({"x0", "x1", "x2"}), 2).holds);
    CHECK_FALSE(check_index(plane({"x0", "2*x0"}), 2).holds);
    CHECK(check_index(plane({"x0^2 + x1^2 + x2^2"}), 1).holds);
    CHECK_THROWS_AS(check_index(plane({"x0"}), 3), PreconditionViolated);
}

TEST_CASE("distributive constant") {
    // ratios 1/1, 2/2, 3/inf
    CHECK(distributive_constant(plane({"x0", "x1", "x2"})) == 1);
    // {1,2} gives 2/1
    CHECK(distributive_constant(plane({"x0", "2*x0"})) == 2);
    // triple meets in a point: 3/2
    CHECK(distributive_constant(plane({"x0", "x1", "x0 + x1"})) == Rational(3, 2));
    CHECK(distributive_constant(plane({"x0", "x0", "x0"})) == 3);
}

TEST_CASE("weighted factor") {
    auto wf = weighted_factor(plane({"x0", "x1", "x2"}));
    CHECK(wf.value == 1);
    wf = weighted_factor(plane({"x0", "x1", "x2"}, {2, 1, 1}));
    CHECK(wf.value == 2);
    CHECK(wf.witness.subset == Subset{0});
    CHECK(wf.witness.codim == Codim::finite(1));
    CHECK(wf.witness.alpha_value == 2);
    wf = weighted_factor(plane({"x0^2 + x1^2 - x2^2"}));
    CHECK(wf.value == 1);
    CHECK(wf.witness.codim == Codim::finite(1));
    CHECK_THROWS_AS(weighted_factor(plane({"x0", "x1"}, {0, 0})), AllWeightsZero);
}

TEST_CASE("support containment uses the radical") {
    // {x0^2 = 0} contains {x0 = 0} as a set
    const auto wf = weighted_factor(plane({"x0", "x0^2"}));
    CHECK(wf.value == 2);
    CHECK(wf.witness.alpha_value == 2);
    CHECK(distributive_constant(plane({"x0", "x0^2"})) == 2);
}

TEST_CASE("witness certificates") {
    for (const auto& f : fixtures::all()) {
        const auto cfg = f.configuration();
        const auto wf = weighted_factor(cfg);
        Rational listed = 0;
        for (auto i : wf.witness.subset) listed += cfg.weights()[i];
        CHECK(wf.witness.alpha_value >= listed);
        CHECK(wf.witness.ratio == wf.value);
        CHECK(wf.witness.ratio == wf.witness.alpha_value / wf.witness.codim.value());
    }
}

TEST_CASE("unit weights recover the distributive constant") {
    for (const auto& f : fixtures::all()) {
        CAPTURE(f.name);
        const auto cfg = f.configuration();
        CHECK(std::max(Rational(1), weighted_factor(cfg).value) == distributive_constant(cfg));
    }
}

TEST_CASE("weighted factor is homogeneous and monotone in the weights") {
    const std::vector<std::vector<Rational>> weight_sets{{1, 2, 3}, {Rational(1, 2), 0, 5}, {3, 1, 1}, {0, 0, 1}};
    for (const char* name : {"P2 coordinate lines", "P2 three concurrent lines", "P2 conic plus lines",
                             "P2 double line and its support"}) {
        const auto& f = *std::find_if(fixtures::all().begin(), fixtures::all().end(),
                                      [&](const fixtures::Fixture& x) { return x.name == name; });
        const auto base = f.configuration();
        for (const auto& w : weight_sets) {
            const auto cfg = base.with_weights(w);
            const auto wf = weighted_factor(cfg);
            for (const Rational t : {Rational(1, 3), Rational(2), Rational(7, 2)}) {
                std::vector<Rational> scaled = w;
                for (auto& c : scaled) c *= t;
                const auto ws = weighted_factor(base.with_weights(scaled));
                CHECK(ws.value == t * wf.value);
                CHECK(ws.witness.subset == wf.witness.subset);
            }
            for (std::size_t i = 0; i < w.size(); ++i) {
                std::vector<Rational> bumped = w;
                bumped[i] += Rational(1, 2);
                CHECK(weighted_factor(base.with_weights(bumped)).value >= wf.value);
            }
        }
    }
}

TEST_CASE("general position gives distributive constant one") {
    for (const char* name : {"P2 coordinate lines", "P2 four general lines", "P3 coordinate planes",
                             "P3 five general planes"}) {
        const auto& f = *std::find_if(fixtures::all().begin(), fixtures::all().end(),
                                      [&](const fixtures::Fixture& x) { return x.name == name; });
        const auto cfg = f.configuration();
        CHECK(check_index(cfg, cfg.dimension()).holds);
        CHECK(distributive_constant(cfg) == 1);
    }
}

TEST_CASE("Seshadri constant of a hypersurface") {
    CHECK(seshadri_hypersurface(1) == 1);
    CHECK(seshadri_hypersurface(2) == Rational(1, 2));
    CHECK(seshadri_hypersurface(5) == Rational(1, 5));
    CHECK_THROWS_AS(seshadri_hypersurface(0), PreconditionViolated);
}
