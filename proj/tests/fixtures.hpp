// Shared test configurations in P^2 and P^3.
#ifndef DIOPH_TESTS_FIXTURES_HPP
#define DIOPH_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "dioph/position.hpp"

namespace fixtures {

struct Fixture {
    std::string name;
    std::size_t num_vars;
    std::vector<std::string> variety;
    std::vector<std::string> hypersurfaces;

    dioph::WeightedConfiguration configuration() const {
        std::vector<dioph::HomPoly> v, h;
        for (const auto& s : variety) v.push_back(dioph::parse_hom_poly(s, num_vars));
        for (const auto& s : hypersurfaces) h.push_back(dioph::parse_hom_poly(s, num_vars));
        return dioph::WeightedConfiguration(dioph::Ideal(num_vars, v), h);
    }
};

inline const std::vector<Fixture>& all() {
    static const std::vector<Fixture> list{
        {"P2 coordinate lines", 3, {}, {"x0", "x1", "x2"}},
        {"P2 duplicated line", 3, {}, {"x0", "2*x0", "x1"}},
        {"P2 three concurrent lines", 3, {}, {"x0", "x1", "x0 + x1"}},
        {"P2 four general lines", 3, {}, {"x0", "x1", "x2", "x0 + x1 + x2"}},
        {"P2 conic plus lines", 3, {}, {"x0*x2 - x1^2", "x0", "x2"}},
        {"P2 conic plus tangent line", 3, {}, {"x0*x2 - x1^2", "x0"}},
        {"P2 triple line", 3, {}, {"x0", "x0", "-x0"}},
        {"P2 double line and its support", 3, {}, {"x0^2", "x0", "x1"}},
        {"P2 four concurrent lines", 3, {}, {"x0", "x1", "x0 + x1", "x0 - x1"}},
        {"P2 two conics", 3, {}, {"x0^2 + x1^2 - x2^2", "x0*x1", "x2"}},
        {"P2 single line", 3, {}, {"x0"}},
        {"P3 coordinate planes", 4, {}, {"x0", "x1", "x2", "x3"}},
        {"P3 planes through a line", 4, {}, {"x0", "x1", "x0 + x1"}},
        {"P3 repeated plane", 4, {}, {"x0", "3*x0", "x1", "x2"}},
        {"P3 quadric plus planes", 4, {}, {"x0*x3 - x1*x2", "x0", "x3"}},
        {"P3 five general planes", 4, {}, {"x0", "x1", "x2", "x3", "x0 + x1 + x2 + x3"}},
        {"P3 planes through a point", 4, {}, {"x0", "x1", "x2", "x0 + x1 + x2"}},
        {"P3 plane pair and planes", 4, {}, {"x0*x1", "x2", "x3"}},
        {"P3 reducible conic cone", 4, {}, {"x0^2 + x1^2", "x2", "x0"}},
        {"conic V with coordinate lines", 3, {"x0*x2 - x1^2"}, {"x0", "x1", "x2"}},
        {"quadric surface V with planes", 4, {"x0*x3 - x1*x2"}, {"x0", "x1", "x2"}},
        {"line V in P2 with three points", 3, {"x2"}, {"x0", "x1", "x0 + x1"}},
        {"P2 cubic and lines", 3, {}, {"x0^3 + x1^3 + x2^3", "x0", "x1", "x0 + x1"}},
    };
    return list;
}

}  // namespace fixtures

#endif
