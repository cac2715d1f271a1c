#pragma once

#include <string>
#include <vector>

#include "gptk/classify.hpp"

namespace gptk {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail; // counts, counterexample description, timings
};

/// The exhaustive small family over T_2 of the dual numbers: all triples
/// with dim X <= 2, dim Y <= 2, X and Y swept over all action-matrix
/// solutions and phi over all S-linear maps.
struct TripleFamily {
    TriangularPtr gamma;
    std::vector<Module> xs; // all small R-modules (including 0)
    std::vector<Module> ys;
    std::vector<TripleModule> triples;
};
TripleFamily small_t2_family();

SuiteResult suite_projectivity();        // projectivity criterion, exhaustive
SuiteResult suite_gp_criterion();      // GP criterion vs oracle, exhaustive
SuiteResult suite_census_counts();  // T2 corollary counts (2 and 5)
SuiteResult suite_self_injective_base();
SuiteResult suite_infinite_cm_growth(); // T2(Lambda_6) strictly increasing
SuiteResult suite_duality();            // GI = dualized GP on the family
SuiteResult suite_adjunction(uint64_t seed = 0xC0FFEEull);
SuiteResult suite_two_route_ext(uint64_t seed = 0xC0FFEEull);
SuiteResult suite_window();         // totally acyclic window decomposition
SuiteResult suite_perpendicular();  // direct == componentwise membership

std::vector<std::string> suite_names();

/// Runs the named suite; throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, uint64_t seed = 0xC0FFEEull);

} // namespace gptk
