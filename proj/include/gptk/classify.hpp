#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gptk/triangular.hpp"

namespace gptk {

/// The Jordan blocks J_s, 1 <= s <= min(t, maxdim): exactly the
/// indecomposable modules over F_p[x]/(x^t).
std::vector<Module> indecomposables_uniserial(uint32_t p, std::size_t t,
                                              std::size_t maxdim);

enum class GPStrategy { SelfInjective, FiniteGlobalDimension, UserSupplied };

/// Certified base list of indecomposable Gorenstein projective modules.
/// Self-injective strategy needs the full indecomposable list: supplied, or
/// derived when the algebra is a truncated polynomial algebra. Throws when
/// the strategy does not apply.
std::vector<Module> gp_base_list(const AlgebraPtr& a, std::size_t maxdim,
                                 GPStrategy strategy,
                                 const std::vector<Module>& supplied = {});

struct CensusConfig {
    uint64_t seed = 0xC0FFEEull;
    std::size_t cocycle_cap = 256;     // sweep all classes up to this count
    std::size_t random_cocycles = 32;  // fallback combinations beyond the cap
    std::size_t oracle_bound = 8;
};

struct GPCensusEntry {
    TripleModule triple;
    Module flat;
    GPTripleVerdict verdict;
};

struct GPCensus {
    TriangularPtr gamma;
    std::size_t bound = 0;
    std::vector<GPCensusEntry> reps; // pairwise non-isomorphic, ProvenGP
    bool complete = true;            // exhaustive below the bound
    std::string strategy;            // "exhaustive" or "generator-strategy"
};

/// Sweep X over direct sums from r_list and C over direct sums from s_list
/// with dim X + dim(M (x) X) + dim C <= bound; for each pair sweep the
/// Ext^1_S(C, M (x) X) classes, build the extension triple, decompose,
/// dedupe by isomorphism, and certify the survivors.
GPCensus enumerate_gp_gamma(const TriangularPtr& g,
                            const std::vector<Module>& r_list,
                            const std::vector<Module>& s_list,
                            std::size_t bound, const ConditionReport& c1,
                            const ConditionReport& c2,
                            const CensusConfig& cfg = {});

std::size_t cm_count(const GPCensus& census);

/// True below the census bound iff every representative is projective.
bool is_cm_free(const GPCensus& census);

/// Independent tiny-scale oracle for T_2 of a truncated polynomial algebra:
/// enumerates all action matrices (X, Y nilpotent of the right order, phi
/// arbitrary S-linear), filters by the triple criterion, decomposes and
/// dedupes. Exponential; only for small bounds.
std::vector<Module> raw_census_t2_truncated(const TriangularPtr& g,
                                            std::size_t t, std::size_t bound);

/// Matching report: every census representative is isomorphic to
/// e1_lambda of an indecomposable projective over R or to (0, C)_0 for an
/// indecomposable Gorenstein projective C over S (requires R CM-free).
struct MatchReport {
    bool ok = true;
    std::vector<std::string> matching; // one line per representative
};
MatchReport verify_census_matching(const GPCensus& census,
                                   const std::vector<Module>& s_list);

} // namespace gptk
