#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "arcline/classify.hpp"
#include "arcline/region.hpp"

namespace arcline {

/*
 * Windowed brute force, independent of the symbolic engine, plus the
 * differential driver that keeps the two honest against each other. The scan
 * kernels come in an OpenMP-parallel flavor and a serial reference; both are
 * deterministic and must agree bit for bit.
 */

// Smallest margin for which the truncation argument guarantees that
// brute_ort_window agrees with the symbolic ort on w.
coord_t guaranteed_margin(const ArcRegion& r, const Window& w);

// Arcs of w crossing nothing in r, decided by scanning r's arcs in the widened
// window [w.lo - margin, w.hi + margin]. Margins below the guaranteed bound are
// rejected unless allow_small_margin is set.
std::vector<Arc> brute_ort_window(const ArcRegion& r, const Window& w, coord_t margin,
                                  bool allow_small_margin = false);
std::vector<Arc> brute_ort_window_serial(const ArcRegion& r, const Window& w, coord_t margin,
                                         bool allow_small_margin = false);

// Condition (i) restricted to pairs inside w; companions still checked exactly.
ConditionIVerdict brute_condition_i_window(const ArcRegion& r, const Window& w);

struct FountainCensus {
    long long left_count;   // arcs (m,e) in r with m >= w.lo
    long long right_count;  // arcs (e,n) in r with n <= w.hi
};
FountainCensus fountain_census(const ArcRegion& r, coord_t e, const Window& w);

// Deterministic, seeded; about a third of the interval ends come out unbounded
// so that fountains and infinite regions show up constantly.
ArcRegion random_explicit_set(std::uint64_t seed, int max_arcs, coord_t coord_bound);
ArcRegion random_region(std::uint64_t seed, int max_parts, coord_t const_bound);

struct OracleConfig {
    Window window{-8, 8};
    coord_t margin = 0;  // raised to the guaranteed bound per generated region
    std::uint64_t seed = 1;
    long long cases = 100;
};

struct Counterexample {
    std::string suite;
    std::string region;  // minimized, printed in the DSL
    std::string detail;
};

struct AgreementSummary {
    long long ort_cases = 0, ort_failures = 0;
    long long condition_cases = 0, condition_failures = 0;
    long long fountain_cases = 0, fountain_failures = 0;
    std::vector<Counterexample> counterexamples;

    long long failures() const { return ort_failures + condition_failures + fountain_failures; }
    bool passed() const { return failures() == 0; }
};

// Test seam: swap in a (deliberately broken) engine to prove the driver catches it.
struct EngineHooks {
    std::function<ArcRegion(const ArcRegion&)> ort_fn;  // empty = the real ort
};

// Runs the three differential suites over `cases` generated inputs each.
// Cases run independently (OpenMP when available) and merge deterministically.
AgreementSummary agreement_report(const OracleConfig& cfg, const EngineHooks& hooks = {});

}  // namespace arcline
