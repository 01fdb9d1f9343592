#include <doctest.h>

#include "arcline/oracle.hpp"
#include "arcline/ort.hpp"
#include "arcline/region.hpp"

using namespace arcline;

// The OpenMP kernel must agree bit for bit with the serial reference,
// regardless of thread count.

TEST_CASE("parallel and serial brute ort agree") {
    Window w(-14, 14);
    for (std::uint64_t seed = 300; seed < 324; ++seed) {
        ArcRegion r = random_region(seed, 6, 9);
        coord_t margin = guaranteed_margin(r, w);
        CHECK(brute_ort_window(r, w, margin) == brute_ort_window_serial(r, w, margin));
    }
    // small-margin experiments stay deterministic too
    ArcRegion r = lower_region(0);
    CHECK(brute_ort_window(r, w, 3, true) == brute_ort_window_serial(r, w, 3, true));
}

TEST_CASE("agreement report merges deterministically") {
    OracleConfig cfg;
    cfg.cases = 30;
    cfg.seed = 5;
    AgreementSummary a = agreement_report(cfg);
    AgreementSummary b = agreement_report(cfg);
    CHECK(a.ort_cases == b.ort_cases);
    CHECK(a.failures() == b.failures());
    CHECK(a.counterexamples.size() == b.counterexamples.size());

    EngineHooks broken;
    broken.ort_fn = [](const ArcRegion& r) { return difference(ort(r), ArcRegion::of_arcs({Arc(0, 2)})); };
    AgreementSummary c = agreement_report(cfg, broken);
    AgreementSummary d = agreement_report(cfg, broken);
    REQUIRE(c.counterexamples.size() == d.counterexamples.size());
    CHECK(c.failures() == d.failures());
    for (std::size_t i = 0; i < c.counterexamples.size(); ++i) {
        CHECK(c.counterexamples[i].suite == d.counterexamples[i].suite);
        CHECK(c.counterexamples[i].region == d.counterexamples[i].region);
        CHECK(c.counterexamples[i].detail == d.counterexamples[i].detail);
    }
}
