#include "arcline/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "arcline/dsl.hpp"
#include "arcline/errors.hpp"
#include "arcline/ort.hpp"

namespace arcline {

coord_t guaranteed_margin(const ArcRegion& r, const Window& w) {
    coord_t c = max_abs_constant(normalize(r));
    coord_t reach = std::max({w.hi - w.lo, w.lo, -w.hi});
    return c + reach + 2;
}

namespace {

struct BruteInput {
    std::vector<Arc> candidates;  // arcs of the window itself
    std::vector<Arc> body;        // arcs of r inside the widened window
};

BruteInput brute_prepare(const ArcRegion& r, const Window& w, coord_t margin,
                         bool allow_small_margin) {
    if (margin < 0) throw precondition_error("margin must be nonnegative");
    if (!allow_small_margin && margin < guaranteed_margin(r, w))
        throw precondition_error(
            "margin " + std::to_string(margin) + " is below the guaranteed bound " +
            std::to_string(guaranteed_margin(r, w)) + "; pass allow_small_margin to experiment");
    return {enumerate_window(ArcRegion::all(), w),
            enumerate_window(normalize(r), Window(w.lo - margin, w.hi + margin))};
}

bool crossed_by_any(const Arc& d, const std::vector<Arc>& body) {
    for (const Arc& a : body)
        if (cross(a, d)) return true;
    return false;
}

std::vector<Arc> collect_kept(const std::vector<Arc>& cands, const std::vector<char>& keep) {
    std::vector<Arc> out;
    for (std::size_t i = 0; i < cands.size(); ++i)
        if (keep[i]) out.push_back(cands[i]);
    return out;
}

}  // namespace

std::vector<Arc> brute_ort_window_serial(const ArcRegion& r, const Window& w, coord_t margin,
                                         bool allow_small_margin) {
    BruteInput in = brute_prepare(r, w, margin, allow_small_margin);
    std::vector<char> keep(in.candidates.size(), 0);
    for (std::size_t i = 0; i < in.candidates.size(); ++i)
        keep[i] = !crossed_by_any(in.candidates[i], in.body);
    return collect_kept(in.candidates, keep);
}

std::vector<Arc> brute_ort_window(const ArcRegion& r, const Window& w, coord_t margin,
                                  bool allow_small_margin) {
    BruteInput in = brute_prepare(r, w, margin, allow_small_margin);
    std::vector<char> keep(in.candidates.size(), 0);
    const long long count = static_cast<long long>(in.candidates.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < count; ++i)
        keep[i] = !crossed_by_any(in.candidates[i], in.body);
    return collect_kept(in.candidates, keep);
}

ConditionIVerdict brute_condition_i_window(const ArcRegion& r, const Window& w) {
    std::vector<Arc> arcs = enumerate_window(r, w);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        for (std::size_t j = i + 1; j < arcs.size(); ++j) {
            const Arc &x = arcs[i], &y = arcs[j];
            if (!cross(x, y)) continue;
            const Arc& l = x.m < y.m ? x : y;
            const Arc& g = x.m < y.m ? y : x;
            const std::pair<coord_t, coord_t> comps[] = {
                {l.m, g.m}, {g.m, l.n}, {l.n, g.n}, {l.m, g.n}};
            for (auto [p, q] : comps) {
                if (q - p < 2) continue;
                if (!member(r, Arc(p, q))) return {false, true, std::pair{x, y}, Arc(p, q)};
            }
        }
    }
    return {true, true, std::nullopt, std::nullopt};
}

FountainCensus fountain_census(const ArcRegion& r, coord_t e, const Window& w) {
    std::vector<IntInterval> left, right;
    for (const auto& t : r.parts()) {
        if (t.ni.contains(e)) {
            coord_t lo = std::max({t.mi.lo, sat_sub(e, t.dhi), w.lo});
            coord_t hi = std::min({t.mi.hi, e - t.dlo});
            left.push_back({lo, hi});
        }
        if (t.mi.contains(e)) {
            coord_t lo = std::max(t.ni.lo, e + t.dlo);
            coord_t hi = std::min({t.ni.hi, sat_add(e, t.dhi), w.hi});
            right.push_back({lo, hi});
        }
    }
    auto size_of = [](const IntervalSet& s) {
        long long total = 0;
        for (const auto& p : s.parts()) total += p.hi - p.lo + 1;
        return total;
    };
    return {size_of(IntervalSet(std::move(left))), size_of(IntervalSet(std::move(right)))};
}

namespace {

coord_t bounded(std::mt19937_64& rng, coord_t lo, coord_t hi) {
    return lo + static_cast<coord_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool chance(std::mt19937_64& rng, int percent) { return static_cast<int>(rng() % 100) < percent; }

}  // namespace

ArcRegion random_explicit_set(std::uint64_t seed, int max_arcs, coord_t coord_bound) {
    std::mt19937_64 rng(seed);
    int count = max_arcs > 0 ? static_cast<int>(rng() % (max_arcs + 1)) : 0;
    std::set<Arc> arcs;
    for (int i = 0; i < count; ++i) {
        coord_t m = bounded(rng, -coord_bound, coord_bound - 2);
        coord_t n = bounded(rng, m + 2, coord_bound);
        arcs.insert(Arc(m, n));
    }
    return ArcRegion::of_arcs({arcs.begin(), arcs.end()});
}

ArcRegion random_region(std::uint64_t seed, int max_parts, coord_t const_bound) {
    std::mt19937_64 rng(seed);
    const coord_t B = const_bound;
    int count = max_parts > 0 ? static_cast<int>(rng() % (max_parts + 1)) : 0;
    std::vector<Trapezoid> parts;
    for (int i = 0; i < count; ++i) {
        auto interval = [&]() {
            coord_t lo = chance(rng, 30) ? kNegInf : bounded(rng, -B, B);
            coord_t hi = chance(rng, 30) ? kPosInf : bounded(rng, -B, B);
            if (finite(lo) && finite(hi) && lo > hi) std::swap(lo, hi);
            return IntInterval(lo, hi);
        };
        IntInterval mi = interval();
        IntInterval ni = interval();
        coord_t dlo = 2;
        if (B > 2 && chance(rng, 40)) dlo = bounded(rng, 2, B);
        coord_t dhi = kPosInf;
        if (chance(rng, 40)) dhi = bounded(rng, dlo, std::max(dlo, B));
        parts.emplace_back(mi, ni, dlo, dhi);
    }
    return ArcRegion(std::move(parts));  // infeasible parts vanish here
}

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t salt) {
    std::uint64_t x = a ^ (b * 0x9E3779B97F4A7C15ULL) ^ (salt << 32);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

ArcRegion drop_part(const ArcRegion& r, std::size_t idx) {
    std::vector<Trapezoid> parts;
    for (std::size_t i = 0; i < r.parts().size(); ++i)
        if (i != idx) parts.push_back(r.parts()[i]);
    return ArcRegion(std::move(parts));
}

// greedy part removal; keeps only candidates that still fail the predicate
template <class Pred>
ArcRegion minimize_region(ArcRegion r, Pred&& still_fails) {
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t i = 0; i < r.parts().size(); ++i) {
            ArcRegion cand = drop_part(r, i);
            if (still_fails(cand)) {
                r = cand;
                improved = true;
                break;
            }
        }
    }
    return r;
}

struct CaseOutcome {
    int ort_fail = 0, cond_fail = 0, fount_fail = 0;
    std::vector<Counterexample> ces;
};

std::string first_diff(const std::vector<Arc>& sym, const std::vector<Arc>& brute) {
    std::set<Arc> s(sym.begin(), sym.end()), b(brute.begin(), brute.end());
    for (const Arc& a : s)
        if (!b.count(a)) return "arc " + to_string(a) + ": symbolic keeps it, brute force does not";
    for (const Arc& a : b)
        if (!s.count(a)) return "arc " + to_string(a) + ": brute force keeps it, symbolic does not";
    return "no difference";
}

CaseOutcome run_case(const OracleConfig& cfg, const std::function<ArcRegion(const ArcRegion&)>& ort_fn,
                     long long idx) {
    CaseOutcome out;
    const Window& w = cfg.window;

    // symbolic ort vs windowed brute force
    {
        ArcRegion r = random_region(mix(cfg.seed, idx, 1), 4, 6);
        auto disagrees = [&](const ArcRegion& cand) {
            coord_t margin = std::max(cfg.margin, guaranteed_margin(cand, w));
            return enumerate_window(ort_fn(cand), w) != brute_ort_window_serial(cand, w, margin);
        };
        if (disagrees(r)) {
            out.ort_fail = 1;
            ArcRegion small = minimize_region(r, disagrees);
            coord_t margin = std::max(cfg.margin, guaranteed_margin(small, w));
            out.ces.push_back({"ort", print_region(small),
                               first_diff(enumerate_window(ort_fn(small), w),
                                          brute_ort_window_serial(small, w, margin))});
        }
    }

    // conditions (i)+(ii) vs closure fixed point, on finite explicit sets
    {
        ArcRegion a = random_explicit_set(mix(cfg.seed, idx, 2), 10, 8);
        auto disagrees = [&](const ArcRegion& cand) {
            bool conditions = check_condition_i(cand, CheckMode::Exact).holds &&
                              check_condition_ii(cand).holds;
            bool closed = equals(ort_fn(ort_fn(cand)), cand);
            return conditions != closed;
        };
        if (disagrees(a)) {
            out.cond_fail = 1;
            ArcRegion small = minimize_region(a, disagrees);
            out.ces.push_back({"condition", print_region(small),
                               "condition checks and closure fixed point disagree"});
        }
    }

    // fountain profile vs census growth between two nested windows
    {
        ArcRegion r = random_region(mix(cfg.seed, idx, 3), 4, 6);
        auto disagrees = [&](const ArcRegion& cand) {
            FountainProfile fp = fountains(cand);
            coord_t c = max_abs_constant(normalize(cand));
            for (coord_t e = -c - 2; e <= c + 2; ++e) {
                coord_t w1 = c + (e < 0 ? -e : e) + 4;
                coord_t w2 = 2 * w1 + 8;
                FountainCensus n1 = fountain_census(cand, e, Window(-w1, w1));
                FountainCensus n2 = fountain_census(cand, e, Window(-w2, w2));
                if (fp.left.contains(e) != (n2.left_count > n1.left_count)) return true;
                if (fp.right.contains(e) != (n2.right_count > n1.right_count)) return true;
            }
            return false;
        };
        if (disagrees(r)) {
            out.fount_fail = 1;
            ArcRegion small = minimize_region(r, disagrees);
            out.ces.push_back(
                {"fountain", print_region(small), "fountain profile and census growth disagree"});
        }
    }
    return out;
}

}  // namespace

AgreementSummary agreement_report(const OracleConfig& cfg, const EngineHooks& hooks) {
    std::function<ArcRegion(const ArcRegion&)> ort_fn =
        hooks.ort_fn ? hooks.ort_fn : [](const ArcRegion& r) { return ort(r); };

    std::vector<CaseOutcome> outcomes(static_cast<std::size_t>(std::max<long long>(cfg.cases, 0)));
    const long long cases = static_cast<long long>(outcomes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < cases; ++i) outcomes[i] = run_case(cfg, ort_fn, i);

    AgreementSummary sum;
    constexpr std::size_t kMaxCes = 6;
    for (const auto& oc : outcomes) {
        sum.ort_cases++;
        sum.condition_cases++;
        sum.fountain_cases++;
        sum.ort_failures += oc.ort_fail;
        sum.condition_failures += oc.cond_fail;
        sum.fountain_failures += oc.fount_fail;
        for (const auto& ce : oc.ces)
            if (sum.counterexamples.size() < kMaxCes) sum.counterexamples.push_back(ce);
    }
    return sum;
}

}  // namespace arcline
