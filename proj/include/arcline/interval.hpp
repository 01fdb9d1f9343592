#pragma once

#include <algorithm>
#include <cassert>
#include <string>
#include <vector>

#include "arcline/arc.hpp"

namespace arcline {

// Integer intervals with two-sided infinities. The sentinels are absorbing for the
// saturating arithmetic below; every finite bound the engine ever produces stays far
// inside them, so ordering against sentinels is always meaningful.
inline constexpr coord_t kNegInf = -(1LL << 62);
inline constexpr coord_t kPosInf = (1LL << 62);

inline bool finite(coord_t v) { return v > kNegInf && v < kPosInf; }

inline coord_t sat_add(coord_t a, coord_t b) {
    if (a <= kNegInf || b <= kNegInf) {
        assert(a < kPosInf && b < kPosInf && "adding opposite infinities");
        return kNegInf;
    }
    if (a >= kPosInf || b >= kPosInf) return kPosInf;
    if (a > 0 && b > kPosInf - a) return kPosInf;
    if (a < 0 && b < kNegInf - a) return kNegInf;
    return a + b;
}

inline coord_t sat_neg(coord_t v) {
    if (v <= kNegInf) return kPosInf;
    if (v >= kPosInf) return kNegInf;
    return -v;
}

inline coord_t sat_sub(coord_t a, coord_t b) { return sat_add(a, sat_neg(b)); }

struct IntInterval {
    coord_t lo = 1;
    coord_t hi = 0;  // default: empty

    IntInterval() = default;
    IntInterval(coord_t lo_, coord_t hi_) : lo(lo_), hi(hi_) {}

    static IntInterval all() { return {kNegInf, kPosInf}; }
    static IntInterval at(coord_t v) { return {v, v}; }
    static IntInterval at_most(coord_t v) { return {kNegInf, v}; }
    static IntInterval at_least(coord_t v) { return {v, kPosInf}; }

    bool empty() const { return lo > hi; }
    bool contains(coord_t v) const { return lo <= v && v <= hi; }
    bool is_all() const { return lo <= kNegInf && hi >= kPosInf; }

    IntInterval shifted(coord_t k) const {
        if (empty()) return {};
        return {sat_add(lo, k), sat_add(hi, k)};
    }
    IntInterval negated() const {  // {-v : v in this}
        if (empty()) return {};
        return {sat_neg(hi), sat_neg(lo)};
    }

    friend bool operator==(const IntInterval&, const IntInterval&) = default;
};

inline IntInterval intersect(const IntInterval& a, const IntInterval& b) {
    return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

std::string to_string(const IntInterval& iv);  // range syntax: "[0,3]", "(-inf,0]", ...

// Finite union of integer intervals, kept sorted, disjoint and non-adjacent; that form
// is canonical, so equality is just vector equality.
class IntervalSet {
  public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<IntInterval> parts) { assign(std::move(parts)); }
    static IntervalSet all() { return IntervalSet({IntInterval::all()}); }

    const std::vector<IntInterval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    bool contains(coord_t v) const {
        for (const auto& p : parts_)
            if (p.contains(v)) return true;
        return false;
    }

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

  private:
    void assign(std::vector<IntInterval> parts);
    std::vector<IntInterval> parts_;
};

IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet difference(const IntervalSet& a, const IntervalSet& b);
bool is_subset(const IntervalSet& a, const IntervalSet& b);
std::string to_string(const IntervalSet& s);  // parts joined with " | ", or "empty"

}  // namespace arcline
