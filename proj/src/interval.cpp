#include "arcline/interval.hpp"

namespace arcline {

std::string to_string(const IntInterval& iv) {
    if (iv.empty()) return "empty";
    std::string s;
    s += finite(iv.lo) ? "[" + std::to_string(iv.lo) : "(-inf";
    s += ",";
    s += finite(iv.hi) ? std::to_string(iv.hi) + "]" : "+inf)";
    return s;
}

void IntervalSet::assign(std::vector<IntInterval> parts) {
    std::erase_if(parts, [](const IntInterval& p) { return p.empty(); });
    std::sort(parts.begin(), parts.end(),
              [](const IntInterval& a, const IntInterval& b) { return a.lo < b.lo; });
    parts_.clear();
    for (const auto& p : parts) {
        if (!parts_.empty() && p.lo <= sat_add(parts_.back().hi, 1))
            parts_.back().hi = std::max(parts_.back().hi, p.hi);
        else
            parts_.push_back(p);
    }
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
    std::vector<IntInterval> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return IntervalSet(std::move(parts));
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    std::vector<IntInterval> parts;
    for (const auto& x : a.parts())
        for (const auto& y : b.parts()) parts.push_back(intersect(x, y));
    return IntervalSet(std::move(parts));
}

IntervalSet difference(const IntervalSet& a, const IntervalSet& b) {
    std::vector<IntInterval> parts;
    for (const auto& x : a.parts()) {
        // carve b's parts out of x, walking left to right
        coord_t lo = x.lo;
        bool tail_covered = false;
        for (const auto& y : b.parts()) {
            if (y.hi < lo) continue;
            if (y.lo > x.hi) break;
            if (y.lo > lo) parts.push_back({lo, std::min(x.hi, sat_sub(y.lo, 1))});
            if (y.hi >= x.hi) {  // also catches the saturated +inf tail
                tail_covered = true;
                break;
            }
            lo = y.hi + 1;  // y.hi finite here
        }
        if (!tail_covered && lo <= x.hi) parts.push_back({lo, x.hi});
    }
    return IntervalSet(std::move(parts));
}

bool is_subset(const IntervalSet& a, const IntervalSet& b) { return difference(a, b).empty(); }

std::string to_string(const IntervalSet& s) {
    if (s.empty()) return "empty";
    std::string out;
    for (std::size_t i = 0; i < s.parts().size(); ++i) {
        if (i) out += " | ";
        out += to_string(s.parts()[i]);
    }
    return out;
}

}  // namespace arcline
