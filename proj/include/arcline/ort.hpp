#pragma once

#include "arcline/interval.hpp"
#include "arcline/region.hpp"

namespace arcline {

// Arcs that cross at least one member of r. Exact, by quantifier elimination
// one trapezoid at a time; each trapezoid contributes at most two parts.
ArcRegion cross_set(const ArcRegion& r);

// ort(r): arcs crossing nothing in r. ort is antitone, ort^3 = ort, and
// ort(ort(.)) is a closure operator whose fixed points are the ort-closed sets.
ArcRegion ort(const ArcRegion& r);
ArcRegion closure(const ArcRegion& r);

// e is a left fountain when infinitely many arcs (m,e) lie in r; right dually.
struct FountainProfile {
    IntervalSet left;
    IntervalSet right;

    IntervalSet fountains() const { return intersect(left, right); }
    bool locally_finite() const { return left.empty() && right.empty(); }
};

FountainProfile fountains(const ArcRegion& r);
bool is_locally_finite(const ArcRegion& r);

}  // namespace arcline
