#include "arcline/ort.hpp"

namespace arcline {

namespace {

// Eliminating the witness (m,n) in T from "m < a < n < b" and "a < m < b < n"
// leaves a box in (a,b) for either case (inside the arc universe b - a >= 2):
//
//   one endpoint of d inside from the right:  a in [max(A+1, C-e+1), min(D-1, B+e-1)],
//                                             b >= max(C+1, A+d+1)
//   one endpoint of d inside from the left:   a <= min(B-1, D-d-1),
//                                             b in [max(A+1, C-e+1), min(D-1, B+e-1)]
//
// with mi=[A,B], ni=[C,D], band [d,e]. The mixed comparisons all collapse to
// feasibility facts about T or to b - a >= 2, which is why no genuine diagonal
// constraint survives. Validated wholesale against the brute-force oracle.
void crossers_of(const Trapezoid& t, std::vector<Trapezoid>& out) {
    coord_t A = t.mi.lo, B = t.mi.hi, C = t.ni.lo, D = t.ni.hi;
    coord_t d = t.dlo, e = t.dhi;

    coord_t inner_lo = std::max(sat_add(A, 1), sat_add(sat_sub(C, e), 1));
    coord_t inner_hi = std::min(sat_sub(D, 1), sat_sub(sat_add(B, e), 1));

    IntInterval inner(inner_lo, inner_hi);
    IntInterval b_lo(std::max(sat_add(C, 1), sat_add(sat_add(A, d), 1)), kPosInf);
    IntInterval a_hi(kNegInf, std::min(sat_sub(B, 1), sat_sub(sat_sub(D, d), 1)));

    if (!inner.empty() && !b_lo.empty()) out.emplace_back(inner, b_lo);
    if (!a_hi.empty() && !inner.empty()) out.emplace_back(a_hi, inner);
}

}  // namespace

ArcRegion cross_set(const ArcRegion& r) {
    std::vector<Trapezoid> out;
    for (const auto& t : r.parts()) crossers_of(t, out);
    return ArcRegion(std::move(out));
}

ArcRegion ort(const ArcRegion& r) { return complement(cross_set(r)); }

ArcRegion closure(const ArcRegion& r) { return ort(ort(r)); }

FountainProfile fountains(const ArcRegion& r) {
    std::vector<IntInterval> left, right;
    for (const auto& t : r.parts()) {
        if (t.dhi < kPosInf) continue;  // bounded span, no endpoint repeats forever
        if (t.mi.lo <= kNegInf) left.push_back(t.ni);
        if (t.ni.hi >= kPosInf) right.push_back(t.mi);
    }
    return {IntervalSet(std::move(left)), IntervalSet(std::move(right))};
}

bool is_locally_finite(const ArcRegion& r) { return fountains(r).locally_finite(); }

}  // namespace arcline
