#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arcline/arc.hpp"
#include "arcline/interval.hpp"

namespace arcline {

/*
 * Region algebra on sets of arcs.
 *
 * The closed representation is a finite union of trapezoids
 *
 *     T = { (m,n) : m in mi, n in ni, dlo <= n - m <= dhi },   dlo >= 2,
 *
 * i.e. a box intersected with a diagonal band, always inside the arc universe
 * n - m >= 2. This class of sets is closed under union (trivially), complement
 * and intersection (via the strip sweep in normalize/complement), the crossing
 * operator, shift and mirror — everything the ort machinery needs. Unions need
 * not be disjoint or unique; equality is decided by emptiness of the symmetric
 * difference, and normalize() produces a canonical-enough disjoint form used
 * for printing and for extracting constants.
 */
struct Trapezoid {
    IntInterval mi;
    IntInterval ni;
    coord_t dlo = 2;
    coord_t dhi = kPosInf;

    Trapezoid(IntInterval mi_, IntInterval ni_, coord_t dlo_ = 2, coord_t dhi_ = kPosInf);

    // effective left-endpoint range once ni and the band are folded in
    IntInterval m_range() const;
    bool feasible() const { return !m_range().empty(); }
    bool contains(const Arc& a) const;

    friend bool operator==(const Trapezoid&, const Trapezoid&) = default;
};

class ArcRegion {
  public:
    ArcRegion() = default;  // empty region
    explicit ArcRegion(std::vector<Trapezoid> parts);  // infeasible parts dropped eagerly

    static ArcRegion empty() { return {}; }
    static ArcRegion all();
    static ArcRegion single(const Trapezoid& t) { return ArcRegion(std::vector<Trapezoid>{t}); }
    static ArcRegion of_arcs(const std::vector<Arc>& arcs);

    const std::vector<Trapezoid>& parts() const { return parts_; }

  private:
    std::vector<Trapezoid> parts_;
};

bool member(const ArcRegion& r, const Arc& a);

ArcRegion union_of(const ArcRegion& r, const ArcRegion& s);
ArcRegion intersect(const ArcRegion& r, const ArcRegion& s);
ArcRegion complement(const ArcRegion& r);
ArcRegion difference(const ArcRegion& r, const ArcRegion& s);

bool is_empty(const ArcRegion& r);
bool is_subset(const ArcRegion& r, const ArcRegion& s);
bool equals(const ArcRegion& r, const ArcRegion& s);

ArcRegion shift_region(const ArcRegion& r, coord_t k);
ArcRegion mirror_region(const ArcRegion& r);

// Disjoint vertical-strip form: parts sorted by strip, strips sorted left to right.
ArcRegion normalize(const ArcRegion& r);

// Arcs (m,n) with w.lo <= m and n <= w.hi, sorted lexicographically.
std::vector<Arc> enumerate_window(const ArcRegion& r, const Window& w);

bool is_finite(const ArcRegion& r);
// All arcs of a finite region, sorted; throws precondition_error beyond cap or if infinite.
std::vector<Arc> enumerate_all(const ArcRegion& r, std::size_t cap = 1000000);

std::optional<Arc> sample_arc(const ArcRegion& r);

// Largest |c| over the finite interval bounds and band bounds of r's parts (at least 2).
coord_t max_abs_constant(const ArcRegion& r);

// Half planes and hammocks.
ArcRegion lower_region(coord_t b);  // arcs with n <= b
ArcRegion upper_region(coord_t a);  // arcs with m >= a

// {y : Hom(x,y) != 0} and {a : Hom(a,x) != 0} as regions.
ArcRegion hammock_from(const Arc& x);
ArcRegion hammock_to(const Arc& x);

// Greatest p <= pmax with (p, c) in r, if any. Used by the precover construction.
std::optional<coord_t> max_left_endpoint(const ArcRegion& r, coord_t c, coord_t pmax);

}  // namespace arcline
