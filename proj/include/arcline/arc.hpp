#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace arcline {

using coord_t = long long;

// An arc joins two integers that are at least two apart. (m,n) doubles as the
// coordinate of an indecomposable object; crossing = nonsplit extensions both ways.
struct Arc {
    coord_t m;
    coord_t n;

    Arc(coord_t m_, coord_t n_) : m(m_), n(n_) {
        if (n - m < 2)
            throw std::invalid_argument("not an arc: (" + std::to_string(m_) + "," +
                                        std::to_string(n_) + "); need n - m >= 2");
    }

    friend bool operator==(const Arc&, const Arc&) = default;
    friend std::strong_ordering operator<=>(const Arc&, const Arc&) = default;
};

std::string to_string(const Arc& a);

// One endpoint strictly inside the other arc, one strictly outside.
inline bool cross(const Arc& a, const Arc& b) {
    return (a.m < b.m && b.m < a.n && a.n < b.n) || (b.m < a.m && a.m < b.n && b.n < a.n);
}

// k = 1 is the suspension; shifting moves arcs one step to the left.
inline Arc shift_arc(const Arc& a, coord_t k) { return Arc(a.m - k, a.n - k); }

inline Arc mirror_arc(const Arc& a) { return Arc(-a.n, -a.m); }

// Hom(x,y) != 0 iff y crosses the suspension of x; dimensions are 0 or 1.
inline bool hom_nonzero(const Arc& x, const Arc& y) { return cross(shift_arc(x, 1), y); }

struct Window {
    coord_t lo;
    coord_t hi;
    Window(coord_t lo_, coord_t hi_) : lo(lo_), hi(hi_) {
        if (lo > hi) throw std::invalid_argument("window needs lo <= hi");
    }
};

}  // namespace arcline
