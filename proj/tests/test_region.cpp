#include <doctest.h>

#include "arcline/errors.hpp"
#include "arcline/region.hpp"

using namespace arcline;

namespace {
ArcRegion pair_region() { return ArcRegion::of_arcs({Arc(0, 2), Arc(1, 3)}); }
}  // namespace

TEST_CASE("trapezoid construction and membership") {
    CHECK_THROWS_AS(Trapezoid(IntInterval::all(), IntInterval::all(), 1, kPosInf),
                    std::invalid_argument);
    CHECK_THROWS_AS(Trapezoid(IntInterval::all(), IntInterval::all(), 5, 3),
                    std::invalid_argument);

    Trapezoid t(IntInterval(0, 4), IntInterval(3, 9), 3, 5);
    CHECK(t.contains(Arc(0, 3)));
    CHECK(t.contains(Arc(4, 9)));
    CHECK_FALSE(t.contains(Arc(0, 2)));   // below the band
    CHECK_FALSE(t.contains(Arc(0, 9)));   // above the band
    CHECK_FALSE(t.contains(Arc(-1, 3)));  // m outside

    // infeasible boxes are dropped by the region constructor
    CHECK(is_empty(ArcRegion::single(Trapezoid(IntInterval::at(5), IntInterval::at(5)))));
}

TEST_CASE("membership in unions and complements") {
    ArcRegion r = pair_region();
    CHECK(member(r, Arc(0, 2)));
    CHECK(member(r, Arc(1, 3)));
    CHECK_FALSE(member(r, Arc(0, 3)));
    CHECK_FALSE(member(complement(r), Arc(0, 2)));
    CHECK(member(complement(r), Arc(0, 3)));
    CHECK(member(ArcRegion::all(), Arc(-1000000, 1000000)));
    CHECK_FALSE(member(ArcRegion::empty(), Arc(0, 2)));
}

TEST_CASE("boolean algebra on regions") {
    ArcRegion lo = lower_region(3), up = upper_region(0);
    CHECK(equals(union_of(lo, up), union_of(up, lo)));
    CHECK(is_subset(intersect(lo, up), lo));
    CHECK(is_subset(intersect(lo, up), up));

    // lower(3) meet upper(0) is exactly three arcs
    std::vector<Arc> meet = enumerate_all(intersect(lo, up));
    CHECK(meet == std::vector<Arc>{Arc(0, 2), Arc(0, 3), Arc(1, 3)});

    CHECK(equals(complement(complement(lo)), lo));
    CHECK(equals(complement(ArcRegion::empty()), ArcRegion::all()));
    CHECK(is_empty(difference(lo, lo)));
    CHECK(is_empty(intersect(lo, complement(lo))));
    CHECK(equals(union_of(lo, complement(lo)), ArcRegion::all()));

    ArcRegion diff = difference(ArcRegion::all(), pair_region());
    CHECK_FALSE(member(diff, Arc(0, 2)));
    CHECK(member(diff, Arc(5, 8)));
}

TEST_CASE("normalize fuses and absorbs") {
    CHECK(normalize(lower_region(3)).parts().size() == 1);
    CHECK(normalize(ArcRegion::all()).parts().size() == 1);
    CHECK(normalize(ArcRegion::empty()).parts().empty());

    // a part swallowed by another disappears
    ArcRegion covered = union_of(lower_region(0), ArcRegion::of_arcs({Arc(-5, -3)}));
    CHECK(normalize(covered).parts().size() == 1);
    CHECK(equals(covered, lower_region(0)));

    // normalization never changes the set
    ArcRegion messy = union_of(union_of(lower_region(1), pair_region()),
                               ArcRegion::single(Trapezoid(IntInterval(-3, 4), IntInterval(0, 9), 2, 4)));
    CHECK(equals(normalize(messy), messy));
}

TEST_CASE("shift and mirror of regions") {
    CHECK(equals(shift_region(lower_region(0), 1), lower_region(-1)));
    CHECK(equals(shift_region(shift_region(pair_region(), 4), -4), pair_region()));
    CHECK(member(shift_region(pair_region(), 1), Arc(-1, 1)));
    CHECK(equals(mirror_region(lower_region(0)), upper_region(0)));
    CHECK(equals(mirror_region(mirror_region(lower_region(7))), lower_region(7)));
    CHECK(member(mirror_region(pair_region()), Arc(-3, -1)));
}

TEST_CASE("window enumeration") {
    std::vector<Arc> six = enumerate_window(lower_region(0), Window(-4, 4));
    CHECK(six == std::vector<Arc>{Arc(-4, -2), Arc(-4, -1), Arc(-4, 0), Arc(-3, -1), Arc(-3, 0),
                                  Arc(-2, 0)});
    CHECK(enumerate_window(ArcRegion::of_arcs({Arc(0, 2), Arc(8, 11)}), Window(-4, 4)) ==
          std::vector<Arc>{Arc(0, 2)});
    CHECK(enumerate_window(ArcRegion::empty(), Window(-8, 8)).empty());
    // overlap dedupes
    CHECK(enumerate_window(union_of(pair_region(), pair_region()), Window(-4, 4)).size() == 2);
}

TEST_CASE("finiteness and full enumeration") {
    CHECK(is_finite(pair_region()));
    CHECK_FALSE(is_finite(lower_region(0)));
    CHECK(is_finite(ArcRegion::single(Trapezoid(IntInterval(0, 9), IntInterval(2, 11)))));
    // bounded band makes an unbounded n-interval finite anyway
    CHECK(is_finite(ArcRegion::single(Trapezoid(IntInterval(0, 4), IntInterval::at_least(2), 2, 6))));

    CHECK(enumerate_all(ArcRegion::single(Trapezoid(IntInterval(0, 9), IntInterval(2, 11)))).size() ==
          55);
    CHECK_THROWS_AS(enumerate_all(lower_region(0)), precondition_error);
    CHECK_THROWS_AS(
        enumerate_all(ArcRegion::single(Trapezoid(IntInterval(0, 99), IntInterval(2, 200))), 100),
        precondition_error);
}

TEST_CASE("sampling and constants") {
    CHECK_FALSE(sample_arc(ArcRegion::empty()).has_value());
    auto a = sample_arc(lower_region(0));
    REQUIRE(a.has_value());
    CHECK(member(lower_region(0), *a));
    CHECK(max_abs_constant(lower_region(3)) == 3);
    CHECK(max_abs_constant(ArcRegion::empty()) == 2);
    CHECK(max_abs_constant(ArcRegion::of_arcs({Arc(-9, 2)})) == 9);
}

TEST_CASE("hammocks agree with hom on a window") {
    for (coord_t xm = -3; xm <= 1; ++xm) {
        for (coord_t xn = xm + 2; xn <= 4; ++xn) {
            Arc x(xm, xn);
            ArcRegion from = hammock_from(x), to = hammock_to(x);
            for (coord_t ym = -6; ym <= 4; ++ym) {
                for (coord_t yn = ym + 2; yn <= 6; ++yn) {
                    Arc y(ym, yn);
                    CHECK(member(from, y) == hom_nonzero(x, y));
                    CHECK(member(to, y) == hom_nonzero(y, x));
                }
            }
        }
    }
}

TEST_CASE("longest backward line endpoint") {
    auto p = max_left_endpoint(lower_region(3), 2, 0);
    REQUIRE(p.has_value());
    CHECK(*p == 0);
    CHECK_FALSE(max_left_endpoint(lower_region(3), 5, 0).has_value());
    // the cap binds
    auto q = max_left_endpoint(ArcRegion::of_arcs({Arc(-5, 2), Arc(-1, 2)}), 2, -2);
    REQUIRE(q.has_value());
    CHECK(*q == -5);
}
