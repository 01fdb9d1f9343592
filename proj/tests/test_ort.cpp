#include <doctest.h>

#include "arcline/dsl.hpp"
#include "arcline/oracle.hpp"
#include "arcline/ort.hpp"

using namespace arcline;

TEST_CASE("cross_set closed forms") {
    CHECK(equals(cross_set(parse_region("arcs{(0,2)}")),
                 parse_region("leftray(1,-1) | rightray(1,3)")));
    CHECK(is_empty(cross_set(ArcRegion::empty())));
    CHECK(equals(cross_set(lower_region(0)), parse_region("box((-inf,-1],(-inf,+inf))")));
    // membership spot checks around the boundary
    ArcRegion cs = cross_set(parse_region("arcs{(0,4)}"));
    CHECK(member(cs, Arc(-2, 1)));
    CHECK(member(cs, Arc(3, 9)));
    CHECK_FALSE(member(cs, Arc(-2, 0)));  // endpoint contact is not crossing
    CHECK_FALSE(member(cs, Arc(1, 3)));   // nested
    CHECK_FALSE(member(cs, Arc(4, 6)));
}

TEST_CASE("ort fixed values") {
    CHECK(equals(ort(ArcRegion::empty()), ArcRegion::all()));
    CHECK(equals(ort(ArcRegion::all()), ArcRegion::empty()));
    CHECK(equals(ort(lower_region(0)), upper_region(0)));

    // arcs avoiding the inside of (0,2): neither endpoint may be 1
    ArcRegion o = ort(parse_region("arcs{(0,2)}"));
    CHECK(member(o, Arc(3, 7)));
    CHECK(member(o, Arc(0, 2)));
    CHECK(member(o, Arc(-5, 0)));
    CHECK_FALSE(member(o, Arc(1, 4)));
    CHECK_FALSE(member(o, Arc(-3, 1)));
}

TEST_CASE("worked closure") {
    CHECK(equals(closure(parse_region("arcs{(0,2),(1,3)}")),
                 parse_region("arcs{(0,2),(1,3),(0,3)}")));
}

TEST_CASE("galois laws on generated regions") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        ArcRegion r = random_region(seed, 5, 7);
        ArcRegion o1 = ort(r), o2 = ort(o1), o3 = ort(o2);
        CAPTURE(print_region(r));
        CHECK(equals(o3, o1));                      // ort cubed
        CHECK(is_subset(r, o2));                    // closure is extensive
        CHECK(equals(ort(o3), o2));                 // closure idempotent
        CHECK(equals(ort(shift_region(r, 1)), shift_region(o1, 1)));

        ArcRegion bigger = union_of(r, random_region(seed + 1000, 3, 7));
        CHECK(is_subset(ort(bigger), o1));          // antitone
    }
}

TEST_CASE("fountain profiles") {
    FountainProfile lo = fountains(lower_region(0));
    CHECK(lo.left == IntervalSet({IntInterval::at_most(0)}));
    CHECK(lo.right.empty());

    FountainProfile ray = fountains(parse_region("box((-inf,3],[5,5])"));
    CHECK(ray.left == IntervalSet({IntInterval::at(5)}));
    CHECK(ray.right.empty());

    FountainProfile both = fountains(parse_region("lower(0) | upper(4)"));
    CHECK(both.left == IntervalSet({IntInterval::at_most(0)}));
    CHECK(both.right == IntervalSet({IntInterval::at_least(4)}));
    CHECK(both.fountains().empty());

    CHECK(fountains(ArcRegion::all()).fountains() == IntervalSet::all());

    // a bounded band never feeds a fountain
    CHECK(is_locally_finite(parse_region("box((-inf,+inf),(-inf,+inf),diag [2,9])")));
    CHECK(is_locally_finite(parse_region("arcs{(0,2),(5,9)}")));
    CHECK_FALSE(is_locally_finite(lower_region(0)));
}
