#include <doctest.h>

#include "arcline/interval.hpp"

using namespace arcline;

TEST_CASE("saturating arithmetic absorbs infinities") {
    CHECK(sat_add(3, 4) == 7);
    CHECK(sat_add(kPosInf, -100) == kPosInf);
    CHECK(sat_add(kNegInf, 100) == kNegInf);
    CHECK(sat_sub(5, kPosInf) == kNegInf);
    CHECK(sat_neg(kPosInf) == kNegInf);
    CHECK(sat_neg(-7) == 7);
    // near-sentinel finite values clamp instead of wrapping
    CHECK(sat_add(kPosInf - 1, kPosInf - 1) == kPosInf);
    CHECK(sat_add(kNegInf + 1, kNegInf + 1) == kNegInf);
}

TEST_CASE("interval basics") {
    CHECK(IntInterval().empty());
    CHECK(IntInterval::all().contains(123456789));
    CHECK(IntInterval::at(4) == IntInterval(4, 4));
    CHECK(IntInterval::at_most(3).contains(-1000));
    CHECK_FALSE(IntInterval::at_most(3).contains(4));
    CHECK(IntInterval::at_least(0).shifted(5) == IntInterval::at_least(5));
    CHECK(IntInterval::at_most(3).negated() == IntInterval::at_least(-3));
    CHECK(IntInterval::all().shifted(-7) == IntInterval::all());
    CHECK(intersect(IntInterval(0, 10), IntInterval(5, 20)) == IntInterval(5, 10));
    CHECK(intersect(IntInterval(0, 2), IntInterval(5, 7)).empty());
}

TEST_CASE("interval sets canonicalize on construction") {
    IntervalSet s({{5, 9}, {0, 2}, {3, 4}});
    REQUIRE(s.parts().size() == 1);  // 0..2, 3..4, 5..9 chain into one block
    CHECK(s.parts().front() == IntInterval(0, 9));

    IntervalSet gap({{0, 2}, {4, 6}});
    CHECK(gap.parts().size() == 2);
    CHECK(gap.contains(1));
    CHECK_FALSE(gap.contains(3));

    CHECK(IntervalSet({{3, 1}}).empty());  // inverted pieces vanish
}

TEST_CASE("interval set algebra") {
    IntervalSet a({{0, 5}, {10, 15}});
    IntervalSet b({{4, 11}});
    CHECK(unite(a, b) == IntervalSet({{0, 15}}));
    CHECK(intersect(a, b) == IntervalSet({{4, 5}, {10, 11}}));
    CHECK(difference(a, b) == IntervalSet({{0, 3}, {12, 15}}));
    CHECK(difference(IntervalSet::all(), IntervalSet({{0, 0}})) ==
          IntervalSet({IntInterval::at_most(-1), IntInterval::at_least(1)}));
    CHECK(is_subset(intersect(a, b), a));
    CHECK_FALSE(is_subset(a, b));
    CHECK(is_subset(IntervalSet(), a));
}

TEST_CASE("difference handles unbounded tails") {
    // a covering part whose hi saturates must consume the tail, not leave a sliver
    CHECK(difference(IntervalSet::all(), IntervalSet::all()).empty());
    CHECK(is_subset(IntervalSet::all(), IntervalSet::all()));
    IntervalSet ray({IntInterval::at_least(0)});
    CHECK(difference(ray, ray).empty());
    CHECK(difference(ray, IntervalSet::all()).empty());
    CHECK(difference(IntervalSet::all(), ray) == IntervalSet({IntInterval::at_most(-1)}));
    IntervalSet left({IntInterval::at_most(5)});
    CHECK(difference(left, left).empty());
    CHECK(difference(left, IntervalSet({IntInterval(0, 2)})) ==
          IntervalSet({IntInterval::at_most(-1), IntInterval(3, 5)}));
}

TEST_CASE("interval printing") {
    CHECK(to_string(IntInterval(0, 3)) == "[0,3]");
    CHECK(to_string(IntInterval::at_most(0)) == "(-inf,0]");
    CHECK(to_string(IntInterval::at_least(0)) == "[0,+inf)");
    CHECK(to_string(IntInterval::all()) == "(-inf,+inf)");
    CHECK(to_string(IntInterval()) == "empty");
    CHECK(to_string(IntervalSet({{0, 3}, {5, 9}})) == "[0,3] | [5,9]");
    CHECK(to_string(IntervalSet()) == "empty");
}
