#pragma once

#include <string>

#include "arcline/region.hpp"

namespace arcline {

// Text form of a region:
//
//   region := term { "|" term }
//   term   := "arcs" "{" [arc {"," arc}] "}"
//           | "box" "(" range "," range ["," "diag" range] ")"
//           | "lower" "(" INT ")" | "upper" "(" INT ")"
//           | "leftray" "(" INT "," INT ")" | "rightray" "(" INT "," INT ")"
//           | "all" | "empty"
//           | "shift" "(" INT "," region ")" | "not" "(" region ")"
//           | "(" region ")"
//   arc    := "(" INT "," INT ")"
//   range  := ("["|"(") (INT|"-inf") "," (INT|"+inf") ("]"|")")
//
// lower(b) keeps every arc ending at b or earlier, upper(a) every arc starting
// at a or later; leftray(e,t) is the arcs (m,e) with m <= t and rightray(e,t)
// the arcs (e,n) with n >= t. box takes the m-interval, the n-interval, and an
// optional band of allowed lengths n-m (default [2,+inf)). Round brackets on a
// finite range endpoint exclude it.

// Parses `text`; throws parse_error with line/column on bad syntax and on
// values that denote nothing (inverted ranges, pairs with n - m < 2).
ArcRegion parse_region(const std::string& text);

// Prints the normalized form, preferring the sugar spellings above; the result
// parses back to an equal region.
std::string print_region(const ArcRegion& r);

}  // namespace arcline
