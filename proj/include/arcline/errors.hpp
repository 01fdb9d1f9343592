#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace arcline {

// Violated operation precondition (wrong mode, margin too small, not precovering...).
// The CLI maps this to exit code 2.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A classification branch that a proved theorem rules out. Must never fire; exit code 3.
struct theorem_violation : std::logic_error {
    using std::logic_error::logic_error;
};

// Syntax error from the region DSL, with source position and what was expected.
struct parse_error : std::runtime_error {
    int line;
    int col;
    std::vector<std::string> expected;

    parse_error(const std::string& msg, int line_, int col_, std::vector<std::string> expected_ = {})
        : std::runtime_error(msg), line(line_), col(col_), expected(std::move(expected_)) {}
};

// Well-formed syntax denoting nonsense: invalid arcs, inverted ranges.
struct semantic_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace arcline
