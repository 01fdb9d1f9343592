#include "arcline/arc.hpp"

namespace arcline {

std::string to_string(const Arc& a) {
    return "(" + std::to_string(a.m) + "," + std::to_string(a.n) + ")";
}

}  // namespace arcline
