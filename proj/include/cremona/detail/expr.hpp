#pragma once

// exact expression parser shared by Scalar, HomPoly and BiPoly

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cremona/scalar.hpp"

namespace cremona::detail {

using Exp3 = std::array<unsigned, 3>;
using GenPoly = std::map<Exp3, Scalar>;

// variables name up to three indeterminates; "i" is sqrt(-1) unless listed
GenPoly parse_gen(const std::string& s, const std::vector<std::string>& vars);

// split on a separator at parenthesis depth 0
std::vector<std::string> split_top(const std::string& s, char sep);

}  // namespace cremona::detail
