#pragma once

// exact dense linear algebra over Scalar

#include <vector>

#include "cremona/scalar.hpp"

namespace cremona::detail {

using SMatrix = std::vector<std::vector<Scalar>>;

// basis of the right nullspace
std::vector<std::vector<Scalar>> nullspace(SMatrix a, std::size_t ncols);
Scalar determinant(SMatrix a);

}  // namespace cremona::detail
