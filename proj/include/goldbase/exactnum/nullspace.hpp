#pragma once

#include <vector>

#include "goldbase/exactnum/quad_rat.hpp"

namespace goldbase::exactnum {

using QuadMatrix = std::vector<std::vector<QuadRat>>;
using QuadVector = std::vector<QuadRat>;

// Basis of the exact nullspace of m, by Gaussian elimination over Q(sqrt(5)).
// Pivoting is deterministic (first nonzero entry in column order), so the
// basis is reproducible bit for bit.  Empty result for a trivial nullspace.
std::vector<QuadVector> quad_nullspace(const QuadMatrix& m);

}  // namespace goldbase::exactnum
