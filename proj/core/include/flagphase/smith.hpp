#pragma once

#include <vector>

#include "flagphase/rational.hpp"

namespace flagphase {

using IntegerMatrix = std::vector<std::vector<Integer>>;

// Nonzero invariant factors d_1 | d_2 | ... of an integer matrix, all positive.
std::vector<Integer> invariant_factors(IntegerMatrix m);

// gcd of the maximal (rank-sized) minors: the product of the invariant factors.
// Zero for the zero matrix.
Integer determinantal_divisor(const IntegerMatrix& m);

}  // namespace flagphase
