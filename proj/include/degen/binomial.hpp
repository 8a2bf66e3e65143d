#pragma once

#include "degen/rational.hpp"

namespace degen {

/// C(n, k) from a Pascal table built once up to kPascalRows, exact beyond it.
/// Returns 0 for k > n.
const BigInt& binomial(unsigned n, unsigned k);

inline constexpr unsigned kPascalRows = 160;

}  // namespace degen
