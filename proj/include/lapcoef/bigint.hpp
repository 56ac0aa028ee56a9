#pragma once

#include <gmpxx.h>

namespace lapcoef {

using BigInt = mpz_class;

// Binomial coefficient with the zero-outside-range convention:
// C(a, b) = 0 whenever b < 0, a < 0 or b > a.
BigInt binomial(long a, long b);

}  // namespace lapcoef
