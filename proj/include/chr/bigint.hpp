#pragma once

#include <gmpxx.h>

namespace chr {

// Coefficients are arbitrary-precision throughout; partitions stay small,
// coefficients do not.
using Int = mpz_class;
using Rat = mpq_class;

} // namespace chr
