#pragma once

#include <gmpxx.h>

namespace lefarr {

// Exact rational coefficients. mpq_class keeps values canonical
// (lowest terms, positive denominator), which is exactly the invariant
// we need; no wrapper on top.
using Rational = mpq_class;
using Integer = mpz_class;

}  // namespace lefarr
