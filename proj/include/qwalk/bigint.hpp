#pragma once

#include <gmpxx.h>

namespace qwalk {

using BigInt = mpz_class;

/// Exact binomial coefficient C(m, k). Returns 0 when k < 0 or k > m.
/// Requires m >= 0.
BigInt binomial(long m, long k);

/// Number of strong compositions of `total` into `parts` strictly positive
/// parts: C(total-1, parts-1), with the empty composition of 0 into 0 parts
/// counting once.
BigInt strong_compositions(long total, long parts);

}  // namespace qwalk
