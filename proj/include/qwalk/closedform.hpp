#pragma once

#include "qwalk/scaled.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

/// One switch group's contribution, before the initial-coin weight:
/// multiplicity * parity * cos^{n-j} * sin^j, landing on basis state
/// (coin, x). The value is exponent-tracked; to_double() is exact whenever
/// the value fits a double.
struct GroupTerm {
  int coin = 0;
  int x = 0;
  ScaledReal value;

  double to_double() const { return value.to_double(); }
};

/// Term of the group (c, x, j). Empty groups yield a zero value (not an
/// error).
GroupTerm component_amplitude(Letter c, int n, int x, int j, const CoinAngle& theta);

/// Polynomial-time engine: assembles the step-n state as
///   sum_{c,x,j} weight(c) * component_amplitude(c, n, x, j)
/// with weight(B) = alpha, weight(F) = beta e^{i phi}. Terms are accumulated
/// in a fixed order (ascending x, B before F, ascending j) in high-precision
/// arithmetic sized to the walk length, then rounded to doubles; the signed
/// group sums cancel by factors up to ~2^(n/2), which is far beyond what
/// double accumulation can absorb.
StateVector closed_state(const WalkSpec& spec);

}  // namespace qwalk
