#pragma once

#include <cmath>

#include "qwalk/bigint.hpp"

namespace qwalk {

/// Signed real tracked as frac * 2^exp2 with |frac| in [0.5, 1) or frac == 0.
/// Keeps products of huge multiplicities and tiny trig powers inside range;
/// only the final to_double() can leave the double range.
struct ScaledReal {
  double frac = 0.0;
  long exp2 = 0;

  static ScaledReal zero() { return {}; }
  static ScaledReal one() { return {0.5, 1}; }

  static ScaledReal from_double(double v) {
    if (v == 0.0) return {};
    int e = 0;
    const double f = std::frexp(v, &e);
    return {f, e};
  }

  static ScaledReal from_bigint(const BigInt& v) {
    if (v == 0) return {};
    long e = 0;
    const double f = mpz_get_d_2exp(&e, v.get_mpz_t());
    return {f, e};
  }

  /// base^k by repeated squaring, with 0^0 = 1.
  static ScaledReal pow(double base, unsigned long k) {
    ScaledReal result = one();
    ScaledReal sq = from_double(base);
    while (k != 0) {
      if (k & 1) result *= sq;
      sq *= sq;
      k >>= 1;
    }
    return result;
  }

  ScaledReal& operator*=(const ScaledReal& o) {
    if (frac == 0.0 || o.frac == 0.0) {
      frac = 0.0;
      exp2 = 0;
      return *this;
    }
    int e = 0;
    frac = std::frexp(frac * o.frac, &e);
    exp2 += o.exp2 + e;
    return *this;
  }

  friend ScaledReal operator*(ScaledReal a, const ScaledReal& b) { return a *= b; }

  ScaledReal& negate() {
    frac = -frac;
    return *this;
  }

  int sign() const { return frac > 0.0 ? 1 : frac < 0.0 ? -1 : 0; }

  /// Exact when the value fits a double; +/-inf or 0 when it does not.
  double to_double() const {
    if (frac == 0.0) return 0.0;
    if (exp2 > 1100) return frac > 0.0 ? HUGE_VAL : -HUGE_VAL;
    if (exp2 < -1100) return frac > 0.0 ? 0.0 : -0.0;
    return std::ldexp(frac, static_cast<int>(exp2));
  }
};

}  // namespace qwalk
