#pragma once

#include "qwalk/bigint.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

/// Forward/backward shift counts of an n-step path ending at signed
/// position x: forward = (n+x)/2, backward = (n-x)/2.
struct ShiftCounts {
  int forward = 0;
  int backward = 0;

  static bool valid(int n, int x) { return x >= -n && x <= n && ((n + x) & 1) == 0; }
  static ShiftCounts of(int n, int x);  // throws std::invalid_argument off support
};

/// Total number of n-step paths ending at x: C(n, (n+x)/2).
/// Returns 0 for parity-violating or out-of-range x.
BigInt total_paths(int n, int x);

/// Number of n-letter strings (both first letters counted) with endpoint x
/// and exactly j switches. Each such string is a block sequence of j+1
/// alternating runs, so the count is a product of two strong-composition
/// counts per first-letter type. Valid for j >= 0; j = 0 is the single-run
/// case, nonzero only at |x| = n.
BigInt eta(int n, int x, int j);

/// Checks sum_j eta(n, x, j) == total_paths(n, x), exactly.
bool eta_identity_check(int n, int x);

/// Number of (n+1)-letter extended strings with first letter c, endpoint x
/// over the n transition letters, and j switches over all adjacent pairs.
BigInt extended_count(Letter c, int n, int x, int j);

/// Common sign (-1)^{#F->F} over the (c, x, j) group, from run counting:
/// #F->F = (#F letters) - (#F runs), the same for every member.
/// No emptiness check; meaningful only when extended_count(c,n,x,j) > 0.
int parity_sign_unchecked(Letter c, int n, int x, int j);

/// As parity_sign_unchecked, but throws std::domain_error when the group is
/// empty.
int parity_sign(Letter c, int n, int x, int j);

/// Terminal coin of any extended string with first letter c and j switches:
/// j mod 2 for B-first strings, (j+1) mod 2 for F-first strings.
int final_coin(Letter c, int j);

}  // namespace qwalk
