#include "qwalk/combinatorics.hpp"

#include <stdexcept>

namespace qwalk {

namespace {

// Ceil/floor of (j+1)/2: run counts of the two letter types in a string
// with j switches (j+1 runs, first run fixing which type gets the ceiling).
inline int lead_runs(int j) { return (j + 2) / 2; }
inline int other_runs(int j) { return (j + 1) / 2; }

}  // namespace

ShiftCounts ShiftCounts::of(int n, int x) {
  if (!valid(n, x)) throw std::invalid_argument("shift counts: position off the step-n support");
  return {(n + x) / 2, (n - x) / 2};
}

BigInt total_paths(int n, int x) {
  if (n < 0) throw std::invalid_argument("total_paths: negative step count");
  if (!ShiftCounts::valid(n, x)) return 0;
  return binomial(n, (n + x) / 2);
}

BigInt eta(int n, int x, int j) {
  if (n < 1 || j < 0) return 0;
  if (!ShiftCounts::valid(n, x)) return 0;
  const ShiftCounts sc = ShiftCounts::of(n, x);
  // B-first strings have lead_runs(j) B-runs; F-first strings the dual.
  return strong_compositions(sc.backward, lead_runs(j)) * strong_compositions(sc.forward, other_runs(j)) +
         strong_compositions(sc.forward, lead_runs(j)) * strong_compositions(sc.backward, other_runs(j));
}

bool eta_identity_check(int n, int x) {
  BigInt total = 0;
  for (int j = 0; j <= n; ++j) total += eta(n, x, j);
  return total == total_paths(n, x);
}

BigInt extended_count(Letter c, int n, int x, int j) {
  if (n < 0 || j < 0) return 0;
  if (!ShiftCounts::valid(n, x)) return 0;
  const ShiftCounts sc = ShiftCounts::of(n, x);
  // Letters of the initial-coin type, prefix included, vs the other type.
  const long lead = (c == Letter::B ? sc.backward : sc.forward) + 1;
  const long other = c == Letter::B ? sc.forward : sc.backward;
  return strong_compositions(lead, lead_runs(j)) * strong_compositions(other, other_runs(j));
}

int parity_sign_unchecked(Letter c, int n, int x, int j) {
  const int f_letters = (n + x) / 2 + (c == Letter::F ? 1 : 0);
  const int f_runs = c == Letter::F ? lead_runs(j) : other_runs(j);
  return (f_letters - f_runs) % 2 != 0 ? -1 : 1;
}

int parity_sign(Letter c, int n, int x, int j) {
  if (extended_count(c, n, x, j) == 0)
    throw std::domain_error("parity_sign: empty extended-string group");
  return parity_sign_unchecked(c, n, x, j);
}

int final_coin(Letter c, int j) {
  const int flips = j < 0 ? -j : j;
  return c == Letter::B ? flips % 2 : (flips + 1) % 2;
}

}  // namespace qwalk
