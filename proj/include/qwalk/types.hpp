#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/bigint.hpp"

namespace qwalk {

using Amplitude = std::complex<double>;

/// Walk letters. B is a backward shift (position k -> k-1, coin |0>),
/// F is a forward shift (k -> k+1, coin |1>).
enum class Letter : std::uint8_t { B = 0, F = 1 };

constexpr int coin_of(Letter l) { return l == Letter::F ? 1 : 0; }
constexpr Letter letter_of_coin(int coin) { return coin ? Letter::F : Letter::B; }
constexpr char letter_char(Letter l) { return l == Letter::F ? 'F' : 'B'; }

/// Coin angle with its cosine and sine fixed at construction. Every engine
/// consumes the same (cos, sin) pair, so cross-engine comparisons always see
/// one and the same walk.
struct CoinAngle {
  double radians = 0.0;
  double cos_v = 1.0;
  double sin_v = 0.0;

  static CoinAngle from_radians(double t);

  /// Angle (p/q)*pi. After reduction, quadrant multiples (q == 1 or q == 2)
  /// get exact 0/±1 trig values so degenerate walks stay exact.
  static CoinAngle from_pi_fraction(long long p, long long q);
};

/// Parameters of an n-step walk: step count, coin angle, and the initial
/// coin state alpha|0> + beta e^{i phi}|1> with real alpha, beta.
struct WalkSpec {
  int steps = 0;
  CoinAngle theta;
  double alpha = 1.0;
  double beta = 0.0;
  double phi = 0.0;

  static constexpr double kNormTolerance = 1e-12;

  /// beta * e^{i phi}, the initial coin-1 amplitude.
  Amplitude coin1_amplitude() const;

  /// Throws std::invalid_argument unless steps >= 0, all fields are finite,
  /// and alpha^2 + beta^2 = 1 within kNormTolerance.
  void validate() const;
};

/// An (n+1)-letter word over {B, F}: the first letter encodes the initial
/// coin, the remaining n letters are the shift transitions of the path.
struct ExtendedString {
  std::vector<Letter> letters;

  /// Parses "BFFB" or, equivalently, "B*FFB" (the '*' separator between the
  /// initial coin and the transitions is ignored).
  static ExtendedString from_string(std::string_view text);

  std::string str() const;  // "B*FFB" form
  Letter initial() const { return letters.front(); }
  int transition_count() const { return static_cast<int>(letters.size()) - 1; }
};

/// Terminal position: (#F - #B) over the transition letters only.
int endpoint(const ExtendedString& s);

/// Number of adjacent unequal pairs over all n+1 letters; the pair formed by
/// the initial-coin prefix and the first transition counts too.
int switches(const ExtendedString& s);

/// Walker state at a fixed step. Dense over the parity-valid positions
/// x in {-step, -step+2, ..., +step}; slot i holds position x = 2*i - step.
struct StateVector {
  int step = 0;
  std::vector<Amplitude> coin0;
  std::vector<Amplitude> coin1;

  static StateVector zero(int step);

  int slot_count() const { return step + 1; }
  int x_of_slot(int i) const { return 2 * i - step; }
  bool on_support(int x) const;

  Amplitude at(int coin, int x) const;  // 0 off support
  Amplitude& slot(int coin, int i) { return coin ? coin1[i] : coin0[i]; }
  const Amplitude& slot(int coin, int i) const { return coin ? coin1[i] : coin0[i]; }

  double norm_sq() const;

  struct Entry {
    int coin;
    int x;
    Amplitude amp;
  };
  /// All dense entries, ascending (x, coin).
  std::vector<Entry> entries() const;
};

/// Largest |a - b| over all basis states. Both states must be at the same
/// step.
double max_discrepancy(const StateVector& a, const StateVector& b);

/// A (initial letter, switch count, endpoint) class of extended strings.
struct SwitchGroup {
  Letter initial = Letter::B;
  int switch_count = 0;
  int position = 0;
  BigInt multiplicity;
  int parity = 1;      // common (-1)^{#F->F} of all members
  int final_coin = 0;  // common terminal coin of all members
};

}  // namespace qwalk
