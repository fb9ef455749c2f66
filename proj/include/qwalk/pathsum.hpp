#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "qwalk/types.hpp"

namespace qwalk {

/// One-step amplitude factor, independent of position and step number:
/// B->B: cos, B->F: sin, F->B: sin, F->F: -cos.
struct TransitionRule {
  Letter from;
  Letter to;
  double factor(const CoinAngle& theta) const;
};

/// The four transition rules, in (B->B, B->F, F->B, F->F) order.
const std::array<TransitionRule, 4>& transition_rules();

double transition_factor(Letter from, Letter to, const CoinAngle& theta);

/// Product of the n one-step factors of an extended string, taken left to
/// right. Equals parity(s) * cos^{n-j} * sin^j with j = switches(s).
double path_amplitude(const ExtendedString& s, const CoinAngle& theta);

inline constexpr int kDefaultPathCap = 20;
inline constexpr int kMaxPathCap = 26;

/// Enumeration refused: 2^(n+1) paths would exceed the configured cap.
class PathCapExceeded : public std::runtime_error {
 public:
  PathCapExceeded(int requested, int cap);
  int requested() const { return requested_; }
  int cap() const { return cap_; }

 private:
  int requested_;
  int cap_;
};

struct PathSumOptions {
  int cap = kDefaultPathCap;  // at most kMaxPathCap
  bool parallel = false;      // partition by string prefix
};

/// Brute-force Feynman sum: every extended string contributes its initial
/// weight (alpha for B-first, beta e^{i phi} for F-first) times its path
/// amplitude, accumulated at (final coin, endpoint). Sequential enumeration
/// is lexicographic with B < F; parallel mode agrees within 1e-12.
StateVector sum_over_paths(const WalkSpec& spec, const PathSumOptions& opts = {});

/// Buckets all 2^(n+1) extended strings by (initial letter, switches,
/// endpoint), verifying that every bucket is homogeneous in parity and final
/// coin (throws std::logic_error otherwise). Groups are returned ascending
/// (position, initial letter, switch count).
std::vector<SwitchGroup> enumerate_groups(int n, int cap = kDefaultPathCap);

}  // namespace qwalk
