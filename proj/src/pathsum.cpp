#include "qwalk/pathsum.hpp"

#include <cstdint>
#include <future>
#include <string>
#include <thread>

namespace qwalk {

namespace {

std::string cap_message(int requested, int cap) {
  return "paths engine enumerates 2^(n+1) extended strings and is capped at n = " +
         std::to_string(cap) + " (requested n = " + std::to_string(requested) +
         ", hard maximum n = " + std::to_string(kMaxPathCap) + ")";
}

// Letters of mask, lexicographic with B < F: letter t is bit (n - t),
// so ascending masks enumerate strings in lexicographic order.
inline int letter_bit(std::uint64_t mask, int n, int t) {
  return static_cast<int>((mask >> (n - t)) & 1u);
}

void accumulate_range(StateVector& st, const WalkSpec& spec, std::uint64_t lo, std::uint64_t hi) {
  const int n = spec.steps;
  const double factor[2][2] = {{spec.theta.cos_v, spec.theta.sin_v},
                               {spec.theta.sin_v, -spec.theta.cos_v}};
  const Amplitude weight[2] = {Amplitude{spec.alpha, 0.0}, spec.coin1_amplitude()};
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    const int first = letter_bit(mask, n, 0);
    int prev = first;
    int x = 0;
    double product = 1.0;
    for (int t = 1; t <= n; ++t) {
      const int cur = letter_bit(mask, n, t);
      product *= factor[prev][cur];
      x += cur ? 1 : -1;
      prev = cur;
    }
    st.slot(prev, (x + n) / 2) += weight[first] * product;
  }
}

}  // namespace

double transition_factor(Letter from, Letter to, const CoinAngle& theta) {
  if (from == Letter::B) return to == Letter::B ? theta.cos_v : theta.sin_v;
  return to == Letter::B ? theta.sin_v : -theta.cos_v;
}

double TransitionRule::factor(const CoinAngle& theta) const { return transition_factor(from, to, theta); }

const std::array<TransitionRule, 4>& transition_rules() {
  static const std::array<TransitionRule, 4> rules = {{{Letter::B, Letter::B},
                                                       {Letter::B, Letter::F},
                                                       {Letter::F, Letter::B},
                                                       {Letter::F, Letter::F}}};
  return rules;
}

double path_amplitude(const ExtendedString& s, const CoinAngle& theta) {
  if (s.letters.empty()) throw std::invalid_argument("path_amplitude: empty string");
  double product = 1.0;
  for (std::size_t i = 1; i < s.letters.size(); ++i) {
    product *= transition_factor(s.letters[i - 1], s.letters[i], theta);
  }
  return product;
}

PathCapExceeded::PathCapExceeded(int requested, int cap)
    : std::runtime_error(cap_message(requested, cap)), requested_(requested), cap_(cap) {}

StateVector sum_over_paths(const WalkSpec& spec, const PathSumOptions& opts) {
  spec.validate();
  if (opts.cap < 0 || opts.cap > kMaxPathCap) {
    throw std::invalid_argument("paths cap must lie in [0, " + std::to_string(kMaxPathCap) + "]");
  }
  const int n = spec.steps;
  if (n > opts.cap) throw PathCapExceeded(n, opts.cap);

  const std::uint64_t total = std::uint64_t{1} << (n + 1);
  StateVector st = StateVector::zero(n);
  if (!opts.parallel || n < 12) {
    accumulate_range(st, spec, 0, total);
    return st;
  }

  // Power-of-two worker count so every chunk is exactly one prefix class.
  unsigned workers = 2;
  while (workers * 2 <= std::min(std::max(std::thread::hardware_concurrency(), 2u), 8u)) workers *= 2;
  std::vector<std::future<StateVector>> parts;
  parts.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = total / workers * w;
    const std::uint64_t hi = w + 1 == workers ? total : total / workers * (w + 1);
    parts.push_back(std::async(std::launch::async, [&spec, lo, hi, n] {
      StateVector part = StateVector::zero(n);
      accumulate_range(part, spec, lo, hi);
      return part;
    }));
  }
  // Reduce in ascending chunk order.
  for (auto& f : parts) {
    const StateVector part = f.get();
    for (int i = 0; i <= n; ++i) {
      st.coin0[i] += part.coin0[i];
      st.coin1[i] += part.coin1[i];
    }
  }
  return st;
}

std::vector<SwitchGroup> enumerate_groups(int n, int cap) {
  if (n < 0) throw std::invalid_argument("enumerate_groups: negative step count");
  if (cap < 0 || cap > kMaxPathCap) {
    throw std::invalid_argument("paths cap must lie in [0, " + std::to_string(kMaxPathCap) + "]");
  }
  if (n > cap) throw PathCapExceeded(n, cap);

  struct Bucket {
    std::uint64_t count = 0;
    std::int8_t parity = 0;  // 0 = unset
    std::int8_t coin = -1;
  };
  const int slots = n + 1;
  const int jvals = n + 1;
  std::vector<Bucket> buckets(static_cast<std::size_t>(slots) * 2 * jvals);
  const auto index = [&](int slot, int c, int j) { return (static_cast<std::size_t>(slot) * 2 + c) * jvals + j; };

  const std::uint64_t total = std::uint64_t{1} << (n + 1);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const int first = letter_bit(mask, n, 0);
    int prev = first;
    int x = 0;
    int j = 0;
    int ff = 0;
    for (int t = 1; t <= n; ++t) {
      const int cur = letter_bit(mask, n, t);
      j += cur != prev ? 1 : 0;
      ff += (cur & prev) != 0 ? 1 : 0;
      x += cur ? 1 : -1;
      prev = cur;
    }
    const std::int8_t parity = ff % 2 != 0 ? -1 : 1;
    const std::int8_t coin = static_cast<std::int8_t>(prev);
    Bucket& b = buckets[index((x + n) / 2, first, j)];
    if (b.count == 0) {
      b.parity = parity;
      b.coin = coin;
    } else if (b.parity != parity || b.coin != coin) {
      throw std::logic_error("enumerate_groups: group (c=" + std::string(1, first ? 'F' : 'B') +
                             ", x=" + std::to_string(x) + ", j=" + std::to_string(j) +
                             ") mixes parity or final coin");
    }
    ++b.count;
  }

  std::vector<SwitchGroup> out;
  for (int slot = 0; slot < slots; ++slot) {
    for (int c = 0; c < 2; ++c) {
      for (int j = 0; j < jvals; ++j) {
        const Bucket& b = buckets[index(slot, c, j)];
        if (b.count == 0) continue;
        SwitchGroup g;
        g.initial = letter_of_coin(c);
        g.switch_count = j;
        g.position = 2 * slot - n;
        g.multiplicity = BigInt(static_cast<unsigned long>(b.count));
        g.parity = b.parity;
        g.final_coin = b.coin;
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

}  // namespace qwalk
