#include "qwalk/types.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qwalk {

CoinAngle CoinAngle::from_radians(double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("coin angle must be finite");
  return {t, std::cos(t), std::sin(t)};
}

CoinAngle CoinAngle::from_pi_fraction(long long p, long long q) {
  if (q == 0) throw std::invalid_argument("coin angle fraction has zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const long long g = std::gcd(p < 0 ? -p : p, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  CoinAngle a;
  a.radians = std::numbers::pi * static_cast<double>(p) / static_cast<double>(q);
  if (q == 1 || q == 2) {
    // quadrant multiple: exact trig values
    const long long m = ((p % (2 * q)) + 2 * q) % (2 * q);
    if (q == 1) {
      a.cos_v = m == 0 ? 1.0 : -1.0;
      a.sin_v = 0.0;
    } else {
      a.cos_v = 0.0;
      a.sin_v = m == 1 ? 1.0 : -1.0;
    }
  } else {
    a.cos_v = std::cos(a.radians);
    a.sin_v = std::sin(a.radians);
  }
  return a;
}

Amplitude WalkSpec::coin1_amplitude() const { return std::polar(beta, phi); }

void WalkSpec::validate() const {
  if (steps < 0) throw std::invalid_argument("walk spec: steps must be non-negative");
  if (!std::isfinite(theta.radians) || !std::isfinite(theta.cos_v) || !std::isfinite(theta.sin_v) ||
      !std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(phi)) {
    throw std::invalid_argument("walk spec: parameters must be finite");
  }
  const double norm = alpha * alpha + beta * beta;
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw std::invalid_argument("walk spec: initial coin state is not normalized (alpha^2 + beta^2 = " +
                                std::to_string(norm) + ")");
  }
}

ExtendedString ExtendedString::from_string(std::string_view text) {
  ExtendedString s;
  s.letters.reserve(text.size());
  for (const char ch : text) {
    if (ch == '*') continue;
    if (ch == 'B')
      s.letters.push_back(Letter::B);
    else if (ch == 'F')
      s.letters.push_back(Letter::F);
    else
      throw std::invalid_argument(std::string("extended string: unexpected character '") + ch + "'");
  }
  if (s.letters.empty()) throw std::invalid_argument("extended string: empty");
  return s;
}

std::string ExtendedString::str() const {
  std::string out;
  out.reserve(letters.size() + 1);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    out.push_back(letter_char(letters[i]));
    if (i == 0) out.push_back('*');
  }
  return out;
}

int endpoint(const ExtendedString& s) {
  if (s.letters.empty()) throw std::invalid_argument("endpoint: empty string");
  int x = 0;
  for (std::size_t i = 1; i < s.letters.size(); ++i) x += s.letters[i] == Letter::F ? 1 : -1;
  return x;
}

int switches(const ExtendedString& s) {
  if (s.letters.empty()) throw std::invalid_argument("switches: empty string");
  int j = 0;
  for (std::size_t i = 1; i < s.letters.size(); ++i) j += s.letters[i] != s.letters[i - 1] ? 1 : 0;
  return j;
}

StateVector StateVector::zero(int step) {
  if (step < 0) throw std::invalid_argument("state vector: negative step");
  StateVector st;
  st.step = step;
  st.coin0.assign(static_cast<std::size_t>(step) + 1, Amplitude{});
  st.coin1.assign(static_cast<std::size_t>(step) + 1, Amplitude{});
  return st;
}

bool StateVector::on_support(int x) const { return x >= -step && x <= step && ((x + step) & 1) == 0; }

Amplitude StateVector::at(int coin, int x) const {
  if (!on_support(x)) return Amplitude{};
  return slot(coin, (x + step) / 2);
}

double StateVector::norm_sq() const {
  double total = 0.0;
  for (int i = 0; i <= step; ++i) total += std::norm(coin0[i]) + std::norm(coin1[i]);
  return total;
}

std::vector<StateVector::Entry> StateVector::entries() const {
  std::vector<Entry> out;
  out.reserve(2 * static_cast<std::size_t>(step + 1));
  for (int i = 0; i <= step; ++i) {
    const int x = x_of_slot(i);
    out.push_back({0, x, coin0[i]});
    out.push_back({1, x, coin1[i]});
  }
  return out;
}

double max_discrepancy(const StateVector& a, const StateVector& b) {
  if (a.step != b.step) throw std::invalid_argument("max_discrepancy: states at different steps");
  double worst = 0.0;
  for (int i = 0; i <= a.step; ++i) {
    worst = std::max(worst, std::abs(a.coin0[i] - b.coin0[i]));
    worst = std::max(worst, std::abs(a.coin1[i] - b.coin1[i]));
  }
  return worst;
}

}  // namespace qwalk
