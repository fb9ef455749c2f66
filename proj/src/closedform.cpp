#include "qwalk/closedform.hpp"

#include <mpfr.h>

#include <algorithm>
#include <vector>

#include "qwalk/combinatorics.hpp"

namespace qwalk {

namespace {

// Minimal RAII wrapper so vectors of accumulators clean up.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, +1);
  }
  MpReal(MpReal&& o) noexcept {
    v_[0] = o.v_[0];
    o.moved_ = true;
  }
  MpReal(const MpReal&) = delete;
  MpReal& operator=(const MpReal&) = delete;
  MpReal& operator=(MpReal&&) = delete;
  ~MpReal() {
    if (!moved_) mpfr_clear(v_);
  }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
  bool moved_ = false;
};

// Signed-sum magnitudes reach ~2^(n/2) while results are O(1), so the
// accumulator needs ~n/2 guard bits beyond double precision.
mpfr_prec_t precision_for(int n) { return std::max(128, n / 2 + 96); }

}  // namespace

GroupTerm component_amplitude(Letter c, int n, int x, int j, const CoinAngle& theta) {
  if (n < 0 || j < 0) throw std::invalid_argument("component_amplitude: negative n or j");
  GroupTerm out{final_coin(c, j), x, ScaledReal::zero()};
  const BigInt multiplicity = extended_count(c, n, x, j);
  if (multiplicity == 0) return out;
  ScaledReal value = ScaledReal::from_bigint(multiplicity);
  value *= ScaledReal::pow(theta.cos_v, static_cast<unsigned long>(n - j));
  value *= ScaledReal::pow(theta.sin_v, static_cast<unsigned long>(j));
  if (parity_sign_unchecked(c, n, x, j) < 0) value.negate();
  out.value = value;
  return out;
}

StateVector closed_state(const WalkSpec& spec) {
  spec.validate();
  const int n = spec.steps;
  const mpfr_prec_t prec = precision_for(n);

  // Power ladders for cos^k and sin^k of the shared coin factors.
  std::vector<MpReal> cpow;
  std::vector<MpReal> spow;
  cpow.reserve(n + 1);
  spow.reserve(n + 1);
  cpow.emplace_back(prec);
  spow.emplace_back(prec);
  mpfr_set_ui(cpow[0].get(), 1, MPFR_RNDN);
  mpfr_set_ui(spow[0].get(), 1, MPFR_RNDN);
  for (int k = 1; k <= n; ++k) {
    cpow.emplace_back(prec);
    spow.emplace_back(prec);
    mpfr_mul_d(cpow[k].get(), cpow[k - 1].get(), spec.theta.cos_v, MPFR_RNDN);
    mpfr_mul_d(spow[k].get(), spow[k - 1].get(), spec.theta.sin_v, MPFR_RNDN);
  }

  // Real group sums per (initial letter, coin, slot); the complex initial
  // weights enter only at the final double combination.
  const int slots = n + 1;
  std::vector<MpReal> acc;
  acc.reserve(static_cast<std::size_t>(4) * slots);
  for (int i = 0; i < 4 * slots; ++i) acc.emplace_back(prec);
  const auto acc_index = [slots](int c, int coin, int slot) {
    return (static_cast<std::size_t>(c) * 2 + coin) * slots + slot;
  };

  MpReal term(prec);
  mpz_class count;
  for (int slot = 0; slot < slots; ++slot) {
    const int x = 2 * slot - n;
    for (int c = 0; c < 2; ++c) {
      const Letter letter = letter_of_coin(c);
      const int forward = (n + x) / 2;
      const int backward = (n - x) / 2;
      const long lead = (letter == Letter::B ? backward : forward) + 1;
      const long other = letter == Letter::B ? forward : backward;

      const auto emit = [&](int j, const mpz_class& multiplicity) {
        if (multiplicity == 0) return;
        mpfr_set_z(term.get(), multiplicity.get_mpz_t(), MPFR_RNDN);
        mpfr_mul(term.get(), term.get(), cpow[n - j].get(), MPFR_RNDN);
        mpfr_mul(term.get(), term.get(), spow[j].get(), MPFR_RNDN);
        mpfr_ptr target = acc[acc_index(c, final_coin(letter, j), slot)].get();
        if (parity_sign_unchecked(letter, n, x, j) < 0)
          mpfr_sub(target, target, term.get(), MPFR_RNDN);
        else
          mpfr_add(target, target, term.get(), MPFR_RNDN);
      };

      if (other == 0) emit(0, 1);
      if (other >= 1) {
        // Rolling binomials: A = C(lead-1, m), B = C(other-1, m); the group
        // with j = 2m+1 switches counts A*B strings and j = 2m+2 counts
        // A_{m+1}*B_m.
        const int jmax = static_cast<int>(std::min({2 * other, 2 * lead - 1, static_cast<long>(n)}));
        mpz_class a = 1;
        mpz_class b = 1;
        for (int m = 0; 2 * m + 1 <= jmax; ++m) {
          count = a * b;
          emit(2 * m + 1, count);
          if (lead - 1 - m > 0) {
            mpz_mul_ui(a.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(lead - 1 - m));
            mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(m + 1));
          } else {
            a = 0;
          }
          if (2 * m + 2 <= jmax) {
            count = a * b;
            emit(2 * m + 2, count);
          }
          if (other - 1 - m > 0) {
            mpz_mul_ui(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(other - 1 - m));
            mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(m + 1));
          } else {
            b = 0;
          }
          if (a == 0 && b == 0) break;
        }
      }
    }
  }

  StateVector st = StateVector::zero(n);
  const Amplitude w1 = spec.coin1_amplitude();
  for (int coin = 0; coin < 2; ++coin) {
    for (int slot = 0; slot < slots; ++slot) {
      const double from_b = mpfr_get_d(acc[acc_index(0, coin, slot)].get(), MPFR_RNDN);
      const double from_f = mpfr_get_d(acc[acc_index(1, coin, slot)].get(), MPFR_RNDN);
      st.slot(coin, slot) = spec.alpha * from_b + w1 * from_f;
    }
  }
  return st;
}

}  // namespace qwalk
