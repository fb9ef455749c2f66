#include "qwalk/evolver.hpp"

#include <cmath>

namespace qwalk {

StateVector initial_state(const WalkSpec& spec) {
  spec.validate();
  StateVector st = StateVector::zero(0);
  st.coin0[0] = Amplitude{spec.alpha, 0.0};
  st.coin1[0] = spec.coin1_amplitude();
  return st;
}

StateVector step(const StateVector& state, const CoinAngle& theta) {
  const int m = state.step;
  const double c = theta.cos_v;
  const double s = theta.sin_v;
  StateVector out = StateVector::zero(m + 1);
  // Output slot i holds y = 2i - (m+1); sources sit at y+1 (input slot i)
  // and y-1 (input slot i-1). Accumulation order: ascending x, coin 0 term
  // before coin 1 term.
  for (int i = 0; i <= m + 1; ++i) {
    if (i <= m) out.coin0[i] = c * state.coin0[i] + s * state.coin1[i];
    if (i >= 1) out.coin1[i] = s * state.coin0[i - 1] - c * state.coin1[i - 1];
  }
  return out;
}

StateVector evolve(const WalkSpec& spec) {
  StateVector st = initial_state(spec);
  for (int t = 0; t < spec.steps; ++t) st = step(st, spec.theta);
  return st;
}

std::vector<std::pair<int, double>> distribution(const StateVector& state) {
  std::vector<std::pair<int, double>> out;
  out.reserve(state.slot_count());
  for (int i = 0; i <= state.step; ++i) {
    out.emplace_back(state.x_of_slot(i), std::norm(state.coin0[i]) + std::norm(state.coin1[i]));
  }
  return out;
}

}  // namespace qwalk
