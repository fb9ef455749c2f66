#pragma once

#include <utility>
#include <vector>

#include "qwalk/types.hpp"

namespace qwalk {

/// State at step 0: alpha|0,0> + beta e^{i phi}|1,0>.
StateVector initial_state(const WalkSpec& spec);

/// One application of the walk unitary (coin, then conditional shift):
///   |0,k> -> cos |0,k-1> + sin |1,k+1>
///   |1,k> -> sin |0,k-1> - cos |1,k+1>
StateVector step(const StateVector& state, const CoinAngle& theta);

/// n applications of step on the initial state. O(n^2) time, O(n) space.
StateVector evolve(const WalkSpec& spec);

/// P(x) = sum_coin |amplitude(coin, x)|^2 per occupied position, ascending x.
std::vector<std::pair<int, double>> distribution(const StateVector& state);

}  // namespace qwalk
