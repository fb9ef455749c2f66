#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qwalk/evolver.hpp"
#include "qwalk/pathsum.hpp"

using namespace qwalk;

namespace {

constexpr double kPi = std::numbers::pi;

WalkSpec make_spec(int n, double theta, double alpha, double beta, double phi = 0.0) {
  WalkSpec spec;
  spec.steps = n;
  spec.theta = CoinAngle::from_radians(theta);
  spec.alpha = alpha;
  spec.beta = beta;
  spec.phi = phi;
  return spec;
}

}  // namespace

TEST_CASE("initial state places the coin amplitudes at the origin") {
  const StateVector a = initial_state(make_spec(0, 0.3, 1.0, 0.0));
  CHECK(a.step == 0);
  CHECK(a.at(0, 0) == Amplitude{1.0, 0.0});
  CHECK(a.at(1, 0) == Amplitude{});

  const StateVector b = initial_state(make_spec(0, 0.3, 0.0, 1.0, kPi));
  CHECK(std::abs(b.at(1, 0) - Amplitude{-1.0, 0.0}) < 1e-15);
  CHECK(b.at(0, 0) == Amplitude{});

  const double r = std::sqrt(0.5);
  const StateVector c = initial_state(make_spec(0, 0.3, r, r, kPi / 2));
  CHECK(std::abs(c.at(0, 0) - Amplitude{r, 0.0}) < 1e-15);
  CHECK(std::abs(c.at(1, 0) - Amplitude{0.0, r}) < 1e-15);
}

TEST_CASE("initial state rejects unnormalized coin amplitudes") {
  CHECK_THROWS_AS(initial_state(make_spec(0, 0.3, 1.0, 0.1)), std::invalid_argument);
}

TEST_CASE("one step from a pure coin-0 state") {
  const CoinAngle theta = CoinAngle::from_radians(0.9);
  const StateVector out = step(initial_state(make_spec(0, 0.9, 1.0, 0.0)), theta);
  CHECK(out.step == 1);
  CHECK(out.at(0, -1) == Amplitude{theta.cos_v, 0.0});
  CHECK(out.at(1, 1) == Amplitude{theta.sin_v, 0.0});
}

TEST_CASE("one step from a pure coin-1 state at theta = 0 is deterministic") {
  const CoinAngle theta = CoinAngle::from_pi_fraction(0, 1);
  WalkSpec spec = make_spec(0, 0.0, 0.0, 1.0);
  spec.theta = theta;
  const StateVector out = step(initial_state(spec), theta);
  CHECK(out.at(1, 1) == Amplitude{-1.0, 0.0});
  CHECK(out.at(0, -1) == Amplitude{});
}

TEST_CASE("two Hadamard steps from coin 0") {
  const CoinAngle theta = CoinAngle::from_radians(kPi / 4);
  StateVector st = initial_state(make_spec(0, kPi / 4, 1.0, 0.0));
  st = step(step(st, theta), theta);
  CHECK(std::abs(st.at(0, -2) - Amplitude{0.5, 0.0}) < 1e-15);
  CHECK(std::abs(st.at(0, 0) - Amplitude{0.5, 0.0}) < 1e-15);
  CHECK(std::abs(st.at(1, 0) - Amplitude{0.5, 0.0}) < 1e-15);
  CHECK(std::abs(st.at(1, 2) - Amplitude{-0.5, 0.0}) < 1e-15);
}

TEST_CASE("evolve: identity at n = 0 and the one-step map at n = 1") {
  const StateVector at0 = evolve(make_spec(0, 1.1, 0.6, 0.8, 0.5));
  CHECK(max_discrepancy(at0, initial_state(make_spec(0, 1.1, 0.6, 0.8, 0.5))) == 0.0);

  const WalkSpec spec = make_spec(1, 1.1, 1.0, 0.0);
  const StateVector at1 = evolve(spec);
  CHECK(std::abs(at1.at(0, -1) - Amplitude{spec.theta.cos_v, 0.0}) < 1e-15);
  CHECK(std::abs(at1.at(1, 1) - Amplitude{spec.theta.sin_v, 0.0}) < 1e-15);
}

TEST_CASE("two-step Hadamard probabilities") {
  const auto dist = distribution(evolve(make_spec(2, kPi / 4, 1.0, 0.0)));
  REQUIRE(dist.size() == 3);
  CHECK(dist[0].first == -2);
  CHECK(dist[0].second == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(dist[1].second == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(dist[2].second == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("distribution basics") {
  const auto trivial = distribution(initial_state(make_spec(0, 0.4, 1.0, 0.0)));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0] == std::pair<int, double>{0, 1.0});

  const WalkSpec spec = make_spec(1, 0.7, 1.0, 0.0);
  const auto one = distribution(evolve(spec));
  REQUIRE(one.size() == 2);
  CHECK(one[0].second == doctest::Approx(spec.theta.cos_v * spec.theta.cos_v).epsilon(1e-14));
  CHECK(one[1].second == doctest::Approx(spec.theta.sin_v * spec.theta.sin_v).epsilon(1e-14));

  double total = 0.0;
  for (const auto& [x, p] : distribution(evolve(make_spec(40, 1.2, 0.6, 0.8, 1.0)))) total += p;
  CHECK(std::abs(total - 1.0) < 1e-10);
}

TEST_CASE("norm preservation up to n = 1000") {
  for (const int n : {0, 1, 2, 3, 10, 137, 500, 1000}) {
    for (const double theta : {0.0, kPi / 4, 1.1, kPi / 2}) {
      const StateVector st = evolve(make_spec(n, theta, 0.6, 0.8, 0.9));
      CHECK(std::abs(st.norm_sq() - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("support parity: occupied positions match the step parity") {
  for (const int n : {1, 2, 7, 40}) {
    const StateVector st = evolve(make_spec(n, 0.9, 1.0, 0.0));
    for (const auto& e : st.entries()) {
      CHECK(std::abs(e.x) <= n);
      CHECK((e.x + n) % 2 == 0);
    }
  }
}

TEST_CASE("theta = 0 walk is ballistic with the known sign") {
  for (int n = 0; n <= 10; ++n) {
    WalkSpec spec = make_spec(n, 0.0, 0.6, 0.8, 1.3);
    spec.theta = CoinAngle::from_pi_fraction(0, 1);
    const StateVector st = evolve(spec);
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    CHECK(std::abs(st.at(0, -n) - Amplitude{0.6, 0.0}) < 1e-12);
    CHECK(std::abs(st.at(1, n) - sign * spec.coin1_amplitude()) < 1e-12);
    double rest = 0.0;
    for (const auto& e : st.entries()) {
      if (!((e.coin == 0 && e.x == -n) || (e.coin == 1 && e.x == n))) rest += std::abs(e.amp);
    }
    CHECK(rest == 0.0);
  }
}

TEST_CASE("dual symmetry: coin swap mirrors the distribution") {
  // First confirmed against the brute-force path sum at small n...
  for (int n = 1; n <= 10; ++n) {
    const auto pa = distribution(sum_over_paths(make_spec(n, 0.7, 1.0, 0.0)));
    const auto pb = distribution(sum_over_paths(make_spec(n, 0.7, 0.0, 1.0)));
    for (std::size_t i = 0; i < pa.size(); ++i) {
      CHECK(pa[i].second == doctest::Approx(pb[pb.size() - 1 - i].second).epsilon(1e-12));
    }
  }
  // ...then asserted for the evolver up to n = 50.
  for (const double theta : {0.4, kPi / 4, 1.3}) {
    for (int n = 1; n <= 50; ++n) {
      const auto pa = distribution(evolve(make_spec(n, theta, 1.0, 0.0)));
      const auto pb = distribution(evolve(make_spec(n, theta, 0.0, 1.0)));
      double worst = 0.0;
      for (std::size_t i = 0; i < pa.size(); ++i) {
        worst = std::max(worst, std::abs(pa[i].second - pb[pb.size() - 1 - i].second));
      }
      CHECK(worst <= 1e-12);
    }
  }
}
