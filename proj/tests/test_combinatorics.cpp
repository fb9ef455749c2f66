#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <map>
#include <tuple>

#include "qwalk/combinatorics.hpp"
#include "qwalk/pathsum.hpp"

using namespace qwalk;

namespace {

// Independent oracle: brute-force count of n-letter strings (no prefix) with
// endpoint x and j switches.
std::map<std::tuple<int, int>, long> enumerate_feynman_strings(int n) {
  std::map<std::tuple<int, int>, long> counts;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int x = 0;
    int j = 0;
    for (int t = 0; t < n; ++t) {
      const int cur = (mask >> (n - 1 - t)) & 1;
      x += cur ? 1 : -1;
      if (t > 0) j += cur != static_cast<int>((mask >> (n - t)) & 1) ? 1 : 0;
    }
    ++counts[{x, j}];
  }
  return counts;
}

}  // namespace

TEST_CASE("shift counts split steps into forward and backward") {
  const ShiftCounts sc = ShiftCounts::of(4, 2);
  CHECK(sc.forward == 3);
  CHECK(sc.backward == 1);
  for (int n = 0; n <= 12; ++n) {
    for (int x = -n; x <= n; x += 2) {
      const ShiftCounts c = ShiftCounts::of(n, x);
      CHECK(c.forward + c.backward == n);
      CHECK(c.forward - c.backward == x);
    }
  }
  CHECK_FALSE(ShiftCounts::valid(4, 1));
  CHECK_FALSE(ShiftCounts::valid(4, 6));
  CHECK_THROWS_AS(ShiftCounts::of(4, 1), std::invalid_argument);
}

TEST_CASE("total paths") {
  CHECK(total_paths(4, 2) == 4);  // FFFB, FFBF, FBFF, BFFF
  CHECK(total_paths(4, 0) == 6);
  for (int n = 0; n <= 20; ++n) CHECK(total_paths(n, n) == 1);
  CHECK(total_paths(4, 1) == 0);
  CHECK(total_paths(4, -6) == 0);
}

TEST_CASE("eta examples and enumeration oracle") {
  CHECK(eta(4, 0, 1) == 2);  // FFBB, BBFF
  CHECK(eta(4, 0, 2) == 2);  // FBBF, BFFB
  CHECK(eta(4, 0, 3) == 2);  // FBFB, BFBF
  CHECK(eta(4, 4, 0) == 1);
  CHECK(eta(4, 2, 0) == 0);

  for (int n = 1; n <= 12; ++n) {
    const auto oracle = enumerate_feynman_strings(n);
    for (int x = -n; x <= n; ++x) {
      for (int j = 0; j <= n; ++j) {
        const auto it = oracle.find({x, j});
        const long expected = it == oracle.end() ? 0 : it->second;
        CHECK(eta(n, x, j) == expected);
      }
    }
  }
}

TEST_CASE("eta identity: switch-count sums recover the path total, n <= 30") {
  CHECK(eta_identity_check(4, 0));
  for (int n = 1; n <= 30; ++n) {
    for (int x = -n; x <= n; x += 2) CHECK(eta_identity_check(n, x));
  }
}

TEST_CASE("extended counts: examples and double-counting identity") {
  CHECK(extended_count(Letter::B, 2, 0, 1) == 1);   // B*BF
  CHECK(extended_count(Letter::B, 2, 0, 2) == 1);   // B*FB
  CHECK(extended_count(Letter::F, 1, -1, 1) == 1);  // F*B
  CHECK(extended_count(Letter::B, 2, 2, 0) == 0);

  // (B, 4, x=0) group sizes by switch count.
  CHECK(extended_count(Letter::B, 4, 0, 1) == 1);
  CHECK(extended_count(Letter::B, 4, 0, 2) == 2);
  CHECK(extended_count(Letter::B, 4, 0, 3) == 2);
  CHECK(extended_count(Letter::B, 4, 0, 4) == 1);

  for (int n = 0; n <= 30; ++n) {
    for (int x = -n; x <= n; x += 2) {
      BigInt total = 0;
      for (int j = 0; j <= n + 1; ++j) {
        total += extended_count(Letter::B, n, x, j) + extended_count(Letter::F, n, x, j);
      }
      CHECK(total == 2 * total_paths(n, x));
    }
  }
}

TEST_CASE("extended counts agree with exhaustive group enumeration, n <= 12") {
  for (int n = 0; n <= 12; ++n) {
    const auto groups = enumerate_groups(n);
    BigInt seen = 0;
    for (const auto& g : groups) {
      CHECK(extended_count(g.initial, n, g.position, g.switch_count) == g.multiplicity);
      CHECK(parity_sign(g.initial, n, g.position, g.switch_count) == g.parity);
      CHECK(final_coin(g.initial, g.switch_count) == g.final_coin);
      seen += g.multiplicity;
    }
    CHECK(seen == BigInt(1) << (n + 1));
    // No nonzero formula value outside the enumerated groups.
    BigInt formula_total = 0;
    for (int x = -n; x <= n; x += 2) {
      for (int j = 0; j <= n; ++j) {
        formula_total += extended_count(Letter::B, n, x, j) + extended_count(Letter::F, n, x, j);
      }
    }
    CHECK(formula_total == seen);
  }
}

TEST_CASE("parity signs") {
  CHECK(parity_sign(Letter::B, 4, 0, 1) == -1);  // group of B*BBFF, one F->F pair
  for (int n = 0; n <= 10; ++n) CHECK(parity_sign(Letter::B, n, -n, 0) == 1);
  CHECK(parity_sign(Letter::F, 3, -1, 3) == 1);  // group of F*BFB, no F->F pair
  CHECK_THROWS_AS(parity_sign(Letter::B, 2, 2, 0), std::domain_error);
}

TEST_CASE("final coin from first letter and switch count") {
  CHECK(final_coin(Letter::B, 0) == 0);
  CHECK(final_coin(Letter::F, 0) == 1);
  CHECK(final_coin(Letter::B, 3) == 1);
  CHECK(final_coin(Letter::F, 1) == 0);
}

TEST_CASE("duality: swapping letters mirrors the endpoint") {
  for (int n = 0; n <= 20; ++n) {
    for (int x = -n; x <= n; x += 2) {
      for (int j = 0; j <= n; ++j) {
        CHECK(extended_count(Letter::B, n, x, j) == extended_count(Letter::F, n, -x, j));
      }
    }
  }
}
