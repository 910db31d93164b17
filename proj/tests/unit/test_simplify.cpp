#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "simplify.hpp"
#include "support.hpp"

using namespace klcenter;
using klcenter::testing::line1d;
using klcenter::testing::line2d;
using klcenter::testing::random_walk;
using klcenter::testing::uniform_real;
using klcenter::testing::uniform_size;

namespace {

const PolyCurve kWiggle = line2d({{0, 0}, {1, 0.4}, {2, -0.3}, {3, 1.2}, {4, 0.8},
                                  {5, 2.5}, {6, 2.1}, {7, 0.2}, {8, -0.6}, {9, 0.1}});

bool is_subsequence_of(const PolyCurve& sub, const PolyCurve& c) {
  std::size_t k = 0;
  for (const Point& p : c.vertices()) {
    if (k < sub.size() && sub[k] == p) ++k;
  }
  return k == sub.size();
}

}  // namespace

TEST_CASE("discrete min-size examples") {
  const SimplifyResult r = min_size_simplify_discrete(line1d({0, 0.5, 10}), 1.0);
  CHECK(r.complexity == 2);
  CHECK(r.curve.size() == 2);
  CHECK(r.curve[0][0] == doctest::Approx(0.25));
  CHECK(r.curve[1][0] == 10.0);
  CHECK(r.error <= 1.0);

  CHECK(min_size_simplify_discrete(line2d({{0, 0}, {0.5, 0.5}, {-0.5, 0.2}}), 1.0).complexity == 1);

  const SimplifyResult buffer = min_size_simplify_discrete(line1d({-1, 1, -1, 1, -1, 1}), 1.0);
  CHECK(buffer.complexity == 1);
  CHECK(buffer.curve[0][0] == doctest::Approx(0.0));

  const SimplifyResult exact = min_size_simplify_discrete(line1d({1, 1, 2, 2, 2, 1}), 0.0);
  CHECK(exact.curve == line1d({1, 2, 1}));
  CHECK(exact.error == 0.0);

  CHECK_THROWS_AS(min_size_simplify_discrete(line1d({0}), -1.0), std::invalid_argument);
}

TEST_CASE("discrete min-error examples") {
  CHECK(min_error_simplify_discrete(line1d({0, 10, 0, 10}), 2).error == doctest::Approx(5.0));
  const SimplifyResult r = min_error_simplify_discrete(line1d({0, 1, 10, 11}), 2);
  CHECK(r.error == doctest::Approx(0.5));
  REQUIRE(r.curve.size() == 2);
  CHECK(r.curve[0][0] == doctest::Approx(0.5));
  CHECK(r.curve[1][0] == doctest::Approx(10.5));
  CHECK(min_error_simplify_discrete(kWiggle, 10).error == 0.0);
  CHECK(min_error_simplify_discrete(kWiggle, 3).error == doctest::Approx(1.5660459763365826).epsilon(1e-12));
  CHECK_THROWS_AS(min_error_simplify_discrete(kWiggle, 0), std::invalid_argument);
}

TEST_CASE("greedy min-size matches the partition oracle") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t dim = uniform_size(rng, 1, 2);
    const PolyCurve c = random_walk(rng, uniform_size(rng, 1, 10), dim);
    const double delta = uniform_real(rng, 0.0, 2.0);
    const SimplifyResult r = min_size_simplify_discrete(c, delta);
    CHECK(r.complexity == oracle::brute_min_size_partition(c, delta));
    CHECK(r.complexity == r.curve.size());
    CHECK(discrete_frechet(c, r.curve) <= delta + 1e-9);
    CHECK(discrete_frechet(c, r.curve) <= r.error + 1e-12);
  }
}

TEST_CASE("min-error discrete is optimal with a certificate") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const PolyCurve c = random_walk(rng, uniform_size(rng, 1, 10), 2);
    const std::size_t ell = uniform_size(rng, 1, c.size());
    const SimplifyResult r = min_error_simplify_discrete(c, ell);
    CHECK(r.complexity <= ell);
    CHECK(r.error == doctest::Approx(oracle::brute_min_error_partition(c, ell)).epsilon(1e-9));
    const std::vector<double> candidates = discrete_error_candidates(c);
    CHECK(std::is_sorted(candidates.begin(), candidates.end()));
    CHECK(min_size_simplify_discrete(c, r.error).complexity <= ell);
    const auto below = std::lower_bound(candidates.begin(), candidates.end(), r.error - 1e-12);
    if (below != candidates.begin()) {
      CHECK(min_size_simplify_discrete(c, *std::prev(below)).complexity > ell);
    }
  }
}

TEST_CASE("vertex-constrained min-size examples") {
  CHECK(min_size_simplify_continuous_vc(line2d({{0, 0}, {1, 1}, {2, 2}, {5, 5}}), 0.0).complexity == 2);
  const double h = 1.3;
  const PolyCurve spike = line2d({{0, 0}, {1, h}, {2, 0}});
  CHECK(min_size_simplify_continuous_vc(spike, h - 0.01).complexity == 3);
  CHECK(min_size_simplify_continuous_vc(spike, h).complexity == 2);
  const SimplifyResult single = min_size_simplify_continuous_vc(line2d({{4, 2}}), 1.0);
  CHECK(single.curve == line2d({{4, 2}}));
  CHECK(single.error == 0.0);
}

TEST_CASE("vertex-constrained min-size is monotone in delta") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const PolyCurve c = random_walk(rng, uniform_size(rng, 2, 12), 2);
    std::size_t previous = c.size() + 1;
    for (double delta = 0.0; delta <= 4.0; delta += 0.25) {
      const SimplifyResult r = min_size_simplify_continuous_vc(c, delta);
      CHECK(r.complexity <= previous);
      CHECK(r.error <= delta + 1e-9);
      CHECK(is_subsequence_of(r.curve, c));
      previous = r.complexity;
    }
  }
}

TEST_CASE("shortcut path prefers the lexicographically smallest route") {
  // Every vertex lies on one line, so any pair is a valid shortcut.
  const PolyCurve c = line2d({{0, 0}, {1, 0}, {2, 0}, {3, 0}});
  CHECK(shortcut_path(c, 0.0) == std::vector<std::size_t>{0, 3});
  // Both (0,1,3) and (0,2,3) avoid the bump; the smaller one wins.
  const PolyCurve bump = line2d({{0, 0}, {1, 0}, {2, 0}, {2.5, 3}, {3, 0}});
  const std::vector<std::size_t> path = shortcut_path(bump, 0.5);
  CHECK(path.front() == 0);
  CHECK(path.back() == 4);
  CHECK(std::is_sorted(path.begin(), path.end()));
}

TEST_CASE("approx4 min-error examples") {
  CHECK(approx4_min_error_simplify_continuous(line2d({{0, 0}, {1, 1}, {2, 2}, {3, 3}}), 2).error <= 1e-9);
  const double h = 0.9;
  const SimplifyResult spike = approx4_min_error_simplify_continuous(line2d({{0, 0}, {1, h}, {2, 0}}), 2);
  CHECK(std::abs(spike.error - h) <= 1e-9);
  CHECK(spike.complexity == 2);
  const SimplifyResult r = approx4_min_error_simplify_continuous(kWiggle, 4);
  CHECK(r.complexity <= 4);
  CHECK(std::abs(r.error - 0.94385835536656204) <= 1e-8);
  CHECK_THROWS_WITH_AS(approx4_min_error_simplify_continuous(kWiggle, 1),
                       "continuous vertex-constrained simplification needs both endpoints", std::invalid_argument);
  CHECK(approx4_min_error_simplify_continuous(kWiggle, 10).curve == kWiggle);
}

TEST_CASE("approx4 agrees with subset enumeration and keeps the endpoints") {
  std::mt19937 rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    const PolyCurve c = random_walk(rng, uniform_size(rng, 2, 9), 2);
    const std::size_t ell = uniform_size(rng, 2, c.size());
    const SimplifyResult r = approx4_min_error_simplify_continuous(c, ell);
    CHECK(r.complexity <= ell);
    CHECK(r.curve[0] == c[0]);
    CHECK(r.curve[r.curve.size() - 1] == c[c.size() - 1]);
    CHECK(is_subsequence_of(r.curve, c));
    CHECK(std::abs(r.error - oracle::brute_vertex_constrained_error(c, ell)) <= 1e-8);
    // Measured directly, the simplification is within its reported error.
    CHECK(continuous_frechet(c, r.curve) <= r.error + 1e-8);
  }
}

TEST_CASE("approx4 is within four times the weak discrete optimum") {
  // The weak discrete optimum is an upper bound on the weak continuous one.
  std::mt19937 rng(25);
  for (int trial = 0; trial < 40; ++trial) {
    const PolyCurve c = random_walk(rng, uniform_size(rng, 3, 10), 2);
    const std::size_t ell = uniform_size(rng, 2, c.size() - 1);
    const double ours = approx4_min_error_simplify_continuous(c, ell).error;
    const double weak_discrete = min_error_simplify_discrete(c, ell).error;
    CHECK(ours <= 4.0 * weak_discrete + 1e-8);
  }
}

TEST_CASE("vertex-constrained error of a kept index set") {
  const PolyCurve spike = line2d({{0, 0}, {1, 2}, {2, 0}});
  CHECK(vertex_constrained_error(spike, {0, 1, 2}) == 0.0);
  CHECK(std::abs(vertex_constrained_error(spike, {0, 2}) - 2.0) <= 1e-9);
}
