#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cluster.hpp"
#include "frechet.hpp"
#include "hardness.hpp"
#include "oracle.hpp"
#include "simplify.hpp"
#include "support.hpp"

using namespace klcenter;
using namespace klcenter::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome discrete_exactness() {
  Outcome o;
  std::mt19937 rng(1001);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = trial % 2 + 1;
    const PolyCurve a = random_curve(rng, uniform_size(rng, 1, 6), dim);
    const PolyCurve b = random_curve(rng, uniform_size(rng, 1, 6), dim);
    worst = std::max(worst, std::abs(discrete_frechet(a, b) - oracle::brute_discrete_frechet(a, b)));
  }
  if (worst > 1e-12) o.fail("max deviation " + std::to_string(worst));
  return o;
}

Outcome continuous_consistency() {
  Outcome o;
  std::mt19937 rng(1002);
  for (int trial = 0; trial < 100 && o.ok; ++trial) {
    const PolyCurve a = random_curve(rng, uniform_size(rng, 1, 15), 2);
    const PolyCurve b = random_curve(rng, uniform_size(rng, 1, 15), 2);
    const double v = continuous_frechet(a, b);
    bool seen_true = false;
    for (int step = 0; step <= 40; ++step) {
      const bool yes = continuous_frechet_decide(a, b, v * (0.5 + step / 40.0));
      if (seen_true && !yes) o.fail("decide not monotone on pair " + std::to_string(trial));
      seen_true = seen_true || yes;
    }
    if (!continuous_frechet_decide(a, b, v)) o.fail("decide false at the value on pair " + std::to_string(trial));
    if (v >= 1e-6 && continuous_frechet_decide(a, b, v - 1e-6)) {
      o.fail("decide true below the value on pair " + std::to_string(trial));
    }
    if (v > discrete_frechet(a, b) + 1e-6) o.fail("continuous above discrete on pair " + std::to_string(trial));
  }
  return o;
}

Outcome simplification_optimality() {
  Outcome o;
  std::mt19937 rng(1003);
  for (int trial = 0; trial < 100 && o.ok; ++trial) {
    const PolyCurve c = random_walk(rng, uniform_size(rng, 1, 10), 2);
    const double delta = uniform_real(rng, 0.0, 2.0);
    if (min_size_simplify_discrete(c, delta).complexity != oracle::brute_min_size_partition(c, delta)) {
      o.fail("greedy size differs on curve " + std::to_string(trial));
    }
    const std::size_t ell = uniform_size(rng, 1, c.size());
    const SimplifyResult r = min_error_simplify_discrete(c, ell);
    if (min_size_simplify_discrete(c, r.error).complexity > ell) {
      o.fail("infeasible at the reported error on curve " + std::to_string(trial));
    }
    const std::vector<double> candidates = discrete_error_candidates(c);
    const auto at = std::lower_bound(candidates.begin(), candidates.end(), r.error - 1e-12);
    if (at != candidates.begin() && min_size_simplify_discrete(c, *std::prev(at)).complexity <= ell) {
      o.fail("feasible below the reported error on curve " + std::to_string(trial));
    }
  }
  return o;
}

const ScsInstance kThreeStrings{{"ABB", "BBA", "ABA"}, 4};

Outcome one_d_example() {
  Outcome o;
  const HardInstance hi = gen_1d(kThreeStrings, Metric::Discrete);
  const PolyCurve center = center_from_superstring("ABBA", hi);
  const Verification at_one = verify_instance(hi, center, 1.0, Metric::Discrete);
  if (!at_one.ok || at_one.radius != 1.0) o.fail("radius " + std::to_string(at_one.radius) + " at delta 1");
  if (verify_instance(hi, center, 0.99, Metric::Discrete).ok) o.fail("verifies at delta 0.99");
  return o;
}

Outcome two_d_completeness() {
  Outcome o;
  const HardInstance hi = gen_2d(kThreeStrings, Metric::Discrete);
  if (hi.s != 10 || hi.ell != 132) o.fail("s = " + std::to_string(hi.s) + ", ell = " + std::to_string(hi.ell));
  const PolyCurve center = center_from_superstring("ABBA", hi);
  if (!verify_instance(hi, center, 1.0, Metric::Discrete).ok) o.fail("discrete center above 1");
  const std::string back = extract_superstring_2d_discrete(center, 2.59, hi.s);
  if (back.size() > 4) o.fail("extracted '" + back + "' longer than 4");
  for (const std::string& s : kThreeStrings.strings) {
    if (!is_subsequence(s, back)) o.fail("extracted '" + back + "' misses " + s);
  }
  const HardInstance hc = gen_2d(kThreeStrings, Metric::Continuous);
  if (hc.s != 15) o.fail("continuous s = " + std::to_string(hc.s));
  if (!verify_instance(hc, center_from_superstring("ABBA", hc), 1.0, Metric::Continuous, 1e-6).ok) {
    o.fail("continuous center above 1");
  }
  return o;
}

Outcome gap_geometry() {
  Outcome o;
  const GadgetLayout2D& L = GadgetLayout2D::standard();
  const double side = 3.0 * std::sqrt(3.0);
  for (int a = 1; a <= 3; ++a) {
    for (int b = a + 1; b <= 3; ++b) {
      const double d = distance(L.at(a, 3), L.at(b, 3));
      if (std::abs(d - side) > 1e-12) o.fail("outer points at " + std::to_string(d));
    }
  }
  const Segment base{L.at(2, 3), L.at(3, 3)};
  const double height = point_segment_distance(L.at(1, 3), base);
  if (height != 4.5) o.fail("triangle height " + std::to_string(height));
  return o;
}

Outcome clustering_bound() {
  Outcome o;
  std::mt19937 rng(1007);
  const ClusterParams p{3, 5, Metric::Discrete, kDefaultTol};
  for (int trial = 0; trial < 50 && o.ok; ++trial) {
    std::vector<PolyCurve> centers;
    for (int i = 0; i < 3; ++i) centers.push_back(random_curve(rng, 5, 2, 20.0));
    std::vector<PolyCurve> curves;
    for (std::size_t i = 0; i < 30; ++i) curves.push_back(plant(rng, centers[i % 3], 0.1));
    const ClusterResult g = gonzalez_kl_center(curves, p);
    if (g.radius > 0.3 + 1e-9) o.fail("gonzalez radius " + std::to_string(g.radius));
    const ClusterResult s = kl_center_search(curves, p);
    if (s.radius > 0.3 + 1e-9) o.fail("search radius " + std::to_string(s.radius));
    if (s.decider_calls > 2) o.fail("decider calls " + std::to_string(s.decider_calls));
  }
  return o;
}

std::vector<std::string> strings_with(int a_count, int b_count) {
  std::string s(a_count, 'A');
  s.append(b_count, 'B');
  std::vector<std::string> out;
  do out.push_back(s);
  while (std::next_permutation(s.begin(), s.end()));
  return out;
}

Outcome meb_reduction() {
  Outcome o;
  std::mt19937 rng(1008);
  int yes_instances = 0;
  for (int trial = 0; trial < 20 && o.ok; ++trial) {
    ScsInstance inst;
    std::size_t total = 0;
    const std::size_t count = uniform_size(rng, 2, 4);
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t len = uniform_size(rng, 1, std::min<std::size_t>(5, 14 - total - (count - i - 1)));
      std::string s;
      for (std::size_t k = 0; k < len; ++k) s += rng() % 2 ? 'A' : 'B';
      inst.strings.push_back(s);
      total += len;
    }
    const int shortest = static_cast<int>(oracle::brute_scs(inst.strings).size());
    inst.t = std::max(1, shortest - trial % 2);
    const bool expect = shortest <= inst.t;
    yes_instances += expect;

    bool found = false;
    for (const auto& [j, jp] : meb_index_pairs(inst.t)) {
      const HardInstance hi = gen_meb(inst, j, jp);
      for (const std::string& s : strings_with(j, jp)) {
        const PolyCurve center = center_from_superstring(s, hi);
        if (!verify_instance(hi, center, 1.0, Metric::Discrete).ok) continue;
        found = true;
        if (!verify_instance(hi, center, 1.0, Metric::Continuous, 1e-6).ok) {
          o.fail("center " + s + " fails under the continuous metric");
        }
      }
    }
    if (found != expect) o.fail("instance " + std::to_string(trial) + " disagrees with brute force");
  }
  if (o.ok && (yes_instances == 0 || yes_instances == 20)) o.fail("corpus lacks yes or no instances");
  if (o.ok) o.detail = std::to_string(yes_instances) + " of 20 instances have a short supersequence";
  return o;
}

double cpu_seconds() { return static_cast<double>(std::clock()) / CLOCKS_PER_SEC; }

double time_per_call(const PolyCurve& a, const PolyCurve& b) {
  int calls = 0;
  const double start = cpu_seconds();
  volatile double sink = 0.0;
  do {
    sink = sink + discrete_frechet(a, b);
    ++calls;
  } while (cpu_seconds() - start < 0.01);
  return (cpu_seconds() - start) / calls;
}

Outcome runtime_growth() {
  Outcome o;
  std::mt19937 rng(1009);
  std::vector<std::pair<PolyCurve, PolyCurve>> pairs;
  std::vector<double> xs;
  for (std::size_t m = 64; m <= 512; m *= 2) {
    pairs.emplace_back(random_walk(rng, m, 2), random_walk(rng, m, 2));
    xs.push_back(std::log2(static_cast<double>(m)));
  }
  // Sizes are interleaved within each round so drift hits all of them alike.
  std::vector<double> best(pairs.size(), 1e300);
  for (int round = 0; round < 20; ++round) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      best[i] = std::min(best[i], time_per_call(pairs[i].first, pairs[i].second));
    }
  }
  std::vector<double> ys;
  for (double t : best) ys.push_back(std::log2(t));
  // Least-squares slope of log time against log m.
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  char buf[64];
  std::snprintf(buf, sizeof buf, "growth exponent %.2f", exponent);
  o.detail = buf;
  if (exponent > 2.3) o.fail(buf);
  return o;
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "discrete Frechet exactness", 5.0, discrete_exactness},
      {2, "continuous Frechet consistency", 30.0, continuous_consistency},
      {3, "simplification optimality", 10.0, simplification_optimality},
      {4, "1D reduction example", 1.0, one_d_example},
      {5, "2D completeness and extraction", 30.0, two_d_completeness},
      {6, "gap geometry", 1.0, gap_geometry},
      {7, "clustering bound", 60.0, clustering_bound},
      {8, "MEB reduction", 60.0, meb_reduction},
      {9, "discrete Frechet runtime growth", 60.0, runtime_growth},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const Clock::time_point start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    if (o.ok && elapsed >= c.budget_seconds) o.fail("over time budget");
    failures += !o.ok;
    std::printf("%s %d %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.number, c.name, elapsed,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
