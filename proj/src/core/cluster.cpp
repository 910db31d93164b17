#include "cluster.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "simplify.hpp"

namespace klcenter {

void validate(const ClusterParams& p) {
  if (p.k == 0) throw std::invalid_argument("k must be positive");
  if (p.ell == 0) throw std::invalid_argument("ell must be positive");
  if (p.metric == Metric::Continuous && p.ell < 2) {
    throw std::invalid_argument("continuous clustering needs ell >= 2");
  }
  if (!(p.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

namespace {

void validate_inputs(std::span<const PolyCurve> curves) {
  if (curves.empty()) throw std::invalid_argument("no input curves");
  const std::size_t d = curves.front().dim();
  for (const PolyCurve& c : curves) {
    if (c.dim() != d) throw std::invalid_argument("input curves differ in dimension");
  }
}

// A simplification step returns nullopt to abort the traversal.
using Simplifier = std::function<std::optional<PolyCurve>(const PolyCurve&)>;

std::optional<ClusterResult> traverse(std::span<const PolyCurve> curves, const ClusterParams& p,
                                      const Simplifier& simplify) {
  const std::size_t n = curves.size();
  ClusterResult result;
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  result.assignment.assign(n, 0);
  std::vector<char> picked(n, 0);
  std::size_t next = 0;
  for (std::size_t iter = 0; iter < p.k; ++iter) {
    if (picked[next]) break;
    std::optional<PolyCurve> center = simplify(curves[next]);
    if (!center) return std::nullopt;
    picked[next] = 1;
    result.picked.push_back(next);
    const std::size_t index = result.centers.size();
    result.centers.push_back(std::move(*center));
    result.centers.back().set_id("center" + std::to_string(index));

    double radius = 0.0;
    std::size_t farthest = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = frechet_distance(p.metric, result.centers.back(), curves[i], p.tol);
      if (d < nearest[i]) {
        nearest[i] = d;
        result.assignment[i] = index;
      }
      if (nearest[i] > radius) {
        radius = nearest[i];
        farthest = i;
      }
    }
    result.history.push_back(radius);
    result.radius = radius;
    next = farthest;
    if (radius == 0.0) break;
  }
  return result;
}

}  // namespace

ClusteringCost clustering_cost(std::span<const PolyCurve> curves, std::span<const PolyCurve> centers,
                               Metric metric, double tol) {
  if (centers.empty()) throw std::invalid_argument("empty center set");
  ClusteringCost cost;
  cost.assignment.resize(curves.size());
  for (std::size_t i = 0; i < curves.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < centers.size(); ++j) {
      const double d = frechet_distance(metric, centers[j], curves[i], tol);
      if (d < best) {
        best = d;
        cost.assignment[i] = j;
      }
    }
    cost.radius = std::max(cost.radius, best);
  }
  return cost;
}

ClusterResult gonzalez_kl_center(std::span<const PolyCurve> curves, const ClusterParams& p) {
  validate(p);
  validate_inputs(curves);
  Simplifier simplify = [&p](const PolyCurve& c) -> std::optional<PolyCurve> {
    if (p.metric == Metric::Discrete) return min_error_simplify_discrete(c, p.ell).curve;
    return approx4_min_error_simplify_continuous(c, p.ell, p.tol).curve;
  };
  return *traverse(curves, p, simplify);
}

std::optional<ClusterResult> kl_center_decide(std::span<const PolyCurve> curves, const ClusterParams& p,
                                              double delta) {
  validate(p);
  validate_inputs(curves);
  if (!(delta >= 0.0)) throw std::invalid_argument("negative delta");
  Simplifier simplify = [&p, delta](const PolyCurve& c) -> std::optional<PolyCurve> {
    SimplifyResult s = p.metric == Metric::Discrete ? min_size_simplify_discrete(c, delta)
                                                    : min_size_simplify_continuous_vc(c, delta, p.tol);
    if (s.complexity > p.ell) return std::nullopt;
    return std::move(s.curve);
  };
  std::optional<ClusterResult> result = traverse(curves, p, simplify);
  if (result && result->radius > 3.0 * delta + p.tol) return std::nullopt;
  return result;
}

double seed_approximation_factor(Metric metric) { return metric == Metric::Discrete ? 3.0 : 6.0; }

ClusterResult kl_center_search(std::span<const PolyCurve> curves, const ClusterParams& p) {
  ClusterResult seed = gonzalez_kl_center(curves, p);
  const double alpha = seed.radius;
  const double c1 = seed_approximation_factor(p.metric);
  constexpr int kMaxSteps = 200;
  double delta = alpha / c1;
  for (int i = 0; i < kMaxSteps; ++i, delta *= 3.0) {
    std::optional<ClusterResult> accepted = kl_center_decide(curves, p, delta);
    if (!accepted) {
      if (delta == 0.0) break;
      continue;
    }
    accepted->decider_calls = static_cast<std::size_t>(i) + 1;
    if (seed.radius < accepted->radius) {
      seed.decider_calls = accepted->decider_calls;
      return seed;
    }
    return std::move(*accepted);
  }
  if (alpha == 0.0) {
    seed.decider_calls = 1;
    return seed;
  }
  throw std::runtime_error("decider ladder did not terminate");
}

}  // namespace klcenter
