#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "frechet.hpp"

namespace klcenter {

struct ClusterParams {
  std::size_t k = 1;
  std::size_t ell = 2;
  Metric metric = Metric::Discrete;
  double tol = kDefaultTol;
};

struct ClusterResult {
  std::vector<PolyCurve> centers;
  std::vector<std::size_t> assignment;  // input index -> center index
  double radius = 0.0;
  std::vector<double> history;          // radius after each added center
  std::vector<std::size_t> picked;      // input index each center was built from
  std::size_t decider_calls = 0;        // set by kl_center_search
};

struct ClusteringCost {
  double radius = 0.0;
  std::vector<std::size_t> assignment;
};

/// Throws std::invalid_argument unless k >= 1, ell >= 1 (>= 2 for the
/// continuous metric) and tol > 0.
void validate(const ClusterParams& p);

/// Max over inputs of the distance to the nearest center, with the
/// nearest-center assignment (ties go to the lower center index).
ClusteringCost clustering_cost(std::span<const PolyCurve> curves, std::span<const PolyCurve> centers,
                               Metric metric, double tol = kDefaultTol);

/// Farthest-first traversal that adds an ell-simplification of each picked
/// curve: exact min-error (discrete) or the 4-approximate vertex-constrained
/// one (continuous). Radius is within (c+2) of optimal, c = 1 resp. 4.
///
/// The first pick is input 0; later picks maximize the distance to the
/// current centers with ties broken toward the lower index. The loop stops
/// early once the farthest curve is already a picked one, since a second
/// copy of its simplification cannot lower the radius.
ClusterResult gonzalez_kl_center(std::span<const PolyCurve> curves, const ClusterParams& p);

/// Approximate decider. Runs the same traversal with min-size
/// delta-simplifications and answers std::nullopt ("no", optimum > delta)
/// when a simplification needs more than ell vertices or the final radius
/// exceeds 3 delta. Otherwise the clustering has radius <= 3 delta.
///
/// For the continuous metric the simplification is vertex-constrained, so a
/// "no" is relative to vertex-constrained centers.
std::optional<ClusterResult> kl_center_decide(std::span<const PolyCurve> curves,
                                              const ClusterParams& p, double delta);

/// Decider ladder delta_i = 3^i alpha / c1 seeded by the Gonzalez cost alpha
/// (c1 = 3 discrete, 6 continuous). Returns the first accepted clustering,
/// or the Gonzalez one when that is strictly better.
ClusterResult kl_center_search(std::span<const PolyCurve> curves, const ClusterParams& p);

/// c1 of the Gonzalez seed for a metric.
double seed_approximation_factor(Metric metric);

}  // namespace klcenter
