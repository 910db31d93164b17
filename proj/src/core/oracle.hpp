#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "frechet.hpp"

// Exhaustive reference implementations. Every routine has a hard size
// guard and throws std::length_error instead of degrading.
namespace klcenter::oracle {

/// Minimum over all monotone couplings of the largest matched distance.
/// Guard: |a| * |b| <= 36.
double brute_discrete_frechet(const PolyCurve& a, const PolyCurve& b);

/// Enclosing radius from all pair-midpoint and triple-circumcenter balls
/// (d <= 2), or half the range (d = 1).
double brute_enclosing_radius(std::span<const Point> points);

/// Fewest contiguous groups with enclosing radius <= delta, by trying every
/// cut set. Guard: m <= 12.
std::size_t brute_min_size_partition(const PolyCurve& c, double delta);

/// Smallest max-group radius over all partitions into at most ell
/// contiguous groups. Guard: m <= 12.
double brute_min_error_partition(const PolyCurve& c, std::size_t ell);

/// A shortest common supersequence, breadth-first over prefix-length
/// tuples (A explored before B). Guard: total length <= 20.
std::string brute_scs(const std::vector<std::string>& strings);

/// Best radius of a center with at most ell vertices drawn from candidates.
/// Guard: |candidates|^ell <= 1e6.
double brute_one_center_radius(std::span<const PolyCurve> curves, std::size_t ell,
                               std::span<const Point> candidates, Metric metric,
                               double tol = kDefaultTol);

/// Smallest vertex-constrained error over endpoint-anchored vertex
/// subsequences of size <= ell. Guard: m <= 16.
double brute_vertex_constrained_error(const PolyCurve& c, std::size_t ell, double tol = kDefaultTol);

/// Discrete Fréchet distance between dense resamplings of both curves
/// (every vertex kept, edges cut into pieces no longer than spacing). It
/// bounds d_F from above and converges to it as spacing shrinks.
double sampled_frechet(const PolyCurve& a, const PolyCurve& b, double spacing);

}  // namespace klcenter::oracle
