#pragma once

#include <cstddef>
#include <vector>

#include "frechet.hpp"

namespace klcenter {

struct SimplifyResult {
  PolyCurve curve;
  double error = 0.0;
  std::size_t complexity = 0;
};

// Weak simplifications under the discrete Fréchet distance. A simplification
// vertex couples to a contiguous run of input vertices, so they reduce to
// contiguous partitions whose groups are represented by their enclosing-ball
// centers.

/// Fewest vertices with d_DF <= delta (farthest-extension greedy, optimal).
SimplifyResult min_size_simplify_discrete(const PolyCurve& c, double delta);

/// Smallest error reachable with at most ell vertices.
SimplifyResult min_error_simplify_discrete(const PolyCurve& c, std::size_t ell);

/// Sorted, de-duplicated enclosing-ball radii of every contiguous vertex run.
/// The optimal min-error value is always one of them.
std::vector<double> discrete_error_candidates(const PolyCurve& c);

// Vertex-constrained simplifications under the continuous Fréchet distance.

/// Shortcut-graph shortest path: edge (i, j) exists iff the segment c[i]c[j]
/// is within delta of the subcurve c[i..j]. Ties between equally short paths
/// resolve to the lexicographically smallest index sequence.
SimplifyResult min_size_simplify_continuous_vc(const PolyCurve& c, double delta,
                                               double tol = kDefaultTol);

/// Indices into c of the vertices kept by min_size_simplify_continuous_vc.
std::vector<std::size_t> shortcut_path(const PolyCurve& c, double delta);

/// Minimum-error vertex-constrained ell-simplification. Its error is within
/// a factor 4 of the optimal weak ell-simplification error. Requires ell >= 2.
SimplifyResult approx4_min_error_simplify_continuous(const PolyCurve& c, std::size_t ell,
                                                     double tol = kDefaultTol);

/// Error of the vertex-constrained simplification given by kept indices:
/// max over consecutive kept pairs of the segment-to-subcurve distance.
double vertex_constrained_error(const PolyCurve& c, const std::vector<std::size_t>& kept,
                                double tol = kDefaultTol);

}  // namespace klcenter
