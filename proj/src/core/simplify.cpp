#include "simplify.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace klcenter {

SimplifyResult min_size_simplify_discrete(const PolyCurve& c, double delta) {
  if (!(delta >= 0.0)) throw std::invalid_argument("negative delta");
  std::vector<Point> out;
  double error = 0.0;
  EnclosingBallBuilder group;
  Ball last;
  for (const Point& p : c.vertices()) {
    group.add(p);
    if (group.ball().radius > delta + kGeomEps) {
      out.push_back(last.center);
      error = std::max(error, last.radius);
      group.clear();
      group.add(p);
    }
    last = group.ball();
  }
  out.push_back(last.center);
  error = std::max(error, last.radius);
  const std::size_t complexity = out.size();
  return {PolyCurve(c.id(), std::move(out)), error, complexity};
}

std::vector<double> discrete_error_candidates(const PolyCurve& c) {
  std::vector<double> radii;
  radii.reserve(c.size() * (c.size() + 1) / 2);
  EnclosingBallBuilder run;
  for (std::size_t i = 0; i < c.size(); ++i) {
    run.clear();
    for (std::size_t j = i; j < c.size(); ++j) {
      run.add(c[j]);
      radii.push_back(run.ball().radius);
    }
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return radii;
}

SimplifyResult min_error_simplify_discrete(const PolyCurve& c, std::size_t ell) {
  if (ell == 0) throw std::invalid_argument("ell must be positive");
  const std::vector<double> candidates = discrete_error_candidates(c);
  // The largest candidate (one group) is always feasible.
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (min_size_simplify_discrete(c, candidates[mid]).complexity <= ell) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return min_size_simplify_discrete(c, candidates[lo]);
}

namespace {

bool shortcut_ok(const PolyCurve& c, std::size_t i, std::size_t j, double delta) {
  const PolyCurve seg(std::vector<Point>{c[i], c[j]});
  return continuous_frechet_decide(seg, c.subcurve(i, j), delta);
}

PolyCurve pick(const PolyCurve& c, const std::vector<std::size_t>& kept) {
  std::vector<Point> pts;
  pts.reserve(kept.size());
  for (std::size_t k : kept) pts.push_back(c[k]);
  return PolyCurve(c.id(), std::move(pts));
}

}  // namespace

std::vector<std::size_t> shortcut_path(const PolyCurve& c, double delta) {
  if (!(delta >= 0.0)) throw std::invalid_argument("negative delta");
  const std::size_t m = c.size();
  if (m == 1) return {0};
  std::vector<std::vector<char>> edge(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i + 1 < m; ++i) {
    edge[i][i + 1] = 1;
    for (std::size_t j = i + 2; j < m; ++j) edge[i][j] = shortcut_ok(c, i, j, delta) ? 1 : 0;
  }
  // hops[i]: fewest shortcut edges from i to the last vertex.
  constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> hops(m, unreachable);
  hops[m - 1] = 0;
  for (std::size_t i = m - 1; i-- > 0;) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (edge[i][j] && hops[j] != unreachable) hops[i] = std::min(hops[i], hops[j] + 1);
    }
  }
  std::vector<std::size_t> path{0};
  std::size_t i = 0;
  while (i != m - 1) {
    std::size_t next = i + 1;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (edge[i][j] && hops[j] + 1 == hops[i]) {
        next = j;
        break;
      }
    }
    path.push_back(next);
    i = next;
  }
  return path;
}

double vertex_constrained_error(const PolyCurve& c, const std::vector<std::size_t>& kept, double tol) {
  double err = 0.0;
  for (std::size_t k = 0; k + 1 < kept.size(); ++k) {
    const std::size_t i = kept[k], j = kept[k + 1];
    if (j <= i || j >= c.size()) throw std::invalid_argument("kept indices must increase");
    if (j == i + 1) continue;
    err = std::max(err, segment_curve_frechet(Segment{c[i], c[j]}, c.subcurve(i, j), tol));
  }
  return err;
}

SimplifyResult min_size_simplify_continuous_vc(const PolyCurve& c, double delta, double tol) {
  if (c.size() == 1) return {c, 0.0, 1};
  const std::vector<std::size_t> kept = shortcut_path(c, delta);
  return {pick(c, kept), vertex_constrained_error(c, kept, tol), kept.size()};
}

SimplifyResult approx4_min_error_simplify_continuous(const PolyCurve& c, std::size_t ell, double tol) {
  if (ell < 2) {
    throw std::invalid_argument("continuous vertex-constrained simplification needs both endpoints");
  }
  const std::size_t m = c.size();
  if (m <= ell) return {c, 0.0, m};

  std::vector<std::vector<double>> cost(m, std::vector<double>(m, 0.0));
  std::vector<double> candidates{0.0};
  for (std::size_t i = 0; i + 2 < m; ++i) {
    for (std::size_t j = i + 2; j < m; ++j) {
      cost[i][j] = segment_curve_frechet(Segment{c[i], c[j]}, c.subcurve(i, j), tol);
      candidates.push_back(cost[i][j]);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // The direct endpoint shortcut makes the largest candidate feasible.
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (shortcut_path(c, candidates[mid]).size() <= ell) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const std::vector<std::size_t> kept = shortcut_path(c, candidates[lo]);
  double err = 0.0;
  for (std::size_t k = 0; k + 1 < kept.size(); ++k) err = std::max(err, cost[kept[k]][kept[k + 1]]);
  return {pick(c, kept), err, kept.size()};
}

}  // namespace klcenter
