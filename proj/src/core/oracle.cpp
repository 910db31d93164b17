#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include "geometry.hpp"

namespace klcenter::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double brute_discrete_frechet(const PolyCurve& a, const PolyCurve& b) {
  if (a.size() * b.size() > 36) throw std::length_error("brute_discrete_frechet: |a|*|b| > 36");
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  const std::size_t m = a.size(), n = b.size();
  double best = kInf;
  // Depth-first enumeration of every coupling, tracking the running maximum.
  std::function<void(std::size_t, std::size_t, double)> walk = [&](std::size_t i, std::size_t j, double worst) {
    worst = std::max(worst, distance(a[i], b[j]));
    if (i == m - 1 && j == n - 1) {
      best = std::min(best, worst);
      return;
    }
    if (i + 1 < m) walk(i + 1, j, worst);
    if (j + 1 < n) walk(i, j + 1, worst);
    if (i + 1 < m && j + 1 < n) walk(i + 1, j + 1, worst);
  };
  walk(0, 0, 0.0);
  return best;
}

double brute_enclosing_radius(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  const std::size_t d = points.front().dim();
  if (d == 1) {
    auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                        [](const Point& p, const Point& q) { return p[0] < q[0]; });
    return ((*hi)[0] - (*lo)[0]) / 2.0;
  }
  if (d != 2) throw std::invalid_argument("brute_enclosing_radius supports d <= 2");
  if (points.size() == 1) return 0.0;
  double best = kInf;
  auto try_ball = [&](double cx, double cy, double r) {
    if (r >= best) return;
    for (const Point& p : points) {
      if (std::hypot(p[0] - cx, p[1] - cy) > r + 1e-9) return;
    }
    best = r;
  };
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double cx = (points[i][0] + points[j][0]) / 2.0;
      const double cy = (points[i][1] + points[j][1]) / 2.0;
      try_ball(cx, cy, std::hypot(points[i][0] - cx, points[i][1] - cy));
      for (std::size_t k = j + 1; k < n; ++k) {
        const double ax = points[i][0], ay = points[i][1];
        const double bx = points[j][0], by = points[j][1];
        const double qx = points[k][0], qy = points[k][1];
        const double den = 2.0 * (ax * (by - qy) + bx * (qy - ay) + qx * (ay - by));
        if (std::abs(den) < 1e-12) continue;
        const double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, q2 = qx * qx + qy * qy;
        const double ux = (a2 * (by - qy) + b2 * (qy - ay) + q2 * (ay - by)) / den;
        const double uy = (a2 * (qx - bx) + b2 * (ax - qx) + q2 * (bx - ax)) / den;
        try_ball(ux, uy, std::hypot(ax - ux, ay - uy));
      }
    }
  }
  return best;
}

namespace {

double group_radius(const PolyCurve& c, std::size_t first, std::size_t last) {
  std::vector<Point> pts(c.vertices().begin() + static_cast<std::ptrdiff_t>(first),
                         c.vertices().begin() + static_cast<std::ptrdiff_t>(last) + 1);
  return brute_enclosing_radius(pts);
}

// Calls visit(groups) for every cut mask of the m-1 gaps.
template <typename Visit>
void for_each_partition(const PolyCurve& c, Visit visit) {
  const std::size_t m = c.size();
  const std::size_t masks = std::size_t{1} << (m - 1);
  for (std::size_t mask = 0; mask < masks; ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    std::size_t start = 0;
    for (std::size_t gap = 0; gap + 1 < m; ++gap) {
      if (mask & (std::size_t{1} << gap)) {
        groups.emplace_back(start, gap);
        start = gap + 1;
      }
    }
    groups.emplace_back(start, m - 1);
    visit(groups);
  }
}

}  // namespace

std::size_t brute_min_size_partition(const PolyCurve& c, double delta) {
  if (c.size() > 12) throw std::length_error("brute_min_size_partition: m > 12");
  std::size_t best = c.size();
  for_each_partition(c, [&](const auto& groups) {
    if (groups.size() >= best) return;
    for (const auto& [f, l] : groups) {
      if (group_radius(c, f, l) > delta + 1e-9) return;
    }
    best = groups.size();
  });
  return best;
}

double brute_min_error_partition(const PolyCurve& c, std::size_t ell) {
  if (c.size() > 12) throw std::length_error("brute_min_error_partition: m > 12");
  double best = kInf;
  for_each_partition(c, [&](const auto& groups) {
    if (groups.size() > ell) return;
    double worst = 0.0;
    for (const auto& [f, l] : groups) worst = std::max(worst, group_radius(c, f, l));
    best = std::min(best, worst);
  });
  return best;
}

std::string brute_scs(const std::vector<std::string>& strings) {
  std::size_t total = 0;
  for (const std::string& s : strings) total += s.size();
  if (total > 20) throw std::length_error("brute_scs: total length > 20");
  using State = std::vector<std::size_t>;
  const State start(strings.size(), 0);
  auto done = [&](const State& st) {
    for (std::size_t i = 0; i < st.size(); ++i) {
      if (st[i] != strings[i].size()) return false;
    }
    return true;
  };
  std::map<State, std::pair<State, char>> parent;
  std::deque<State> queue{start};
  parent[start] = {start, '\0'};
  while (!queue.empty()) {
    State st = queue.front();
    queue.pop_front();
    if (done(st)) {
      std::string out;
      while (st != start) {
        const auto& [prev, c] = parent[st];
        out.push_back(c);
        st = prev;
      }
      std::reverse(out.begin(), out.end());
      return out;
    }
    for (char c : {'A', 'B'}) {
      State next = st;
      for (std::size_t i = 0; i < next.size(); ++i) {
        if (next[i] < strings[i].size() && strings[i][next[i]] == c) ++next[i];
      }
      if (next == st || parent.count(next)) continue;
      parent[next] = {st, c};
      queue.push_back(std::move(next));
    }
  }
  return {};
}

double brute_one_center_radius(std::span<const PolyCurve> curves, std::size_t ell,
                               std::span<const Point> candidates, Metric metric, double tol) {
  if (candidates.empty() || ell == 0) throw std::invalid_argument("need candidates and ell >= 1");
  if (std::pow(static_cast<double>(candidates.size()), static_cast<double>(ell)) > 1e6) {
    throw std::length_error("brute_one_center_radius: |candidates|^ell > 1e6");
  }
  double best = kInf;
  std::vector<std::size_t> digits;
  for (std::size_t len = 1; len <= ell; ++len) {
    digits.assign(len, 0);
    while (true) {
      std::vector<Point> pts;
      pts.reserve(len);
      for (std::size_t d : digits) pts.push_back(candidates[d]);
      const PolyCurve center(std::move(pts));
      double worst = 0.0;
      for (const PolyCurve& c : curves) {
        worst = std::max(worst, frechet_distance(metric, c, center, tol));
        if (worst >= best) break;
      }
      best = std::min(best, worst);
      std::size_t pos = 0;
      while (pos < len && ++digits[pos] == candidates.size()) digits[pos++] = 0;
      if (pos == len) break;
    }
  }
  return best;
}

double brute_vertex_constrained_error(const PolyCurve& c, std::size_t ell, double tol) {
  const std::size_t m = c.size();
  if (m > 16) throw std::length_error("brute_vertex_constrained_error: m > 16");
  if (ell < 2) throw std::invalid_argument("ell must be at least 2");
  if (m <= 2) return 0.0;
  // Cache segment-to-subcurve distances; enumerate interior subsets.
  std::vector<std::vector<double>> cost(m, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 2; j < m; ++j) {
      cost[i][j] = segment_curve_frechet(Segment{c[i], c[j]}, c.subcurve(i, j), tol);
    }
  }
  double best = kInf;
  const std::size_t interior = m - 2;
  for (std::size_t mask = 0; mask < (std::size_t{1} << interior); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) + 2 > ell) continue;
    double worst = 0.0;
    std::size_t prev = 0;
    for (std::size_t k = 0; k < interior; ++k) {
      if (mask & (std::size_t{1} << k)) {
        worst = std::max(worst, cost[prev][k + 1]);
        prev = k + 1;
      }
    }
    worst = std::max(worst, cost[prev][m - 1]);
    best = std::min(best, worst);
  }
  return best;
}

double sampled_frechet(const PolyCurve& a, const PolyCurve& b, double spacing) {
  if (!(spacing > 0.0)) throw std::invalid_argument("spacing must be positive");
  auto resample = [spacing](const PolyCurve& c) {
    std::vector<Point> out{c[0]};
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      const double len = distance(c[i], c[i + 1]);
      const auto pieces = static_cast<std::size_t>(std::max(1.0, std::ceil(len / spacing)));
      for (std::size_t k = 1; k <= pieces; ++k) {
        out.push_back(lerp(c[i], c[i + 1], static_cast<double>(k) / static_cast<double>(pieces)));
      }
    }
    return PolyCurve(std::move(out));
  };
  return discrete_frechet(resample(a), resample(b));
}

}  // namespace klcenter::oracle
