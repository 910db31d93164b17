#include "frechet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace klcenter {

PolyCurve::PolyCurve(std::string id, std::vector<Point> vertices)
    : id_(std::move(id)), vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("curve '" + id_ + "' has no vertices");
  const std::size_t d = vertices_.front().dim();
  if (d == 0) throw std::invalid_argument("curve '" + id_ + "' has zero-dimensional vertices");
  for (const Point& p : vertices_) {
    if (p.dim() != d) throw std::invalid_argument("curve '" + id_ + "' mixes dimensions");
    for (double c : p.coords()) {
      if (!std::isfinite(c)) throw std::invalid_argument("curve '" + id_ + "' has a non-finite coordinate");
    }
  }
}

PolyCurve PolyCurve::subcurve(std::size_t first, std::size_t last) const {
  if (first > last || last >= vertices_.size()) throw std::out_of_range("subcurve range");
  return PolyCurve(id_, std::vector<Point>(vertices_.begin() + static_cast<std::ptrdiff_t>(first),
                                           vertices_.begin() + static_cast<std::ptrdiff_t>(last) + 1));
}

namespace {

void require_same_dim(const PolyCurve& a, const PolyCurve& b) {
  if (a.size() == 0 || b.size() == 0) throw std::invalid_argument("empty curve");
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

double discrete_frechet(const PolyCurve& a, const PolyCurve& b) {
  require_same_dim(a, b);
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  std::vector<double> prev(n), cur(n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d = distance(a[i], b[j]);
      double best;
      if (i == 0 && j == 0) {
        best = 0.0;
      } else if (i == 0) {
        best = cur[j - 1];
      } else if (j == 0) {
        best = prev[0];
      } else {
        best = std::min({prev[j], prev[j - 1], cur[j - 1]});
      }
      cur[j] = std::max(best, d);
    }
    std::swap(prev, cur);
  }
  return prev[n - 1];
}

std::pair<double, Alignment> discrete_frechet_alignment(const PolyCurve& a, const PolyCurve& b) {
  require_same_dim(a, b);
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> table(m * n, inf);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return table[i * n + j]; };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double best = (i == 0 && j == 0) ? 0.0 : inf;
      if (i > 0) best = std::min(best, at(i - 1, j));
      if (j > 0) best = std::min(best, at(i, j - 1));
      if (i > 0 && j > 0) best = std::min(best, at(i - 1, j - 1));
      at(i, j) = std::max(best, distance(a[i], b[j]));
    }
  }
  Alignment path;
  std::size_t i = m - 1, j = n - 1;
  path.emplace_back(i, j);
  while (i > 0 || j > 0) {
    // Prefer the diagonal, then either axis; any predecessor with the
    // minimal value keeps the bottleneck optimal.
    std::size_t ni = i, nj = j;
    double best = inf;
    if (i > 0 && j > 0 && at(i - 1, j - 1) < best) best = at(i - 1, j - 1), ni = i - 1, nj = j - 1;
    if (i > 0 && at(i - 1, j) < best) best = at(i - 1, j), ni = i - 1, nj = j;
    if (j > 0 && at(i, j - 1) < best) best = at(i, j - 1), ni = i, nj = j - 1;
    i = ni;
    j = nj;
    path.emplace_back(i, j);
  }
  std::reverse(path.begin(), path.end());
  return {at(m - 1, n - 1), std::move(path)};
}

FreeInterval free_interval(const Point& p, const Point& a, const Point& b, double radius) {
  // |a + t(b-a) - p|^2 <= radius^2 as a quadratic in t.
  double qa = 0.0, qb = 0.0, qc = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const double u = b[i] - a[i];
    const double w = a[i] - p[i];
    qa += u * u;
    qb += u * w;
    qc += w * w;
  }
  qc -= radius * radius;
  if (qa == 0.0) return qc <= 0.0 ? FreeInterval{0.0, 1.0} : FreeInterval{};
  const double disc = qb * qb - qa * qc;
  if (disc < 0.0) return {};
  const double root = std::sqrt(disc);
  const double lo = std::max(0.0, (-qb - root) / qa);
  const double hi = std::min(1.0, (-qb + root) / qa);
  if (lo > hi) return {};
  return {lo, hi};
}

FreeSpaceDiagram build_free_space(const PolyCurve& a, const PolyCurve& b, double delta) {
  require_same_dim(a, b);
  if (!(delta >= 0.0)) throw std::invalid_argument("negative delta");
  FreeSpaceDiagram fsd;
  fsd.delta = delta;
  fsd.m = a.size();
  fsd.n = b.size();
  const double r = delta + kGeomEps;
  fsd.start_free = distance(a[0], b[0]) <= r;
  fsd.end_free = distance(a[fsd.m - 1], b[fsd.n - 1]) <= r;
  if (fsd.n > 1) {
    fsd.vertical.resize(fsd.m * (fsd.n - 1));
    for (std::size_t i = 0; i < fsd.m; ++i) {
      for (std::size_t j = 0; j + 1 < fsd.n; ++j) {
        fsd.vertical[i * (fsd.n - 1) + j] = free_interval(a[i], b[j], b[j + 1], r);
      }
    }
  }
  if (fsd.m > 1) {
    fsd.horizontal.resize((fsd.m - 1) * fsd.n);
    for (std::size_t i = 0; i + 1 < fsd.m; ++i) {
      for (std::size_t j = 0; j < fsd.n; ++j) {
        fsd.horizontal[i * fsd.n + j] = free_interval(b[j], a[i], a[i + 1], r);
      }
    }
  }
  return fsd;
}

bool monotone_path_exists(const FreeSpaceDiagram& fsd) {
  if (!fsd.start_free || !fsd.end_free) return false;
  const std::size_t m = fsd.m;
  const std::size_t n = fsd.n;
  auto full = [](const FreeInterval& f) { return !f.empty() && f.lo == 0.0 && f.hi == 1.0; };
  // Degenerate diagrams: one curve is a point, so every boundary must be free.
  if (n == 1) return std::all_of(fsd.horizontal.begin(), fsd.horizontal.end(), full);
  if (m == 1) return std::all_of(fsd.vertical.begin(), fsd.vertical.end(), full);

  auto vert = [&](std::size_t i, std::size_t j) { return fsd.vertical[i * (n - 1) + j]; };
  auto horz = [&](std::size_t i, std::size_t j) { return fsd.horizontal[i * n + j]; };

  // left[j]: reachable part of the left boundary of cell (i, j).
  std::vector<FreeInterval> left(n - 1), right(n - 1);
  bool chain = true;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const FreeInterval f = vert(0, j);
    chain = chain && !f.empty() && f.lo == 0.0;
    left[j] = chain ? f : FreeInterval{};
    chain = chain && f.hi == 1.0;
  }

  bool bottom_chain = true;
  FreeInterval last_top{};
  for (std::size_t i = 0; i + 1 < m; ++i) {
    // Reachable part of the bottom boundary of cell (i, 0) comes only
    // along the x-axis from the origin.
    FreeInterval bottom = horz(i, 0);
    bottom_chain = bottom_chain && !bottom.empty() && bottom.lo == 0.0;
    if (!bottom_chain) bottom = FreeInterval{};
    bottom_chain = bottom_chain && bottom.hi == 1.0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const FreeInterval& l = left[j];
      const FreeInterval fr = vert(i + 1, j);
      const FreeInterval ft = horz(i, j + 1);
      FreeInterval r{}, t{};
      if (!bottom.empty()) {
        r = fr;
      } else if (!l.empty()) {
        r = FreeInterval{std::max(fr.lo, l.lo), fr.hi};
      }
      if (!l.empty()) {
        t = ft;
      } else if (!bottom.empty()) {
        t = FreeInterval{std::max(ft.lo, bottom.lo), ft.hi};
      }
      right[j] = r.empty() ? FreeInterval{} : r;
      bottom = t.empty() ? FreeInterval{} : t;
    }
    last_top = bottom;
    std::swap(left, right);
  }
  const FreeInterval& end_right = left[n - 2];
  return (!end_right.empty() && end_right.hi == 1.0) || (!last_top.empty() && last_top.hi == 1.0);
}

bool continuous_frechet_decide(const PolyCurve& a, const PolyCurve& b, double delta) {
  if (!(delta >= 0.0)) throw std::invalid_argument("negative delta");
  return monotone_path_exists(build_free_space(a, b, delta));
}

namespace {

double point_curve_max(const Point& p, const PolyCurve& c) {
  double r = 0.0;
  for (const Point& q : c.vertices()) r = std::max(r, distance(p, q));
  return r;
}

}  // namespace

double continuous_frechet(const PolyCurve& a, const PolyCurve& b, double tol) {
  require_same_dim(a, b);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (a.size() == 1) return point_curve_max(a[0], b);
  if (b.size() == 1) return point_curve_max(b[0], a);
  double lo = std::max(distance(a[0], b[0]), distance(a[a.size() - 1], b[b.size() - 1]));
  double hi = discrete_frechet(a, b);
  if (continuous_frechet_decide(a, b, lo)) return lo;
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2.0;
    if (continuous_frechet_decide(a, b, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double segment_curve_frechet(const Segment& s, const PolyCurve& c, double tol) {
  return continuous_frechet(PolyCurve(std::vector<Point>{s.a, s.b}), c, tol);
}

double frechet_distance(Metric metric, const PolyCurve& a, const PolyCurve& b, double tol) {
  return metric == Metric::Discrete ? discrete_frechet(a, b) : continuous_frechet(a, b, tol);
}

}  // namespace klcenter
