#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace klcenter {

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {}

Point::Point(std::initializer_list<double> coords) : coords_(coords) {}

bool Ball::contains(const Point& p, double eps) const {
  return radius >= 0.0 && distance(center, p) <= radius + eps;
}

double squared_distance(const Point& p, const Point& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const double d = p[i] - q[i];
    sum += d * d;
  }
  return sum;
}

double distance(const Point& p, const Point& q) { return std::sqrt(squared_distance(p, q)); }

Point lerp(const Point& a, const Point& b, double t) {
  std::vector<double> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] + t * (b[i] - a[i]);
  return Point(std::move(c));
}

double point_segment_distance(const Point& p, const Segment& s) {
  if (p.dim() != s.a.dim() || p.dim() != s.b.dim()) {
    throw std::invalid_argument("dimension mismatch");
  }
  double len2 = 0.0;
  double dot = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const double u = s.b[i] - s.a[i];
    len2 += u * u;
    dot += u * (p[i] - s.a[i]);
  }
  if (len2 == 0.0) return distance(p, s.a);
  const double t = std::clamp(dot / len2, 0.0, 1.0);
  return distance(p, lerp(s.a, s.b, t));
}

namespace {

// Ball with every boundary point on its sphere, centered in their affine hull.
// An empty boundary yields radius -1 (contains nothing).
Ball ball_from_boundary(const std::vector<Point>& boundary) {
  if (boundary.empty()) return Ball{Point{}, -1.0};
  const Point& q0 = boundary.front();
  if (boundary.size() == 1) return Ball{q0, 0.0};

  const std::size_t dim = q0.dim();
  const std::size_t k = boundary.size() - 1;
  std::vector<std::vector<double>> v(k, std::vector<double>(dim));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < dim; ++c) v[i][c] = boundary[i + 1][c] - q0[c];
  }
  // Solve 2 G lambda = diag(G) with G the Gram matrix of v.
  std::vector<std::vector<double>> m(k, std::vector<double>(k + 1));
  double scale = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      double g = 0.0;
      for (std::size_t c = 0; c < dim; ++c) g += v[i][c] * v[j][c];
      m[i][j] = 2.0 * g;
    }
    m[i][k] = m[i][i] / 2.0;
    scale = std::max(scale, std::abs(m[i][i]));
  }
  std::vector<double> lambda(k, 0.0);
  std::vector<std::size_t> pivot_col(k, k);
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < k; ++col) {
    std::size_t best = row;
    for (std::size_t r = row + 1; r < k; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[best][col])) best = r;
    }
    if (std::abs(m[best][col]) <= 1e-14 * std::max(scale, 1e-300)) continue;
    std::swap(m[row], m[best]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == row) continue;
      const double f = m[r][col] / m[row][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c <= k; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col[row] = col;
    ++row;
  }
  for (std::size_t r = 0; r < row; ++r) {
    lambda[pivot_col[r]] = m[r][k] / m[r][pivot_col[r]];
  }

  std::vector<double> center(q0.coords().begin(), q0.coords().end());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < dim; ++c) center[c] += lambda[i] * v[i][c];
  }
  Ball ball{Point(std::move(center)), 0.0};
  for (const Point& q : boundary) ball.radius = std::max(ball.radius, distance(ball.center, q));
  return ball;
}

bool inside(const Ball& ball, const Point& p) {
  return ball.radius >= 0.0 && distance(ball.center, p) <= ball.radius + 1e-12 * std::max(1.0, ball.radius);
}

Ball move_to_front(std::vector<Point>& pts, std::size_t end, std::vector<Point>& boundary,
                   std::size_t dim) {
  Ball ball = ball_from_boundary(boundary);
  if (boundary.size() == dim + 1) return ball;
  for (std::size_t i = 0; i < end; ++i) {
    if (inside(ball, pts[i])) continue;
    boundary.push_back(pts[i]);
    ball = move_to_front(pts, i, boundary, dim);
    boundary.pop_back();
    std::rotate(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(i),
                pts.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  }
  return ball;
}

void check_dims(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  const std::size_t dim = points.front().dim();
  if (dim == 0) throw std::invalid_argument("zero-dimensional point");
  for (const Point& p : points) {
    if (p.dim() != dim) throw std::invalid_argument("dimension mismatch");
  }
}

}  // namespace

Ball min_enclosing_ball(std::span<const Point> points) {
  check_dims(points);
  std::vector<Point> pts(points.begin(), points.end());
  std::vector<Point> boundary;
  boundary.reserve(pts.front().dim() + 1);
  return move_to_front(pts, pts.size(), boundary, pts.front().dim());
}

void EnclosingBallBuilder::add(const Point& p) {
  if (points_.empty()) {
    ball_ = Ball{p, 0.0};
  } else if (!inside(ball_, p)) {
    if (p.dim() != points_.front().dim()) throw std::invalid_argument("dimension mismatch");
    std::vector<Point> boundary{p};
    ball_ = move_to_front(points_, points_.size(), boundary, p.dim());
  }
  points_.push_back(p);
}

void EnclosingBallBuilder::clear() {
  points_.clear();
  ball_ = Ball{};
}

}  // namespace klcenter
