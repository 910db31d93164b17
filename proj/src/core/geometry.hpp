#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace klcenter {

/// Absolute tolerance used by geometric comparisons throughout the library.
inline constexpr double kGeomEps = 1e-9;

/// A point in R^d. Coordinates are plain Euclidean reals.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

struct Segment {
  Point a;
  Point b;
};

struct Ball {
  Point center;
  double radius = 0.0;

  bool contains(const Point& p, double eps = kGeomEps) const;
};

double squared_distance(const Point& p, const Point& q);
double distance(const Point& p, const Point& q);

// Point on the segment a->b at parameter t in [0,1].
Point lerp(const Point& a, const Point& b, double t);

double point_segment_distance(const Point& p, const Segment& s);

/// Smallest ball enclosing all points.
///
/// Move-to-front Welzl recursion with boundary sets solved through the
/// Gram system of the boundary points, so it is exact (up to floating
/// point) in every dimension. Throws std::invalid_argument on an empty
/// input or mixed dimensions.
Ball min_enclosing_ball(std::span<const Point> points);

/// Incrementally maintained minimum enclosing ball of a growing point set.
/// Adding a point that already lies inside keeps the ball; otherwise the
/// new point is forced onto the boundary of the recomputed ball.
class EnclosingBallBuilder {
 public:
  void add(const Point& p);
  const Ball& ball() const { return ball_; }
  std::size_t size() const { return points_.size(); }
  void clear();

 private:
  std::vector<Point> points_;
  Ball ball_;
};

}  // namespace klcenter
