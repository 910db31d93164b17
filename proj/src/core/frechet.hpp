#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace klcenter {

enum class Metric { Discrete, Continuous };

inline constexpr double kDefaultTol = 1e-9;

/// A polygonal curve: an identifier plus a non-empty vertex sequence of
/// one common dimension. A single vertex is a valid (degenerate) curve.
class PolyCurve {
 public:
  PolyCurve() = default;
  /// Throws std::invalid_argument on an empty vertex list, mixed
  /// dimensions or non-finite coordinates.
  PolyCurve(std::string id, std::vector<Point> vertices);
  explicit PolyCurve(std::vector<Point> vertices) : PolyCurve(std::string{}, std::move(vertices)) {}

  const std::string& id() const { return id_; }
  void set_id(std::string id) { id_ = std::move(id); }
  std::size_t size() const { return vertices_.size(); }
  std::size_t dim() const { return vertices_.empty() ? 0 : vertices_.front().dim(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  const std::vector<Point>& vertices() const { return vertices_; }

  /// Vertices first..last inclusive as a new curve.
  PolyCurve subcurve(std::size_t first, std::size_t last) const;

  friend bool operator==(const PolyCurve&, const PolyCurve&) = default;

 private:
  std::string id_;
  std::vector<Point> vertices_;
};

/// Monotone coupling of two vertex sequences, 0-based index pairs.
using Alignment = std::vector<std::pair<std::size_t, std::size_t>>;

double discrete_frechet(const PolyCurve& a, const PolyCurve& b);

/// Discrete Fréchet distance together with one optimal coupling.
std::pair<double, Alignment> discrete_frechet_alignment(const PolyCurve& a, const PolyCurve& b);

/// Free-space reachability test: true iff d_F(a, b) <= delta (up to kGeomEps).
bool continuous_frechet_decide(const PolyCurve& a, const PolyCurve& b, double delta);

/// Continuous Fréchet distance by bisection on the decision procedure.
/// The result v satisfies decide(v) and, unless v is the lower bracket,
/// !decide(v - tol).
double continuous_frechet(const PolyCurve& a, const PolyCurve& b, double tol = kDefaultTol);

double segment_curve_frechet(const Segment& s, const PolyCurve& c, double tol = kDefaultTol);

double frechet_distance(Metric metric, const PolyCurve& a, const PolyCurve& b,
                        double tol = kDefaultTol);

/// Sub-interval [lo, hi] of [0,1] of the segment a->b within radius of p;
/// lo > hi when empty.
struct FreeInterval {
  double lo = 1.0;
  double hi = 0.0;
  bool empty() const { return lo > hi; }
};

FreeInterval free_interval(const Point& p, const Point& a, const Point& b, double radius);

/// Free-space diagram of two curves at radius delta (slack kGeomEps included).
/// vertical[i * (n-1) + j]: free part of edge j of b seen from vertex i of a.
/// horizontal[i * n + j]: free part of edge i of a seen from vertex j of b.
struct FreeSpaceDiagram {
  double delta = 0.0;
  std::size_t m = 0;  // vertices of a
  std::size_t n = 0;  // vertices of b
  bool start_free = false;
  bool end_free = false;
  std::vector<FreeInterval> vertical;
  std::vector<FreeInterval> horizontal;
};

FreeSpaceDiagram build_free_space(const PolyCurve& a, const PolyCurve& b, double delta);

/// True iff a monotone path joins (0,0) and (m-1,n-1) inside the free space.
bool monotone_path_exists(const FreeSpaceDiagram& fsd);

}  // namespace klcenter
