#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <vector>

#include "frechet.hpp"

namespace klcenter::testing {

inline std::size_t uniform_size(std::mt19937& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline double uniform_real(std::mt19937& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Point random_point(std::mt19937& rng, std::size_t dim, double scale) {
  std::vector<double> coords(dim);
  for (double& x : coords) x = uniform_real(rng, -scale, scale);
  return Point(std::move(coords));
}

inline PolyCurve random_curve(std::mt19937& rng, std::size_t m, std::size_t dim, double scale = 10.0) {
  std::vector<Point> vertices;
  for (std::size_t i = 0; i < m; ++i) vertices.push_back(random_point(rng, dim, scale));
  return PolyCurve(std::move(vertices));
}

// Random walk: consecutive vertices are close, which gives simplifications
// something to merge.
inline PolyCurve random_walk(std::mt19937& rng, std::size_t m, std::size_t dim, double step = 1.0) {
  std::vector<Point> vertices{random_point(rng, dim, step)};
  for (std::size_t i = 1; i < m; ++i) {
    Point p = vertices.back();
    for (std::size_t k = 0; k < dim; ++k) p[k] += uniform_real(rng, -step, step);
    vertices.push_back(p);
  }
  return PolyCurve(std::move(vertices));
}

// A point uniformly inside the ball of the given radius around p.
inline Point jitter(std::mt19937& rng, const Point& p, double radius) {
  std::normal_distribution<double> gauss;
  std::vector<double> dir(p.dim());
  double norm = 0.0;
  for (double& x : dir) {
    x = gauss(rng);
    norm += x * x;
  }
  norm = std::sqrt(norm);
  const double r = radius * std::pow(uniform_real(rng, 0.0, 1.0), 1.0 / static_cast<double>(p.dim()));
  std::vector<double> coords(p.coords().begin(), p.coords().end());
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += norm > 0.0 ? r * dir[k] / norm : 0.0;
  return Point(std::move(coords));
}

// Copy of center with every vertex repeated 1..3 times and each copy moved
// by at most radius, so the discrete Fréchet distance to center is <= radius.
inline PolyCurve plant(std::mt19937& rng, const PolyCurve& center, double radius) {
  std::vector<Point> vertices;
  for (const Point& p : center.vertices()) {
    const std::size_t copies = uniform_size(rng, 1, 3);
    for (std::size_t c = 0; c < copies; ++c) vertices.push_back(jitter(rng, p, radius));
  }
  return PolyCurve(std::move(vertices));
}

inline PolyCurve line1d(std::initializer_list<double> xs) {
  std::vector<Point> vertices;
  for (double x : xs) vertices.push_back(Point{x});
  return PolyCurve(std::move(vertices));
}

inline PolyCurve line2d(std::initializer_list<std::pair<double, double>> xys) {
  std::vector<Point> vertices;
  for (const auto& [x, y] : xys) vertices.push_back(Point{x, y});
  return PolyCurve(std::move(vertices));
}

}  // namespace klcenter::testing
