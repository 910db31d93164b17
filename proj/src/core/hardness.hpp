#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frechet.hpp"

namespace klcenter {

// Generators and checkers for the reductions from binary shortest common
// supersequence (SCS) to (k,l)-center with k = 1. Each construction turns
// the strings into gadget curves so that a supersequence of length t exists
// iff a center within radius 1 exists, and no center below gap_radius
// exists for false instances.

enum class Variant {
  OneDDiscrete,
  OneDContinuous,
  TwoDDiscrete,
  TwoDContinuous,
  MebOneDDiscrete,
  MebOneDContinuous,
};

std::string_view variant_name(Variant v);
/// Accepts the names produced by variant_name; throws std::invalid_argument otherwise.
Variant parse_variant(std::string_view name);
Metric metric_of(Variant v);
bool is_two_dimensional(Variant v);

struct ScsInstance {
  std::vector<std::string> strings;
  int t = 0;  // maximum supersequence length
};

/// Throws std::invalid_argument for empty input, empty strings, letters
/// outside {A, B} or t < 1.
void validate(const ScsInstance& inst);

bool is_subsequence(std::string_view sub, std::string_view super);

struct HardInstance {
  Variant variant = Variant::OneDDiscrete;
  std::vector<PolyCurve> curves;
  int t = 0;
  int s = 0;               // gadget repetition, 2D only
  std::size_t ell = 0;     // center budget; 0 means unbounded
  double target_radius = 1.0;
  double gap_radius = 0.0;
};

/// Inapproximability radius of each construction.
double gap_radius_of(Variant v);

/// Repetition parameter s of the 2D gadgets: 2t+2 discrete, 3t+3 continuous.
int repetition_for(Variant v, int t);

/// Ten points on circles of radius 1, 2, 3 around the origin along three
/// rays at 90, 330 and 210 degrees (rays 1, 2, 3). The outer points form an
/// equilateral triangle of side 3*sqrt(3); the A gadgets visit rays
/// 2 -> 3 -> 1, which is clockwise.
struct GadgetLayout2D {
  Point p0;
  std::array<std::array<Point, 3>, 3> p;  // p[ray-1][circle-1]

  const Point& at(int ray, int circle) const { return p[ray - 1][circle - 1]; }
  static const GadgetLayout2D& standard();
};

HardInstance gen_1d(const ScsInstance& inst, Metric metric);
HardInstance gen_2d(const ScsInstance& inst, Metric metric);

/// 1D discrete curves plus A^j = 1 (-3 1)^j and B^jp = -1 (3 -1)^jp.
/// Requires j, jp >= 0 and j + jp = t.
HardInstance gen_meb(const ScsInstance& inst, int j, int jp, Metric metric = Metric::Discrete);

/// The (j, jp) pairs with j + jp = t, in increasing j.
std::vector<std::pair<int, int>> meb_index_pairs(int t);

/// Canonical radius-1 center for a supersequence.
///
/// 1D discrete and MEB: 0, then -2 (A) or 2 (B) per letter, each followed by 0.
/// 1D continuous: like the discrete one but each letter expands to
/// (x 0)^(repeat-1) x with x = -2 or 2 and repeat = t, mirroring the letter gadget.
/// 2D: per letter p0, p(1,2), (c_X)^repeat, p0 with repeat = s and
/// c_A = p(2,2) p(3,2) p(1,2), c_B = p(3,2) p(2,2) p(1,2).
/// An empty superstring gives the single origin vertex.
PolyCurve center_from_superstring(std::string_view sstr, Variant v, int repeat = 0);

/// Same as above with the repetition taken from the instance.
PolyCurve center_from_superstring(std::string_view sstr, const HardInstance& hi);

/// A for every vertex below -1, B for every vertex above 1, in curve order.
std::string extract_superstring_1d(const PolyCurve& center);

/// Recovers a supersequence from a 2D center of radius below 3 sin(pi/3):
/// drop vertices outside the three outer disks of radius r, snap to the disk
/// centers, collapse repeats, then scan left to right turning each
/// non-overlapping occurrence of (g_A)^(s-1) into A and (g_B)^(s-1) into B.
/// Throws std::invalid_argument("disks not disjoint") for r >= 3 sin(pi/3).
std::string extract_superstring_2d_discrete(const PolyCurve& center, double r, int s);

struct Verification {
  bool ok = false;
  double radius = 0.0;
};

/// Max distance from the instance curves to the center; ok iff it is at most
/// delta + tol and the center respects the budget ell (when ell > 0).
Verification verify_instance(const HardInstance& hi, const PolyCurve& center, double delta,
                             Metric metric, double tol = kDefaultTol);

}  // namespace klcenter
