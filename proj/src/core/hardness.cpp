#include "hardness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace klcenter {

namespace {

constexpr std::array<std::pair<Variant, std::string_view>, 6> kVariantNames{{
    {Variant::OneDDiscrete, "1d-discrete"},
    {Variant::OneDContinuous, "1d-continuous"},
    {Variant::TwoDDiscrete, "2d-discrete"},
    {Variant::TwoDContinuous, "2d-continuous"},
    {Variant::MebOneDDiscrete, "meb-discrete"},
    {Variant::MebOneDContinuous, "meb-continuous"},
}};

const double kDiscreteGap2D = 3.0 * std::sin(std::numbers::pi / 3.0);

using Seq = std::vector<Point>;

void append(Seq& out, const Seq& part, int times = 1) {
  for (int i = 0; i < times; ++i) out.insert(out.end(), part.begin(), part.end());
}

Seq concat(std::initializer_list<Seq> parts) {
  Seq out;
  for (const Seq& p : parts) append(out, p);
  return out;
}

Seq repeat(const Seq& part, int times) {
  Seq out;
  append(out, part, times);
  return out;
}

Seq pt(double x) { return Seq{Point{x}}; }

std::string curve_id(std::size_t index, const std::string& s) {
  return "g" + std::to_string(index) + ":" + s;
}

}  // namespace

std::string_view variant_name(Variant v) {
  for (const auto& [variant, name] : kVariantNames) {
    if (variant == v) return name;
  }
  throw std::invalid_argument("unknown variant");
}

Variant parse_variant(std::string_view name) {
  for (const auto& [variant, n] : kVariantNames) {
    if (n == name) return variant;
  }
  throw std::invalid_argument("unknown variant '" + std::string(name) + "'");
}

Metric metric_of(Variant v) {
  switch (v) {
    case Variant::OneDDiscrete:
    case Variant::TwoDDiscrete:
    case Variant::MebOneDDiscrete:
      return Metric::Discrete;
    default:
      return Metric::Continuous;
  }
}

bool is_two_dimensional(Variant v) { return v == Variant::TwoDDiscrete || v == Variant::TwoDContinuous; }

void validate(const ScsInstance& inst) {
  if (inst.strings.empty()) throw std::invalid_argument("SCS instance has no strings");
  if (inst.t < 1) throw std::invalid_argument("t must be positive");
  for (const std::string& s : inst.strings) {
    if (s.empty()) throw std::invalid_argument("SCS instance contains an empty string");
    if (s.find_first_not_of("AB") != std::string::npos) {
      throw std::invalid_argument("SCS strings must be over {A, B}: '" + s + "'");
    }
  }
}

bool is_subsequence(std::string_view sub, std::string_view super) {
  std::size_t k = 0;
  for (char c : super) {
    if (k < sub.size() && sub[k] == c) ++k;
  }
  return k == sub.size();
}

double gap_radius_of(Variant v) {
  switch (v) {
    case Variant::OneDDiscrete:
      return 2.0;
    case Variant::OneDContinuous:
      return 1.5;
    case Variant::TwoDDiscrete:
      return kDiscreteGap2D;
    case Variant::TwoDContinuous:
      return 2.25;
    case Variant::MebOneDDiscrete:
    case Variant::MebOneDContinuous:
      return 1.0;  // hardness only, no approximation gap
  }
  throw std::invalid_argument("unknown variant");
}

int repetition_for(Variant v, int t) {
  if (v == Variant::TwoDDiscrete) return 2 * t + 2;
  if (v == Variant::TwoDContinuous) return 3 * t + 3;
  return 0;
}

const GadgetLayout2D& GadgetLayout2D::standard() {
  static const GadgetLayout2D layout = [] {
    const double h = std::sqrt(3.0) / 2.0;
    const std::array<std::array<double, 2>, 3> dirs{{{0.0, 1.0}, {h, -0.5}, {-h, -0.5}}};
    GadgetLayout2D l;
    l.p0 = Point{0.0, 0.0};
    for (std::size_t ray = 0; ray < 3; ++ray) {
      for (std::size_t circle = 0; circle < 3; ++circle) {
        const double r = static_cast<double>(circle + 1);
        l.p[ray][circle] = Point{r * dirs[ray][0], r * dirs[ray][1]};
      }
    }
    return l;
  }();
  return layout;
}

HardInstance gen_1d(const ScsInstance& inst, Metric metric) {
  validate(inst);
  const int t = inst.t;
  HardInstance hi;
  hi.t = t;
  hi.target_radius = 1.0;
  Seq gA, gB, ga, gb;
  if (metric == Metric::Discrete) {
    hi.variant = Variant::OneDDiscrete;
    hi.ell = static_cast<std::size_t>(2 * t + 1);
    gA = pt(-3);
    gB = pt(3);
    ga = pt(-1);
    gb = pt(1);
  } else {
    hi.variant = Variant::OneDContinuous;
    hi.ell = static_cast<std::size_t>(2 * t * t + 1);
    // Hatted gadgets: (x 0)^(t-1) x.
    auto hat = [t](double x) { return concat({repeat(concat({pt(x), pt(0)}), t - 1), pt(x)}); };
    gA = hat(-3);
    gB = hat(3);
    ga = hat(-1);
    gb = hat(1);
  }
  hi.gap_radius = gap_radius_of(hi.variant);
  const Seq ab = repeat(concat({ga, gb}), t);
  const Seq ba = repeat(concat({gb, ga}), t);
  const Seq letter_a = concat({ab, gA, ba});
  const Seq letter_b = concat({ba, gB, ab});
  for (std::size_t i = 0; i < inst.strings.size(); ++i) {
    Seq curve;
    for (char c : inst.strings[i]) append(curve, c == 'A' ? letter_a : letter_b);
    hi.curves.emplace_back(curve_id(i, inst.strings[i]), std::move(curve));
  }
  return hi;
}

HardInstance gen_2d(const ScsInstance& inst, Metric metric) {
  validate(inst);
  const GadgetLayout2D& L = GadgetLayout2D::standard();
  HardInstance hi;
  hi.variant = metric == Metric::Discrete ? Variant::TwoDDiscrete : Variant::TwoDContinuous;
  hi.t = inst.t;
  hi.s = repetition_for(hi.variant, inst.t);
  hi.ell = static_cast<std::size_t>((3 * hi.s + 3) * inst.t);
  hi.target_radius = 1.0;
  hi.gap_radius = gap_radius_of(hi.variant);

  auto P = [&L](int ray, int circle) { return Seq{L.at(ray, circle)}; };
  const Seq gA = concat({P(2, 3), P(3, 3), P(1, 3)});
  const Seq gB = concat({P(1, 3), P(3, 3), P(2, 3)});
  const Seq ga = concat({P(2, 1), P(3, 1), P(1, 1)});
  const Seq gb = concat({P(3, 1), P(2, 1), P(1, 1)});
  const Seq hat_A = concat({P(1, 3), repeat(gA, hi.s)});
  const Seq hat_B = concat({P(1, 3), repeat(gB, hi.s)});
  const Seq hat_a = concat({P(1, 1), repeat(ga, hi.s)});
  const Seq hat_b = concat({P(1, 1), repeat(gb, hi.s)});
  const Seq buffer = repeat(concat({hat_a, hat_b}), inst.t);
  const Seq letter_a = concat({buffer, hat_A, buffer});
  const Seq letter_b = concat({buffer, hat_B, buffer});
  for (std::size_t i = 0; i < inst.strings.size(); ++i) {
    Seq curve;
    for (char c : inst.strings[i]) append(curve, c == 'A' ? letter_a : letter_b);
    hi.curves.emplace_back(curve_id(i, inst.strings[i]), std::move(curve));
  }
  return hi;
}

std::vector<std::pair<int, int>> meb_index_pairs(int t) {
  if (t < 0) throw std::invalid_argument("t must be non-negative");
  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j <= t; ++j) pairs.emplace_back(j, t - j);
  return pairs;
}

HardInstance gen_meb(const ScsInstance& inst, int j, int jp, Metric metric) {
  validate(inst);
  if (j < 0 || jp < 0 || j + jp != inst.t) throw std::invalid_argument("need j + jp = t with j, jp >= 0");
  HardInstance hi = gen_1d(inst, Metric::Discrete);
  hi.variant = metric == Metric::Discrete ? Variant::MebOneDDiscrete : Variant::MebOneDContinuous;
  hi.ell = 0;
  hi.gap_radius = gap_radius_of(hi.variant);
  hi.curves.emplace_back("A^" + std::to_string(j), concat({pt(1), repeat(concat({pt(-3), pt(1)}), j)}));
  hi.curves.emplace_back("B^" + std::to_string(jp), concat({pt(-1), repeat(concat({pt(3), pt(-1)}), jp)}));
  return hi;
}

PolyCurve center_from_superstring(std::string_view sstr, Variant v, int repeat_count) {
  if (sstr.find_first_not_of("AB") != std::string_view::npos) {
    throw std::invalid_argument("superstring must be over {A, B}");
  }
  const std::string id = "center:" + std::string(sstr);
  if (is_two_dimensional(v)) {
    const GadgetLayout2D& L = GadgetLayout2D::standard();
    if (sstr.empty()) return PolyCurve(id, {L.p0});
    if (repeat_count < 1) throw std::invalid_argument("2D centers need s >= 1");
    const Seq cA{L.at(2, 2), L.at(3, 2), L.at(1, 2)};
    const Seq cB{L.at(3, 2), L.at(2, 2), L.at(1, 2)};
    Seq out;
    for (char c : sstr) {
      out.push_back(L.p0);
      out.push_back(L.at(1, 2));
      append(out, c == 'A' ? cA : cB, repeat_count);
      out.push_back(L.p0);
    }
    return PolyCurve(id, std::move(out));
  }
  Seq out = pt(0);
  for (char c : sstr) {
    const double x = c == 'A' ? -2.0 : 2.0;
    if (v == Variant::OneDContinuous) {
      if (repeat_count < 1) throw std::invalid_argument("1D continuous centers need t >= 1");
      append(out, concat({repeat(concat({pt(x), pt(0)}), repeat_count - 1), pt(x)}));
    } else {
      append(out, pt(x));
    }
    append(out, pt(0));
  }
  return PolyCurve(id, std::move(out));
}

PolyCurve center_from_superstring(std::string_view sstr, const HardInstance& hi) {
  const int rep = is_two_dimensional(hi.variant) ? hi.s : hi.variant == Variant::OneDContinuous ? hi.t : 0;
  return center_from_superstring(sstr, hi.variant, rep);
}

std::string extract_superstring_1d(const PolyCurve& center) {
  if (center.dim() != 1) throw std::invalid_argument("1D extraction needs a one-dimensional curve");
  std::string out;
  for (const Point& p : center.vertices()) {
    if (p[0] < -1.0) out.push_back('A');
    if (p[0] > 1.0) out.push_back('B');
  }
  return out;
}

std::string extract_superstring_2d_discrete(const PolyCurve& center, double r, int s) {
  if (center.dim() != 2) throw std::invalid_argument("2D extraction needs a planar curve");
  if (!(r < kDiscreteGap2D)) throw std::invalid_argument("disks not disjoint");
  if (s < 2) throw std::invalid_argument("extraction needs s >= 2");
  const GadgetLayout2D& L = GadgetLayout2D::standard();

  // Phases 1-3: keep vertices inside a disk, snap to its ray, collapse repeats.
  std::vector<int> snapped;
  for (const Point& p : center.vertices()) {
    for (int ray = 1; ray <= 3; ++ray) {
      if (distance(p, L.at(ray, 3)) <= r) {
        if (snapped.empty() || snapped.back() != ray) snapped.push_back(ray);
        break;
      }
    }
  }

  // Phase 4: non-overlapping left-to-right pattern replacement.
  const std::array<int, 3> cycle_a{2, 3, 1};
  const std::array<int, 3> cycle_b{1, 3, 2};
  const std::size_t span = 3 * static_cast<std::size_t>(s - 1);
  auto matches = [&](std::size_t at, const std::array<int, 3>& cycle) {
    if (at + span > snapped.size()) return false;
    for (std::size_t k = 0; k < span; ++k) {
      if (snapped[at + k] != cycle[k % 3]) return false;
    }
    return true;
  };
  std::string out;
  std::size_t k = 0;
  while (k < snapped.size()) {
    if (matches(k, cycle_a)) {
      out.push_back('A');
      k += span;
    } else if (matches(k, cycle_b)) {
      out.push_back('B');
      k += span;
    } else {
      ++k;
    }
  }
  return out;
}

Verification verify_instance(const HardInstance& hi, const PolyCurve& center, double delta, Metric metric,
                             double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  Verification v;
  for (const PolyCurve& c : hi.curves) {
    if (c.dim() != center.dim()) throw std::invalid_argument("center dimension does not match instance");
    v.radius = std::max(v.radius, frechet_distance(metric, c, center, tol));
  }
  const bool within_budget = hi.ell == 0 || center.size() <= hi.ell;
  v.ok = within_budget && v.radius <= delta + tol;
  return v;
}

}  // namespace klcenter
