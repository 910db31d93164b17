#include "klcenter/klcenter.h"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cluster.hpp"
#include "curve_io.hpp"
#include "hardness.hpp"
#include "simplify.hpp"

struct kc_curveset {
  std::size_t dim = 0;
  std::vector<klcenter::PolyCurve> curves;
};

struct kc_cluster {
  klcenter::ClusterResult result;
  kc_curveset centers;
};

struct kc_instance {
  klcenter::HardInstance hi;
  kc_curveset curves;
  std::string variant;
};

namespace {

std::string& last_error() {
  thread_local std::string message;
  return message;
}

kc_status fail(kc_status status, const char* what) {
  try {
    last_error() = what;
  } catch (...) {
  }
  return status;
}

struct ArgError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void require(bool cond, const char* what) {
  if (!cond) throw ArgError(what);
}

klcenter::Metric to_metric(kc_metric m) {
  require(m == KC_DISCRETE || m == KC_CONTINUOUS, "unknown metric");
  return m == KC_DISCRETE ? klcenter::Metric::Discrete : klcenter::Metric::Continuous;
}

double to_tol(double tol) {
  require(tol >= 0.0, "tolerance must be non-negative");
  return tol == 0.0 ? klcenter::kDefaultTol : tol;
}

const klcenter::PolyCurve& curve_at(const kc_curveset* set, std::size_t index) {
  require(set != nullptr, "null curve set");
  require(index < set->curves.size(), "curve index out of range");
  return set->curves[index];
}

kc_curveset make_set(std::vector<klcenter::PolyCurve> curves) {
  kc_curveset set;
  set.dim = curves.empty() ? 0 : curves.front().dim();
  set.curves = std::move(curves);
  return set;
}

klcenter::ClusterParams to_params(const kc_cluster_params* p) {
  require(p != nullptr, "null params");
  klcenter::ClusterParams out;
  out.k = p->k;
  out.ell = p->ell;
  out.metric = to_metric(p->metric);
  out.tol = to_tol(p->tol);
  return out;
}

kc_cluster* wrap(klcenter::ClusterResult r) {
  auto* c = new kc_cluster;
  c->centers = make_set(r.centers);
  c->result = std::move(r);
  return c;
}

}  // namespace

#define KC_PROLOGUE \
  last_error().clear(); \
  try {

#define KC_EPILOGUE \
  } \
  catch (const klcenter::io::ParseError& e) { \
    return fail(KC_PARSE, e.what()); \
  } \
  catch (const klcenter::io::IoError& e) { \
    return fail(KC_IO, e.what()); \
  } \
  catch (const std::filesystem::filesystem_error& e) { \
    return fail(KC_IO, e.what()); \
  } \
  catch (const std::invalid_argument& e) { \
    return fail(KC_INVALID_ARGUMENT, e.what()); \
  } \
  catch (const std::length_error& e) { \
    return fail(KC_INVALID_ARGUMENT, e.what()); \
  } \
  catch (const std::out_of_range& e) { \
    return fail(KC_INVALID_ARGUMENT, e.what()); \
  } \
  catch (const std::bad_alloc&) { \
    return fail(KC_INTERNAL, "out of memory"); \
  } \
  catch (const std::exception& e) { \
    return fail(KC_INTERNAL, e.what()); \
  } \
  catch (...) { \
    return fail(KC_INTERNAL, "unknown error"); \
  }

extern "C" {

KC_API const char* kc_version(void) { return "1.0.0"; }

KC_API const char* kc_last_error(void) { return last_error().c_str(); }

KC_API const char* kc_status_name(kc_status status) {
  switch (status) {
    case KC_OK:
      return "ok";
    case KC_INVALID_ARGUMENT:
      return "invalid argument";
    case KC_IO:
      return "i/o error";
    case KC_PARSE:
      return "parse error";
    case KC_INFEASIBLE:
      return "infeasible";
    case KC_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

KC_API kc_status kc_curveset_create(size_t dim, kc_curveset** out) {
  KC_PROLOGUE
  require(out != nullptr, "null output");
  require(dim > 0, "dimension must be positive");
  *out = new kc_curveset{dim, {}};
  return KC_OK;
  KC_EPILOGUE
}

KC_API void kc_curveset_free(kc_curveset* set) { delete set; }

KC_API kc_status kc_curveset_add(kc_curveset* set, const char* id, const double* coords, size_t n_vertices) {
  KC_PROLOGUE
  require(set != nullptr, "null curve set");
  require(coords != nullptr || n_vertices == 0, "null coordinates");
  std::vector<klcenter::Point> vertices;
  vertices.reserve(n_vertices);
  for (std::size_t i = 0; i < n_vertices; ++i) {
    vertices.emplace_back(std::vector<double>(coords + i * set->dim, coords + (i + 1) * set->dim));
  }
  set->curves.emplace_back(id ? id : "curve" + std::to_string(set->curves.size()), std::move(vertices));
  return KC_OK;
  KC_EPILOGUE
}

KC_API size_t kc_curveset_size(const kc_curveset* set) { return set ? set->curves.size() : 0; }

KC_API size_t kc_curveset_dim(const kc_curveset* set) { return set ? set->dim : 0; }

KC_API kc_status kc_curveset_vertex_count(const kc_curveset* set, size_t index, size_t* out) {
  KC_PROLOGUE
  require(out != nullptr, "null output");
  *out = curve_at(set, index).size();
  return KC_OK;
  KC_EPILOGUE
}

KC_API kc_status kc_curveset_coords(const kc_curveset* set, size_t index, double* out, size_t capacity) {
  KC_PROLOGUE
  const klcenter::PolyCurve& c = curve_at(set, index);
  require(out != nullptr, "null output");
  require(capacity >= c.size() * c.dim(), "output buffer too small");
  for (const klcenter::Point& p : c.vertices()) out = std::copy(p.coords().begin(), p.coords().end(), out);
  return KC_OK;
  KC_EPILOGUE
}

KC_API const char* kc_curveset_id(const kc_curveset* set, size_t index) {
  if (!set || index >= set->curves.size()) return nullptr;
  return set->curves[index].id().c_str();
}

KC_API kc_status kc_curveset_load(const char* path, kc_curveset** out) {
  KC_PROLOGUE
  require(path != nullptr && out != nullptr, "null argument");
  *out = new kc_curveset(make_set(klcenter::io::load_curves(path)));
  return KC_OK;
  KC_EPILOGUE
}

KC_API kc_status kc_curveset_save(const kc_curveset* set, const char* path) {
  KC_PROLOGUE
  require(set != nullptr && path != nullptr, "null argument");
  klcenter::io::write_curves(std::filesystem::path(path), set->curves);
  return KC_OK;
  KC_EPILOGUE
}

KC_API kc_status kc_curveset_write_geojson(const kc_curveset* set, const char* path, const char* role) {
  KC_PROLOGUE
  require(set != nullptr && path != nullptr, "null argument");
  klcenter::io::write_geojson(path, set->curves, role ? role : "curve");
  return KC_OK;
  KC_EPILOGUE
}

KC_API kc_status kc_write_geojson_layers(const kc_curveset* const* sets, const char* const* roles, size_t n_layers,
                                         const char* path) {
  KC_PROLOGUE
  require(path != nullptr && (sets != nullptr || n_layers == 0), "null argument");
  std::vector<klcenter::io::GeoLayer> layers;
  for (std::size_t i = 0; i < n_layers; ++i) {
    require(sets[i] != nullptr, "null curve set");
    layers.push_back({&sets[i]->curves, roles && roles[i] ? roles[i] : "curve"});
  }
  klcenter::io::write_geojson(path, layers);
  return KC_OK;
  KC_EPILOGUE
}

KC_API kc_status kc_distance(const kc_curveset* a, size_t i, const kc_curveset* b, size_t j, kc_metric metric,
                             double tol, double* out) {
  KC_PROLOGUE
  require(out != nullptr, "null output");
  const klcenter::PolyCurve& ca = curve_at(a, i);
  const klcenter::PolyCurve& cb = curve_at(b, j);
  require(ca.dim() == cb.dim(), "dimension mismatch");
  *out = klcenter::frechet_distance(to_metric(metric), ca, cb, to_tol(tol));
  return KC_OK;
  KC_EPILOGUE
}

KC_API kc_status kc_distance_matrix(const kc_curveset* a, const kc_curveset* b, kc_metric metric, double tol,
                                    double* out) {
  KC_PROLOGUE
  require(a != nullptr && b != nullptr && out != nullptr, "null argument");
  require(a->curves.empty() || b->curves.empty() || a->dim == b->dim, "dimension mismatch");
  const klcenter::Metric m = to_metric(metric);
  const double t = to_tol(tol);
  for (const klcenter::PolyCurve& ca : a->curves) {
    for (const klcenter::PolyCurve& cb : b->curves) *out++ = klcenter::frechet_distance(m, ca, cb, t);
  }
  return KC_OK;
  KC_EPILOGUE
}

KC_API kc_status kc_simplify_min_size(const kc_curveset* set, size_t index, kc_metric metric, double delta,
                                      double tol, kc_curveset** out, double* error) {
  KC_PROLOGUE
  require(out != nullptr, "null output");
  const klcenter::PolyCurve& c = curve_at(set, index);
  require(delta >= 0.0, "delta must be non-negative");
  klcenter::SimplifyResult r = to_metric(metric) == klcenter::Metric::Discrete
                                   ? klcenter::min_size_simplify_discrete(c, delta)
                                   : klcenter::min_size_simplify_continuous_vc(c, delta, to_tol(tol));
  r.curve.set_id(c.id());
  if (error) *error = r.error;
  *out = new kc_curveset(make_set({std::move(r.curve)}));
  return KC_OK;
  KC_EPILOGUE
}

KC_API kc_status kc_simplify_min_error(const kc_curveset* set, size_t index, kc_metric metric, size_t ell,
                                       double tol, kc_curveset** out, double* error) {
  KC_PROLOGUE
  require(out != nullptr, "null output");
  const klcenter::PolyCurve& c = curve_at(set, index);
  klcenter::SimplifyResult r = to_metric(metric) == klcenter::Metric::Discrete
                                   ? klcenter::min_error_simplify_discrete(c, ell)
                                   : klcenter::approx4_min_error_simplify_continuous(c, ell, to_tol(tol));
  r.curve.set_id(c.id());
  if (error) *error = r.error;
  *out = new kc_curveset(make_set({std::move(r.curve)}));
  return KC_OK;
  KC_EPILOGUE
}

KC_API kc_status kc_cluster_gonzalez(const kc_curveset* set, const kc_cluster_params* params, kc_cluster** out) {
  KC_PROLOGUE
  require(set != nullptr && out != nullptr, "null argument");
  *out = wrap(klcenter::gonzalez_kl_center(set->curves, to_params(params)));
  return KC_OK;
  KC_EPILOGUE
}

KC_API kc_status kc_cluster_search(const kc_curveset* set, const kc_cluster_params* params, kc_cluster** out) {
  KC_PROLOGUE
  require(set != nullptr && out != nullptr, "null argument");
  *out = wrap(klcenter::kl_center_search(set->curves, to_params(params)));
  return KC_OK;
  KC_EPILOGUE
}

KC_API kc_status kc_cluster_decide(const kc_curveset* set, const kc_cluster_params* params, double delta,
                                   kc_cluster** out) {
  KC_PROLOGUE
  require(set != nullptr && out != nullptr, "null argument");
  *out = nullptr;
  require(delta >= 0.0, "delta must be non-negative");
  std::optional<klcenter::ClusterResult> r = klcenter::kl_center_decide(set->curves, to_params(params), delta);
  if (!r) return fail(KC_INFEASIBLE, "no clustering within 3 delta found; the optimum exceeds delta");
  *out = wrap(std::move(*r));
  return KC_OK;
  KC_EPILOGUE
}

KC_API void kc_cluster_free(kc_cluster* cluster) { delete cluster; }

KC_API double kc_cluster_radius(const kc_cluster* cluster) { return cluster ? cluster->result.radius : 0.0; }

KC_API size_t kc_cluster_decider_calls(const kc_cluster* cluster) {
  return cluster ? cluster->result.decider_calls : 0;
}

KC_API const kc_curveset* kc_cluster_centers(const kc_cluster* cluster) {
  return cluster ? &cluster->centers : nullptr;
}

KC_API size_t kc_cluster_assignment(const kc_cluster* cluster, size_t* out, size_t capacity) {
  if (!cluster) return 0;
  const auto& a = cluster->result.assignment;
  if (out) std::copy_n(a.begin(), std::min(capacity, a.size()), out);
  return a.size();
}

KC_API size_t kc_cluster_history(const kc_cluster* cluster, double* out, size_t capacity) {
  if (!cluster) return 0;
  const auto& h = cluster->result.history;
  if (out) std::copy_n(h.begin(), std::min(capacity, h.size()), out);
  return h.size();
}

KC_API kc_status kc_instance_generate(const char* variant, const char* const* strings, size_t n_strings, int t,
                                      int j, int jp, kc_instance** out) {
  KC_PROLOGUE
  require(variant != nullptr && out != nullptr, "null argument");
  require(strings != nullptr || n_strings == 0, "null strings");
  klcenter::ScsInstance inst;
  inst.t = t;
  for (std::size_t i = 0; i < n_strings; ++i) {
    require(strings[i] != nullptr, "null string");
    inst.strings.emplace_back(strings[i]);
  }
  const klcenter::Variant v = klcenter::parse_variant(variant);
  const klcenter::Metric m = klcenter::metric_of(v);
  auto* result = new kc_instance;
  try {
    if (v == klcenter::Variant::MebOneDDiscrete || v == klcenter::Variant::MebOneDContinuous) {
      result->hi = klcenter::gen_meb(inst, j, jp, m);
    } else if (klcenter::is_two_dimensional(v)) {
      result->hi = klcenter::gen_2d(inst, m);
    } else {
      result->hi = klcenter::gen_1d(inst, m);
    }
    result->curves = make_set(result->hi.curves);
    result->variant = std::string(klcenter::variant_name(v));
  } catch (...) {
    delete result;
    throw;
  }
  *out = result;
  return KC_OK;
  KC_EPILOGUE
}

KC_API kc_status kc_instance_load(const char* dir, kc_instance** out) {
  KC_PROLOGUE
  require(dir != nullptr && out != nullptr, "null argument");
  auto* result = new kc_instance;
  try {
    result->hi = klcenter::io::load_instance(dir);
    result->curves = make_set(result->hi.curves);
    result->variant = std::string(klcenter::variant_name(result->hi.variant));
  } catch (...) {
    delete result;
    throw;
  }
  *out = result;
  return KC_OK;
  KC_EPILOGUE
}

KC_API kc_status kc_instance_save(const kc_instance* inst, const char* dir) {
  KC_PROLOGUE
  require(inst != nullptr && dir != nullptr, "null argument");
  klcenter::io::save_instance(dir, inst->hi);
  return KC_OK;
  KC_EPILOGUE
}

KC_API void kc_instance_free(kc_instance* inst) { delete inst; }

KC_API const kc_curveset* kc_instance_curves(const kc_instance* inst) { return inst ? &inst->curves : nullptr; }

KC_API const char* kc_instance_variant(const kc_instance* inst) { return inst ? inst->variant.c_str() : nullptr; }

KC_API kc_status kc_instance_get_params(const kc_instance* inst, kc_instance_params* out) {
  KC_PROLOGUE
  require(inst != nullptr && out != nullptr, "null argument");
  out->t = inst->hi.t;
  out->s = inst->hi.s;
  out->ell = inst->hi.ell;
  out->target_radius = inst->hi.target_radius;
  out->gap_radius = inst->hi.gap_radius;
  out->metric = klcenter::metric_of(inst->hi.variant) == klcenter::Metric::Discrete ? KC_DISCRETE : KC_CONTINUOUS;
  return KC_OK;
  KC_EPILOGUE
}

KC_API kc_status kc_instance_center(const kc_instance* inst, const char* superstring, kc_curveset** out) {
  KC_PROLOGUE
  require(inst != nullptr && superstring != nullptr && out != nullptr, "null argument");
  *out = new kc_curveset(make_set({klcenter::center_from_superstring(superstring, inst->hi)}));
  return KC_OK;
  KC_EPILOGUE
}

KC_API kc_status kc_instance_verify(const kc_instance* inst, const kc_curveset* centers, size_t index, double delta,
                                    double tol, int* ok, double* radius) {
  KC_PROLOGUE
  require(inst != nullptr && ok != nullptr, "null argument");
  const klcenter::PolyCurve& center = curve_at(centers, index);
  const klcenter::Verification v =
      klcenter::verify_instance(inst->hi, center, delta, klcenter::metric_of(inst->hi.variant), to_tol(tol));
  *ok = v.ok ? 1 : 0;
  if (radius) *radius = v.radius;
  return KC_OK;
  KC_EPILOGUE
}

KC_API kc_status kc_extract_superstring(const char* variant, const kc_curveset* centers, size_t index, double radius,
                                        int s, char* out, size_t capacity, size_t* needed) {
  KC_PROLOGUE
  require(variant != nullptr, "null variant");
  const klcenter::PolyCurve& center = curve_at(centers, index);
  const klcenter::Variant v = klcenter::parse_variant(variant);
  const std::string str = klcenter::is_two_dimensional(v)
                              ? klcenter::extract_superstring_2d_discrete(center, radius, s)
                              : klcenter::extract_superstring_1d(center);
  if (needed) *needed = str.size() + 1;
  if (out && capacity > str.size()) std::memcpy(out, str.c_str(), str.size() + 1);
  return KC_OK;
  KC_EPILOGUE
}

}  // extern "C"
