// Command-line front end over the klcenter C API.
//
// Exit codes: 0 success, 1 malformed input, 2 infeasible ("no" answer).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "klcenter/klcenter.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNo = 2;

struct CurveSetDeleter {
  void operator()(kc_curveset* s) const { kc_curveset_free(s); }
};
struct ClusterDeleter {
  void operator()(kc_cluster* c) const { kc_cluster_free(c); }
};
struct InstanceDeleter {
  void operator()(kc_instance* i) const { kc_instance_free(i); }
};
using CurveSet = std::unique_ptr<kc_curveset, CurveSetDeleter>;
using Cluster = std::unique_ptr<kc_cluster, ClusterDeleter>;
using Instance = std::unique_ptr<kc_instance, InstanceDeleter>;

// Carries a failed kc_status out to main.
struct ApiError : std::runtime_error {
  kc_status status;
  ApiError(kc_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(kc_status s) {
  if (s != KC_OK) throw ApiError(s, kc_last_error());
}

CurveSet load(const std::string& path) {
  kc_curveset* raw = nullptr;
  check(kc_curveset_load(path.c_str(), &raw));
  return CurveSet(raw);
}

kc_metric parse_metric(const std::string& name) {
  if (name == "discrete") return KC_DISCRETE;
  if (name == "continuous") return KC_CONTINUOUS;
  throw ApiError(KC_INVALID_ARGUMENT, "unknown metric '" + name + "'");
}

json curve_json(const kc_curveset* set, std::size_t i) {
  std::size_t n = 0;
  check(kc_curveset_vertex_count(set, i, &n));
  const std::size_t d = kc_curveset_dim(set);
  std::vector<double> coords(n * d);
  check(kc_curveset_coords(set, i, coords.data(), coords.size()));
  json points = json::array();
  for (std::size_t v = 0; v < n; ++v) {
    points.push_back(std::vector<double>(coords.begin() + static_cast<std::ptrdiff_t>(v * d),
                                         coords.begin() + static_cast<std::ptrdiff_t>((v + 1) * d)));
  }
  return {{"id", kc_curveset_id(set, i)}, {"points", points}};
}

json curves_json(const kc_curveset* set) {
  json out = json::array();
  for (std::size_t i = 0; i < kc_curveset_size(set); ++i) out.push_back(curve_json(set, i));
  return out;
}

json cluster_json(const kc_cluster* c) {
  std::vector<std::size_t> assignment(kc_cluster_assignment(c, nullptr, 0));
  kc_cluster_assignment(c, assignment.data(), assignment.size());
  std::vector<double> history(kc_cluster_history(c, nullptr, 0));
  kc_cluster_history(c, history.data(), history.size());
  return {{"centers", curves_json(kc_cluster_centers(c))},
          {"assignment", assignment},
          {"radius", kc_cluster_radius(c)},
          {"history", history},
          {"decider_calls", kc_cluster_decider_calls(c)}};
}

void emit_geojson(const std::string& path, std::vector<std::pair<const kc_curveset*, const char*>> layers) {
  if (path.empty()) return;
  std::vector<const kc_curveset*> sets;
  std::vector<const char*> roles;
  for (const auto& [set, role] : layers) {
    sets.push_back(set);
    roles.push_back(role);
  }
  check(kc_write_geojson_layers(sets.data(), roles.data(), sets.size(), path.c_str()));
}

double default_tolerance() {
  const char* env = std::getenv("FRECHET_TOL");
  if (!env || !*env) return 1e-9;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (*end != '\0' || !(tol > 0.0)) throw ApiError(KC_INVALID_ARGUMENT, std::string("bad FRECHET_TOL '") + env + "'");
  return tol;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

struct Options {
  std::string metric = "discrete";
  std::string geojson;
  std::optional<double> tol;
  std::vector<std::string> files;
  std::string mode = "min-size";
  std::optional<double> delta;
  std::optional<std::size_t> ell;
  std::size_t k = 1;
  bool search = false;
  std::string out;
  std::string variant;
  int t = 0;
  std::optional<int> j, jp;
  std::string superstring;
  std::optional<int> s;
  double radius = 2.5;
};

double tolerance(const Options& o) { return o.tol ? *o.tol : default_tolerance(); }

int run_distance(const Options& o) {
  CurveSet a = load(o.files.at(0));
  CurveSet b = o.files.size() > 1 ? load(o.files[1]) : nullptr;
  const kc_curveset* rhs = b ? b.get() : a.get();
  const std::size_t rows = kc_curveset_size(a.get()), cols = kc_curveset_size(rhs);
  std::vector<double> m(rows * cols);
  check(kc_distance_matrix(a.get(), rhs, parse_metric(o.metric), tolerance(o), m.data()));
  json matrix = json::array();
  for (std::size_t i = 0; i < rows; ++i) {
    matrix.push_back(std::vector<double>(m.begin() + static_cast<std::ptrdiff_t>(i * cols),
                                         m.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols)));
  }
  json row_ids = json::array(), col_ids = json::array();
  for (std::size_t i = 0; i < rows; ++i) row_ids.push_back(kc_curveset_id(a.get(), i));
  for (std::size_t i = 0; i < cols; ++i) col_ids.push_back(kc_curveset_id(rhs, i));
  print({{"metric", o.metric}, {"rows", row_ids}, {"cols", col_ids}, {"matrix", matrix}});
  emit_geojson(o.geojson, {{a.get(), "input"}});
  return kExitOk;
}

int run_simplify(const Options& o) {
  CurveSet in = load(o.files.at(0));
  const kc_metric metric = parse_metric(o.metric);
  if (o.mode == "min-size" && !o.delta) throw ApiError(KC_INVALID_ARGUMENT, "min-size needs --delta");
  if (o.mode == "min-error" && !o.ell) throw ApiError(KC_INVALID_ARGUMENT, "min-error needs --ell");
  if (o.mode != "min-size" && o.mode != "min-error") throw ApiError(KC_INVALID_ARGUMENT, "unknown mode '" + o.mode + "'");
  kc_curveset* raw = nullptr;
  check(kc_curveset_create(kc_curveset_dim(in.get()), &raw));
  CurveSet simplified(raw);
  json results = json::array();
  for (std::size_t i = 0; i < kc_curveset_size(in.get()); ++i) {
    kc_curveset* one = nullptr;
    double error = 0.0;
    if (o.mode == "min-size") {
      check(kc_simplify_min_size(in.get(), i, metric, *o.delta, tolerance(o), &one, &error));
    } else {
      check(kc_simplify_min_error(in.get(), i, metric, *o.ell, tolerance(o), &one, &error));
    }
    CurveSet owned(one);
    json c = curve_json(owned.get(), 0);
    std::size_t n = 0;
    check(kc_curveset_vertex_count(owned.get(), 0, &n));
    std::vector<double> coords(n * kc_curveset_dim(owned.get()));
    check(kc_curveset_coords(owned.get(), 0, coords.data(), coords.size()));
    check(kc_curveset_add(simplified.get(), kc_curveset_id(owned.get(), 0), coords.data(), n));
    c["error"] = error;
    c["complexity"] = n;
    results.push_back(c);
  }
  if (!o.out.empty()) check(kc_curveset_save(simplified.get(), o.out.c_str()));
  print({{"mode", o.mode}, {"metric", o.metric}, {"curves", results}});
  emit_geojson(o.geojson, {{in.get(), "input"}, {simplified.get(), "simplified"}});
  return kExitOk;
}

kc_cluster_params cluster_params(const Options& o) {
  return kc_cluster_params{o.k, o.ell.value_or(2), parse_metric(o.metric), tolerance(o)};
}

int run_cluster(const Options& o) {
  CurveSet in = load(o.files.at(0));
  const kc_cluster_params p = cluster_params(o);
  kc_cluster* raw = nullptr;
  check(o.search ? kc_cluster_search(in.get(), &p, &raw) : kc_cluster_gonzalez(in.get(), &p, &raw));
  Cluster c(raw);
  if (!o.out.empty()) check(kc_curveset_save(kc_cluster_centers(c.get()), o.out.c_str()));
  print(cluster_json(c.get()));
  emit_geojson(o.geojson, {{in.get(), "input"}, {kc_cluster_centers(c.get()), "center"}});
  return kExitOk;
}

int run_decide(const Options& o) {
  CurveSet in = load(o.files.at(0));
  const kc_cluster_params p = cluster_params(o);
  kc_cluster* raw = nullptr;
  const kc_status s = kc_cluster_decide(in.get(), &p, *o.delta, &raw);
  if (s == KC_INFEASIBLE) {
    print({{"answer", "no"}, {"delta", *o.delta}});
    return kExitNo;
  }
  check(s);
  Cluster c(raw);
  json out = cluster_json(c.get());
  out["answer"] = "yes";
  out["delta"] = *o.delta;
  print(out);
  emit_geojson(o.geojson, {{in.get(), "input"}, {kc_cluster_centers(c.get()), "center"}});
  return kExitOk;
}

std::vector<std::string> read_strings(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ApiError(KC_IO, "cannot open '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    out.push_back(line.substr(b, line.find_last_not_of(" \t\r") - b + 1));
  }
  return out;
}

int run_gen_hard(const Options& o) {
  if (o.out.empty()) throw ApiError(KC_INVALID_ARGUMENT, "gen-hard needs --out DIR");
  const std::vector<std::string> strings = read_strings(o.files.at(0));
  std::vector<const char*> ptrs;
  for (const std::string& s : strings) ptrs.push_back(s.c_str());
  const bool meb = o.variant.rfind("meb-", 0) == 0;
  if (meb && (!o.j || !o.jp)) throw ApiError(KC_INVALID_ARGUMENT, "meb variants need --j and --jp");
  kc_instance* raw = nullptr;
  check(kc_instance_generate(o.variant.c_str(), ptrs.data(), ptrs.size(), o.t, o.j.value_or(0), o.jp.value_or(0),
                             &raw));
  Instance inst(raw);
  check(kc_instance_save(inst.get(), o.out.c_str()));
  kc_instance_params params{};
  check(kc_instance_get_params(inst.get(), &params));
  json out{{"variant", kc_instance_variant(inst.get())},
           {"dir", o.out},
           {"curves", kc_curveset_size(kc_instance_curves(inst.get()))},
           {"t", params.t},
           {"s", params.s},
           {"ell", params.ell},
           {"target_radius", params.target_radius},
           {"gap_radius", params.gap_radius}};
  CurveSet center;
  if (!o.superstring.empty()) {
    kc_curveset* c = nullptr;
    check(kc_instance_center(inst.get(), o.superstring.c_str(), &c));
    center.reset(c);
    const std::string path = o.out + "/center.curves";
    check(kc_curveset_save(center.get(), path.c_str()));
    out["center"] = path;
  }
  print(out);
  std::vector<std::pair<const kc_curveset*, const char*>> layers{{kc_instance_curves(inst.get()), "gadget"}};
  if (center) layers.emplace_back(center.get(), "center");
  emit_geojson(o.geojson, layers);
  return kExitOk;
}

int run_extract(const Options& o) {
  CurveSet centers = load(o.files.at(0));
  const bool planar = o.variant.rfind("2d-", 0) == 0;
  if (planar && !o.s) throw ApiError(KC_INVALID_ARGUMENT, "2d variants need --s");
  json out = json::array();
  for (std::size_t i = 0; i < kc_curveset_size(centers.get()); ++i) {
    std::size_t needed = 0;
    check(kc_extract_superstring(o.variant.c_str(), centers.get(), i, o.radius, o.s.value_or(0), nullptr, 0, &needed));
    std::string buf(needed, '\0');
    check(kc_extract_superstring(o.variant.c_str(), centers.get(), i, o.radius, o.s.value_or(0), buf.data(),
                                 buf.size(), &needed));
    buf.resize(needed - 1);
    out.push_back({{"id", kc_curveset_id(centers.get(), i)}, {"superstring", buf}});
  }
  print(out);
  emit_geojson(o.geojson, {{centers.get(), "center"}});
  return kExitOk;
}

int run_verify(const Options& o) {
  kc_instance* raw = nullptr;
  check(kc_instance_load(o.files.at(0).c_str(), &raw));
  Instance inst(raw);
  CurveSet centers = load(o.files.at(1));
  int ok = 0;
  double radius = 0.0;
  check(kc_instance_verify(inst.get(), centers.get(), 0, *o.delta, tolerance(o), &ok, &radius));
  print({{"ok", ok == 1}, {"radius", radius}, {"delta", *o.delta}});
  emit_geojson(o.geojson, {{kc_instance_curves(inst.get()), "gadget"}, {centers.get(), "center"}});
  return ok ? kExitOk : kExitNo;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--emit-geojson", o.geojson, "Write the curves involved as a GeoJSON FeatureCollection");
  sub->add_option("--tol", o.tol, "Continuous Fréchet tolerance (default: $FRECHET_TOL or 1e-9)")
      ->check(CLI::PositiveNumber);
}

void add_metric(CLI::App* sub, Options& o) {
  sub->add_option("--metric", o.metric, "discrete or continuous")
      ->check(CLI::IsMember({"discrete", "continuous"}))
      ->capture_default_str();
}

const std::vector<std::string> kVariants{"1d-discrete",   "1d-continuous", "2d-discrete",
                                         "2d-continuous", "meb-discrete",  "meb-continuous"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(k,l)-center clustering of polygonal curves under the Fréchet distance"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kc_version());
  Options o;

  CLI::App* distance = app.add_subcommand("distance", "Pairwise distance matrix as JSON");
  add_metric(distance, o);
  distance->add_option("files", o.files, "a.curves [b.curves]; b defaults to a")->required()->expected(1, 2);
  add_common(distance, o);

  CLI::App* simplify = app.add_subcommand("simplify", "Simplify every curve of a file");
  simplify->add_option("--mode", o.mode, "min-size or min-error")
      ->check(CLI::IsMember({"min-size", "min-error"}))
      ->capture_default_str();
  simplify->add_option("--delta", o.delta, "Error bound for min-size")->check(CLI::NonNegativeNumber);
  simplify->add_option("--ell", o.ell, "Vertex budget for min-error");
  add_metric(simplify, o);
  simplify->add_option("--out", o.out, "Write simplified curves to this file");
  simplify->add_option("file", o.files, "Input curves")->required()->expected(1);
  add_common(simplify, o);

  CLI::App* cluster = app.add_subcommand("cluster", "(k,l)-center clustering");
  cluster->add_option("--k", o.k, "Number of centers")->capture_default_str();
  cluster->add_option("--ell", o.ell, "Center complexity")->required();
  add_metric(cluster, o);
  cluster->add_flag("--search", o.search, "Refine the farthest-first result with the decider ladder");
  cluster->add_option("--out", o.out, "Write centers to this file");
  cluster->add_option("file", o.files, "Input curves")->required()->expected(1);
  add_common(cluster, o);

  CLI::App* decide = app.add_subcommand("decide", "Approximate decision: is the optimum at most delta?");
  decide->add_option("--k", o.k, "Number of centers")->capture_default_str();
  decide->add_option("--ell", o.ell, "Center complexity")->required();
  decide->add_option("--delta", o.delta, "Radius to test")->required()->check(CLI::NonNegativeNumber);
  add_metric(decide, o);
  decide->add_option("file", o.files, "Input curves")->required()->expected(1);
  add_common(decide, o);

  CLI::App* gen = app.add_subcommand("gen-hard", "Generate a hard instance from SCS strings");
  gen->add_option("--variant", o.variant, "Construction")->required()->check(CLI::IsMember(kVariants));
  gen->add_option("--t", o.t, "Supersequence length bound")->required();
  gen->add_option("--j", o.j, "A^j repetitions (meb variants)");
  gen->add_option("--jp", o.jp, "B^jp repetitions (meb variants)");
  gen->add_option("--out", o.out, "Instance directory")->required();
  gen->add_option("--superstring", o.superstring, "Also write the canonical center of this supersequence");
  gen->add_option("file", o.files, "Strings over {A,B}, one per line")->required()->expected(1);
  add_common(gen, o);

  CLI::App* extract = app.add_subcommand("extract", "Recover a supersequence from a center curve");
  extract->add_option("--variant", o.variant, "Construction")->required()->check(CLI::IsMember(kVariants));
  extract->add_option("--s", o.s, "Gadget repetition (2d variants)");
  extract->add_option("--radius", o.radius, "Disk radius (2d variants)")->capture_default_str();
  extract->add_option("file", o.files, "Center curves")->required()->expected(1);
  add_common(extract, o);

  CLI::App* verify = app.add_subcommand("verify", "Check a center against an instance");
  verify->add_option("--delta", o.delta, "Radius to verify")->required()->check(CLI::NonNegativeNumber);
  verify->add_option("files", o.files, "instance-dir center.curves")->required()->expected(2);
  add_common(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*distance) return run_distance(o);
    if (*simplify) return run_simplify(o);
    if (*cluster) return run_cluster(o);
    if (*decide) return run_decide(o);
    if (*gen) return run_gen_hard(o);
    if (*extract) return run_extract(o);
    if (*verify) return run_verify(o);
  } catch (const ApiError& e) {
    std::cerr << "klcenter: " << kc_status_name(e.status) << ": " << e.what() << '\n';
    return e.status == KC_INFEASIBLE ? kExitNo : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "klcenter: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
