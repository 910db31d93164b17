#include "curve_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace klcenter::io {

namespace {

using nlohmann::json;

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

void check_uniform_dim(const std::vector<PolyCurve>& curves, const std::string& source) {
  for (const PolyCurve& c : curves) {
    if (c.dim() != curves.front().dim()) {
      throw ParseError(source + ": curve '" + c.id() + "' has dimension " + std::to_string(c.dim()) +
                       ", expected " + std::to_string(curves.front().dim()));
    }
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<PolyCurve> parse_curves(std::istream& in, const std::string& source) {
  std::vector<PolyCurve> curves;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const std::string where = source + ":" + std::to_string(lineno);
    try {
      const json rec = json::parse(line);
      if (!rec.is_object() || !rec.contains("points")) throw ParseError(where + ": expected {\"id\", \"points\"}");
      std::string id = rec.contains("id") ? rec.at("id").get<std::string>() : "curve" + std::to_string(curves.size());
      const json& pts = rec.at("points");
      if (!pts.is_array() || pts.empty()) throw ParseError(where + ": points must be a non-empty array");
      std::vector<Point> vertices;
      vertices.reserve(pts.size());
      for (const json& p : pts) {
        if (!p.is_array() || p.empty()) throw ParseError(where + ": each point must be a non-empty array");
        std::vector<double> coords;
        for (const json& x : p) {
          if (!x.is_number()) throw ParseError(where + ": coordinates must be numbers");
          coords.push_back(x.get<double>());
        }
        vertices.emplace_back(std::move(coords));
      }
      curves.emplace_back(std::move(id), std::move(vertices));
    } catch (const json::exception& e) {
      throw ParseError(where + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (curves.empty()) throw ParseError(source + ": no curves");
  check_uniform_dim(curves, source);
  return curves;
}

std::vector<PolyCurve> read_curves(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  return parse_curves(in, path.string());
}

void write_curves(std::ostream& out, const std::vector<PolyCurve>& curves) {
  for (const PolyCurve& c : curves) {
    out << "{\"id\":" << json(c.id()).dump() << ",\"points\":[";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out << ',';
      out << '[';
      for (std::size_t k = 0; k < c.dim(); ++k) {
        if (k) out << ',';
        out << format_double(c[i][k]);
      }
      out << ']';
    }
    out << "]}\n";
  }
}

void write_curves(const std::filesystem::path& path, const std::vector<PolyCurve>& curves) {
  std::ofstream out = open_out(path);
  write_curves(out, curves);
}

std::vector<PolyCurve> parse_csv(std::istream& in, const std::string& source) {
  std::vector<std::string> order;
  std::unordered_map<std::string, std::vector<Point>> groups;
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (fields.size() < 2) throw ParseError(source + ":" + std::to_string(lineno) + ": need id and coordinates");
    std::vector<double> coords;
    bool numeric = true;
    for (std::size_t i = 1; i < fields.size() && numeric; ++i) {
      try {
        std::size_t used = 0;
        coords.push_back(std::stod(fields[i], &used));
        numeric = used == fields[i].size();
      } catch (const std::exception&) {
        numeric = false;
      }
    }
    if (!numeric) {
      if (first) {
        first = false;
        continue;
      }
      throw ParseError(source + ":" + std::to_string(lineno) + ": non-numeric coordinate");
    }
    first = false;
    if (!groups.count(fields[0])) order.push_back(fields[0]);
    groups[fields[0]].emplace_back(std::move(coords));
  }
  std::vector<PolyCurve> curves;
  try {
    for (const std::string& id : order) curves.emplace_back(id, std::move(groups[id]));
  } catch (const std::invalid_argument& e) {
    throw ParseError(source + ": " + e.what());
  }
  if (curves.empty()) throw ParseError(source + ": no curves");
  check_uniform_dim(curves, source);
  return curves;
}

std::vector<PolyCurve> load_curves(const std::filesystem::path& path) {
  if (path.extension() == ".csv") {
    std::ifstream in = open_in(path);
    return parse_csv(in, path.string());
  }
  return read_curves(path);
}

void write_geojson(const std::filesystem::path& path, const std::vector<PolyCurve>& curves,
                   const std::string& role) {
  write_geojson(path, std::vector<GeoLayer>{{&curves, role}});
}

void write_geojson(const std::filesystem::path& path, const std::vector<GeoLayer>& layers) {
  json features = json::array();
  for (const GeoLayer& layer : layers) {
    for (const PolyCurve& c : *layer.curves) {
      json coords = json::array();
      for (const Point& p : c.vertices()) {
        coords.push_back(json::array({p[0], p.dim() > 1 ? p[1] : 0.0}));
      }
      json geometry = c.size() == 1 ? json{{"type", "Point"}, {"coordinates", coords[0]}}
                                    : json{{"type", "LineString"}, {"coordinates", coords}};
      features.push_back(
          {{"type", "Feature"}, {"geometry", geometry}, {"properties", {{"id", c.id()}, {"role", layer.role}}}});
    }
  }
  std::ofstream out = open_out(path);
  out << json{{"type", "FeatureCollection"}, {"features", features}}.dump(2) << '\n';
}

std::vector<std::string> read_strings(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

void save_instance(const std::filesystem::path& dir, const HardInstance& hi) {
  std::filesystem::create_directories(dir);
  write_curves(dir / "curves.jsonl", hi.curves);
  const json meta{{"variant", std::string(variant_name(hi.variant))},
                  {"t", hi.t},
                  {"s", hi.s},
                  {"ell", hi.ell},
                  {"target_radius", hi.target_radius},
                  {"gap_radius", hi.gap_radius}};
  std::ofstream out = open_out(dir / "instance.json");
  out << meta.dump(2) << '\n';
}

HardInstance load_instance(const std::filesystem::path& dir) {
  std::ifstream in = open_in(dir / "instance.json");
  HardInstance hi;
  try {
    const json meta = json::parse(in);
    hi.variant = parse_variant(meta.at("variant").get<std::string>());
    hi.t = meta.at("t").get<int>();
    hi.s = meta.at("s").get<int>();
    hi.ell = meta.at("ell").get<std::size_t>();
    hi.target_radius = meta.at("target_radius").get<double>();
    hi.gap_radius = meta.at("gap_radius").get<double>();
  } catch (const json::exception& e) {
    throw ParseError((dir / "instance.json").string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError((dir / "instance.json").string() + ": " + e.what());
  }
  hi.curves = read_curves(dir / "curves.jsonl");
  return hi;
}

}  // namespace klcenter::io
