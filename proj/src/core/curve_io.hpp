#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "frechet.hpp"
#include "hardness.hpp"

namespace klcenter::io {

/// Malformed input file; what() carries the source and line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file that cannot be opened or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Curve files are JSON lines: {"id": "...", "points": [[x, y], ...]} per
// record, every record of one dimension. Coordinates are written with 17
// significant digits so reading back is bit-exact.

std::vector<PolyCurve> parse_curves(std::istream& in, const std::string& source = "<stream>");
std::vector<PolyCurve> read_curves(const std::filesystem::path& path);
void write_curves(std::ostream& out, const std::vector<PolyCurve>& curves);
void write_curves(const std::filesystem::path& path, const std::vector<PolyCurve>& curves);

/// Rows "id,x[,y...]" grouped by id in order of first appearance. A leading
/// row with non-numeric coordinates is taken as a header.
std::vector<PolyCurve> parse_csv(std::istream& in, const std::string& source = "<stream>");

/// JSON lines, or CSV when the extension is .csv.
std::vector<PolyCurve> load_curves(const std::filesystem::path& path);

/// Formats a double with 17 significant digits.
std::string format_double(double v);

/// GeoJSON FeatureCollection of LineStrings (1D curves get y = 0);
/// each feature carries {"id", "role"} properties.
void write_geojson(const std::filesystem::path& path, const std::vector<PolyCurve>& curves,
                   const std::string& role);

struct GeoLayer {
  const std::vector<PolyCurve>* curves;
  std::string role;
};

/// Several curve sets in one FeatureCollection, in layer order.
void write_geojson(const std::filesystem::path& path, const std::vector<GeoLayer>& layers);

/// One string per non-empty line; '#' starts a comment line.
std::vector<std::string> read_strings(const std::filesystem::path& path);

/// Instance directories hold curves.jsonl plus instance.json with
/// {variant, t, s, ell, target_radius, gap_radius}.
void save_instance(const std::filesystem::path& dir, const HardInstance& hi);
HardInstance load_instance(const std::filesystem::path& dir);

}  // namespace klcenter::io
