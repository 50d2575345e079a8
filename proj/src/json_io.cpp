#include "latfold/json_io.hpp"

#include "latfold/shapes.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace latfold {

namespace {

std::vector<Point> points_from_json(const json& j) {
  require(j.is_array(), Errc::bad_input, "expected an array of points");
  std::vector<Point> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(point_from_json(e));
  return out;
}

json points_to_json(const std::vector<Point>& pts) {
  json out = json::array();
  for (const Point& p : pts) out.push_back(point_to_json(p));
  return out;
}

}  // namespace

json point_to_json(const Point& p) {
  json out = json::array();
  for (int i = 0; i < p.dim; ++i) out.push_back(p[i]);
  return out;
}

Point point_from_json(const json& j) {
  require(j.is_array() && !j.empty() && j.size() <= kMaxDim, Errc::bad_input,
          "a point is an array of 1 to " + std::to_string(kMaxDim) + " integers");
  std::vector<i64> v;
  for (const auto& e : j) {
    require(e.is_number_integer(), Errc::bad_input, "point coordinates must be integers");
    v.push_back(e.get<i64>());
  }
  return Point::from(v);
}

json shape_to_json(const Shape& s) {
  return json{{"dim", s.dim},
              {"points", points_to_json(s.points)},
              {"center", point_to_json(s.center)}};
}

Shape shape_from_json(const json& j) {
  if (j.is_array()) return Shape::of(point_from_json(j.at(0)).dim, points_from_json(j));
  require(j.is_object() && j.contains("points"), Errc::bad_input,
          "a shape is {\"dim\", \"points\", optional \"center\"} or a bare point list");
  std::vector<Point> pts = points_from_json(j.at("points"));
  require(!pts.empty(), Errc::bad_input, "a shape needs at least one point");
  int dim = j.contains("dim") ? j.at("dim").get<int>() : pts.front().dim;
  std::optional<Point> center;
  if (j.contains("center")) center = point_from_json(j.at("center"));
  return Shape::of(dim, std::move(pts), center);
}

json lattice_to_json(const Lattice& lat) {
  return json{{"dim", lat.dim()}, {"gen", lat.gen().to_rows()}};
}

Lattice lattice_from_json(const json& j) {
  if (j.is_array()) return Lattice::from_rows(j.get<std::vector<std::vector<i64>>>());
  require(j.is_object() && j.contains("gen"), Errc::bad_input,
          "a lattice is {\"dim\", \"gen\"} or a bare row matrix");
  return Lattice::from_rows(j.at("gen").get<std::vector<std::vector<i64>>>());
}

json b2_to_json(const B2Set& b) {
  return json{{"n", b.n}, {"elements", b.elements}};
}

B2Set b2_from_json(const json& j) {
  require(j.is_object() && j.contains("n") && j.contains("elements"), Errc::bad_input,
          "a difference set is {\"n\", \"elements\"}");
  B2Set b;
  b.n = j.at("n").get<i64>();
  b.elements = j.at("elements").get<std::vector<i64>>();
  std::sort(b.elements.begin(), b.elements.end());
  return b;
}

json dot_pattern_to_json(const DotPattern& dp) {
  return json{{"shape", shape_to_json(dp.shape)}, {"dots", points_to_json(dp.dots)}};
}

DotPattern dot_pattern_from_json(const json& j) {
  require(j.is_object() && j.contains("shape") && j.contains("dots"), Errc::bad_input,
          "a dot pattern is {\"shape\", \"dots\"}");
  DotPattern dp;
  dp.shape = shape_from_json(j.at("shape"));
  dp.dots = points_from_json(j.at("dots"));
  std::sort(dp.dots.begin(), dp.dots.end());
  for (const Point& d : dp.dots)
    require(dp.shape.contains(d), Errc::bad_input, "dot " + to_string(d) + " outside the shape");
  return dp;
}

json periodic_pattern_to_json(const PeriodicPattern& pp) {
  return json{{"period", pp.period}, {"dots", points_to_json(pp.dots)}};
}

PeriodicPattern periodic_pattern_from_json(const json& j) {
  require(j.is_object() && j.contains("period") && j.contains("dots"), Errc::bad_input,
          "a periodic pattern is {\"period\", \"dots\"}");
  PeriodicPattern pp;
  pp.period = j.at("period").get<std::vector<i64>>();
  require(!pp.period.empty() && pp.period.size() <= kMaxDim, Errc::bad_input,
          "period must list 1 to " + std::to_string(kMaxDim) + " extents");
  for (i64 e : pp.period)
    require(e >= 1, Errc::bad_input, "period extents must be positive");
  pp.dim = static_cast<int>(pp.period.size());
  pp.dots = points_from_json(j.at("dots"));
  for (Point& d : pp.dots) {
    require(d.dim == pp.dim, Errc::dim_mismatch, "dot dimension mismatch");
    d = pp.wrap(d);
  }
  std::sort(pp.dots.begin(), pp.dots.end());
  pp.dots.erase(std::unique(pp.dots.begin(), pp.dots.end()), pp.dots.end());
  return pp;
}

json burst_code_to_json(const BurstCode& code) {
  json out;
  if (!code.dims().empty()) out["dims"] = code.dims();
  if (code.shape()) out["shape"] = shape_to_json(*code.shape());
  out["m"] = code.m();
  out["d"] = code.d();
  out["redundancy"] = code.redundancy();
  out["modulus"] = code.field().modulus();
  out["phi"] = code.phi();
  out["cells"] = points_to_json(code.cells());
  out["exponents"] = code.exponents();
  out["padding"] = points_to_json(code.padding());
  json cols = json::array();
  for (size_t i = 0; i < code.cells().size(); ++i) {
    std::ostringstream os;
    os << std::hex << code.column(i);
    cols.push_back(os.str());
  }
  out["columns"] = cols;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Errc::bad_input, "cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json parse_json_arg(const std::string& arg) {
  std::string text = arg;
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (text[first] != '[' && text[first] != '{'))
    text = read_file(arg);
  json j = json::parse(text, nullptr, false);
  require(!j.is_discarded(), Errc::bad_input, "malformed JSON argument");
  return j;
}

Lattice parse_lattice_arg(const std::string& arg) {
  return lattice_from_json(parse_json_arg(arg));
}

Shape parse_shape_arg(const std::string& arg) {
  if (arg.find(':') != std::string::npos && arg.find('{') == std::string::npos &&
      arg.find('[') == std::string::npos)
    return parse_shape_spec(arg);
  return shape_from_json(parse_json_arg(arg));
}

PeriodicPattern parse_pattern_arg(const std::string& arg) {
  return periodic_pattern_from_json(parse_json_arg(arg));
}

B2Set parse_b2_arg(const std::string& arg) {
  return b2_from_json(parse_json_arg(arg));
}

Point parse_point_arg(const std::string& arg) {
  std::vector<i64> v;
  std::string cur;
  std::istringstream is(arg);
  while (std::getline(is, cur, ',')) {
    try {
      size_t used = 0;
      v.push_back(std::stoll(cur, &used));
      while (used < cur.size() && std::isspace(static_cast<unsigned char>(cur[used]))) ++used;
      require(used == cur.size(), Errc::bad_input, "bad coordinate '" + cur + "'");
    } catch (const std::logic_error&) {
      fail(Errc::bad_input, "bad coordinate '" + cur + "'");
    }
  }
  require(!v.empty() && v.size() <= kMaxDim, Errc::bad_input,
          "a point is 1 to " + std::to_string(kMaxDim) + " comma separated integers");
  return Point::from(v);
}

}  // namespace latfold
