#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latfold/bounds.hpp"
#include "latfold/burst.hpp"
#include "latfold/ddc.hpp"
#include "latfold/fields.hpp"
#include "latfold/folding.hpp"
#include "latfold/prarray.hpp"
#include "latfold/shapes.hpp"

namespace py = pybind11;
using namespace latfold;

namespace {

using Rows = std::vector<std::vector<i64>>;
using PointList = std::vector<std::vector<i64>>;

Point point_of(const std::vector<i64>& v) { return Point::from(v); }

std::vector<Point> points_of(const PointList& pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(Point::from(p));
  return out;
}

PointList points_out(const std::vector<Point>& pts) {
  PointList out;
  out.reserve(pts.size());
  for (const Point& p : pts) out.push_back(p.to_vector());
  return out;
}

Shape shape_of(const PointList& pts) {
  std::vector<Point> v = points_of(pts);
  require(!v.empty(), Errc::bad_input, "a shape needs at least one point");
  int dim = v.front().dim;
  return Shape::of(dim, std::move(v));
}

Tiling tiling_of(const Rows& gen, const PointList& shape) {
  Lattice lat = Lattice::from_rows(gen);
  return Tiling::of(lat, shape.empty() ? coset_box_shape(lat) : shape_of(shape));
}

std::string bits_string(const std::vector<uint8_t>& bits) {
  std::string out;
  out.reserve(bits.size());
  for (uint8_t b : bits) out.push_back(char('0' + b));
  return out;
}

std::vector<uint8_t> bits_of(const std::string& s) {
  std::vector<uint8_t> out;
  out.reserve(s.size());
  for (char c : s) {
    require(c == '0' || c == '1', Errc::bad_input, "bits must be 0 or 1");
    out.push_back(static_cast<uint8_t>(c - '0'));
  }
  return out;
}

py::dict family_dict(const FamilyInstance& inst) {
  py::dict d;
  d["family"] = family_name(inst.family);
  d["p"] = inst.p;
  d["n1"] = inst.n1;
  d["n2"] = inst.n2;
  d["lattice"] = inst.lat.gen().to_rows();
  d["shape"] = points_out(inst.shape.points);
  d["delta"] = inst.delta.to_vector();
  d["b2"] = inst.b2.elements;
  d["dots"] = points_out(inst.pattern.dots);
  d["period"] = inst.periodic.period;
  d["periodic_dots"] = points_out(inst.periodic.dots);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "sequence folding over integer lattice tilings";

  m.def("volume", [](const Rows& gen) { return Lattice::from_rows(gen).volume(); },
        py::arg("lattice"), "absolute determinant of the generator matrix");

  m.def("coset_box", [](const Rows& gen) {
          return points_out(coset_box_shape(Lattice::from_rows(gen)).points);
        },
        py::arg("lattice"), "canonical coset representative box, always a tile");

  m.def("is_folding",
        [](const Rows& gen, const std::vector<i64>& delta) {
          return is_folding_ddim(Lattice::from_rows(gen), point_of(delta)).folds;
        },
        py::arg("lattice"), py::arg("delta"));

  m.def("folding_certificate",
        [](const Rows& gen, const std::vector<i64>& delta) {
          FoldingCertificate c = is_folding_ddim(Lattice::from_rows(gen), point_of(delta));
          py::dict d;
          d["folds"] = c.folds;
          d["reason"] = c.reason;
          d["volume"] = c.volume;
          d["tau"] = c.tau;
          d["alpha"] = c.alpha;
          return d;
        },
        py::arg("lattice"), py::arg("delta"));

  m.def("folded_row",
        [](const Rows& gen, const PointList& shape, const std::vector<i64>& delta) {
          return points_out(folded_row(tiling_of(gen, shape), point_of(delta)));
        },
        py::arg("lattice"), py::arg("shape"), py::arg("delta"),
        "visited cells in walk order; pass an empty shape for the coset box");

  m.def("folded_indices",
        [](const Rows& gen, const PointList& shape, const std::vector<i64>& delta) {
          Tiling t = tiling_of(gen, shape);
          py::dict d;
          d["cells"] = points_out(t.shape().points);
          d["indices"] = folded_indices(t, point_of(delta));
          return d;
        },
        py::arg("lattice"), py::arg("shape"), py::arg("delta"));

  m.def("folding_classes",
        [](const Rows& gen, const PointList& shape) {
          FoldingEnumeration en = enumerate_foldings(tiling_of(gen, shape));
          py::dict d;
          d["classes"] = en.classes.size();
          d["directions_tested"] = en.directions_tested;
          d["directions_folding"] = en.directions_folding;
          return d;
        },
        py::arg("lattice"), py::arg("shape"));

  m.def("euler_phi", &euler_phi, py::arg("n"));

  m.def("parse_shape", [](const std::string& spec) {
          return points_out(parse_shape_spec(spec).points);
        },
        py::arg("spec"), "rect:R,C / strip:N / corner:H,W,h2,w2 / flippedt:h,w1,w2,w3 / hexsphere:R");

  m.def("hex_sphere_count", &hex_sphere_count, py::arg("radius"));

  m.def("bose",
        [](i64 q) {
          B2Set b = bose_b2(q);
          return py::make_tuple(b.n, b.elements);
        },
        py::arg("q"), "Sidon set of size q in Z_{q^2-1}");

  m.def("verify_b2",
        [](i64 n, const std::vector<i64>& elements) {
          B2Check chk = verify_b2(B2Set{n, elements});
          return py::make_tuple(chk.ok, chk.reason);
        },
        py::arg("n"), py::arg("elements"));

  m.def("msequence",
        [](int n, std::optional<uint32_t> poly) {
          MSequence seq = msequence(n, poly);
          return py::make_tuple(bits_string(seq.bits), seq.poly);
        },
        py::arg("n"), py::arg("poly") = std::nullopt);

  m.def("fold_bits",
        [](const Rows& gen, const PointList& shape, const std::vector<i64>& delta,
           const std::string& bits) {
          Tiling t = tiling_of(gen, shape);
          FoldedArray fa = fold_bits(Coloring::of(t, point_of(delta)), bits_of(bits));
          py::dict d;
          d["cells"] = points_out(fa.shape().points);
          d["bits"] = bits_string(fa.bits);
          return d;
        },
        py::arg("lattice"), py::arg("shape"), py::arg("delta"), py::arg("bits"));

  m.def("construct_family",
        [](const std::string& family, i64 p, std::optional<i64> n1, std::optional<i64> w2) {
          return family_dict(construct_ddc_family(parse_family(family),
                                                  FamilyParams{p, n1, w2}));
        },
        py::arg("family"), py::arg("p"), py::arg("n1") = std::nullopt,
        py::arg("w2") = std::nullopt);

  m.def("verify_ddc",
        [](const PointList& dots) {
          DdcCheck chk = verify_ddc(points_of(dots));
          return py::make_tuple(chk.ok, chk.reason);
        },
        py::arg("dots"));

  m.def("verify_periodic_sddc",
        [](const std::vector<i64>& period, const PointList& dots, const PointList& shape,
           i64 budget) {
          PeriodicPattern pp;
          pp.dim = static_cast<int>(period.size());
          pp.period = period;
          for (const auto& v : dots) pp.dots.push_back(pp.wrap(Point::from(v)));
          std::sort(pp.dots.begin(), pp.dots.end());
          pp.dots.erase(std::unique(pp.dots.begin(), pp.dots.end()), pp.dots.end());
          DdcCheck chk = verify_periodic_sddc(pp, shape_of(shape), budget);
          return py::make_tuple(chk.ok, chk.reason);
        },
        py::arg("period"), py::arg("dots"), py::arg("shape"),
        py::arg("budget") = 1'000'000);

  m.def("burst_box",
        [](const std::vector<i64>& dims) {
          BurstCode code = BurstCode::of_box(dims);
          py::dict d;
          d["m"] = code.m();
          d["d"] = code.d();
          d["redundancy"] = code.redundancy();
          d["modulus"] = code.field().modulus();
          d["cells"] = points_out(code.cells());
          return d;
        },
        py::arg("dims"));

  m.def("burst_correct",
        [](const std::vector<i64>& dims, const std::string& word) {
          BurstCode code = BurstCode::of_box(dims);
          BurstDecodeResult res = code.correct_2burst(bits_of(word));
          return py::make_tuple(bits_string(res.corrected), res.error_cells);
        },
        py::arg("dims"), py::arg("word"));

  m.def("window_property",
        [](const Rows& gen, const PointList& shape, const std::vector<i64>& delta,
           const std::string& bits, const PointList& window) {
          Tiling t = tiling_of(gen, shape);
          FoldedArray fa = fold_bits(Coloring::of(t, point_of(delta)), bits_of(bits));
          WindowReport rep = window_property(fa, shape_of(window));
          py::dict d;
          d["ok"] = rep.ok;
          d["windows"] = rep.windows;
          d["distinct_nonzero"] = rep.distinct_nonzero;
          d["zero_window"] = rep.zero_window;
          d["detail"] = rep.detail;
          return d;
        },
        py::arg("lattice"), py::arg("shape"), py::arg("delta"), py::arg("bits"),
        py::arg("window"));

  m.def("table_bounds", [] {
    py::list rows;
    for (const BoundTableRow& r : table_bounds()) {
      py::dict d;
      d["label"] = r.label;
      d["n"] = r.n;
      d["upper"] = r.upper;
      d["lower"] = r.lower;
      d["ratio"] = r.ratio;
      rows.append(d);
    }
    return rows;
  });

  m.def("optimize_bound",
        [](const std::string& family, int n) {
          BoundResult res = optimize_bound(parse_bound_family(family), n);
          py::dict d;
          d["family"] = bound_family_name(res.family);
          d["n"] = res.n;
          d["lower"] = res.lower;
          d["upper"] = res.upper;
          d["ratio"] = res.ratio;
          d["argmax"] = res.argmax;
          return d;
        },
        py::arg("family"), py::arg("n") = 0);

  py::register_exception<Error>(m, "LatfoldError");
}
