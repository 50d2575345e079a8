#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "latfold/bounds.hpp"
#include "latfold/burst.hpp"
#include "latfold/ddc.hpp"
#include "latfold/json_io.hpp"
#include "latfold/prarray.hpp"
#include "latfold/render.hpp"
#include "latfold/shapes.hpp"

using namespace latfold;

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::bad_input:
    case Errc::dim_mismatch:
      return 2;
    default:
      return 1;
  }
}

std::string fmt(double v, int prec) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, v);
  return buf;
}

std::string csv(const Point& p) {
  std::string out;
  for (int i = 0; i < p.dim; ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

template <typename T>
std::string join(const std::vector<T>& v, const std::string& sep = ",") {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<i64> parse_i64_list(const std::string& text) {
  Point p = parse_point_arg(text);
  return p.to_vector();
}

void write_file(const std::string& path, const std::string& content) {
  std::filesystem::path fp(path);
  if (fp.has_parent_path()) std::filesystem::create_directories(fp.parent_path());
  std::ofstream out(fp, std::ios::binary);
  require(out.good(), Errc::bad_input, "cannot write file '" + path + "'");
  out << content;
  require(out.good(), Errc::bad_input, "failed writing file '" + path + "'");
}

std::string shape_silhouette(const Shape& s) {
  return render_grid(s, " ", "·", [](const Point&) { return std::string("#"); });
}

std::vector<uint8_t> parse_bits(const std::string& text) {
  std::vector<uint8_t> bits;
  for (char c : text) {
    if (c == '0' || c == '1')
      bits.push_back(static_cast<uint8_t>(c - '0'));
    else
      require(std::isspace(static_cast<unsigned char>(c)), Errc::bad_input,
              "bit strings may contain only 0, 1 and whitespace");
  }
  return bits;
}

std::string bits_to_string(const std::vector<uint8_t>& bits) {
  std::string out;
  for (uint8_t b : bits) out += char('0' + b);
  return out;
}

std::string binary_string(i64 v) {
  if (v == 0) return "0";
  std::string out;
  for (; v > 0; v >>= 1) out += char('0' + (v & 1));
  return std::string(out.rbegin(), out.rend());
}

uint32_t parse_binary_poly(const std::string& text) {
  require(!text.empty() && text.size() <= 31, Errc::bad_input,
          "polynomial must be a nonempty binary string");
  uint32_t v = 0;
  for (char c : text) {
    require(c == '0' || c == '1', Errc::bad_input, "polynomial must be a binary string");
    v = (v << 1) | uint32_t(c - '0');
  }
  return v;
}

// ---------------------------------------------------------------------------
// fold

struct FoldOpts {
  std::string lattice;
  std::string shape;
  std::string delta;
  bool as_json = false;
};

int run_fold(const FoldOpts& o, std::ostream& out) {
  Lattice lat = parse_lattice_arg(o.lattice);
  Shape s = o.shape.empty() ? coset_box_shape(lat) : parse_shape_arg(o.shape);
  Point delta = parse_point_arg(o.delta);
  Tiling t = Tiling::of(lat, s);
  FoldingCertificate cert = is_folding_ddim(lat, delta);
  std::vector<i64> order = folded_indices(t, delta);

  auto grid = [&]() {
    size_t idx = 0;
    std::unordered_map<Point, i64, PointHash> by_cell;
    for (const Point& p : s.points) by_cell[p] = order[idx++];
    return render_grid(s, ",", ".", [&](const Point& p) {
      i64 v = by_cell.at(p);
      return v < 0 ? std::string("-") : std::to_string(v);
    });
  };

  if (o.as_json) {
    json j;
    j["lattice"] = lattice_to_json(lat);
    j["shape"] = shape_to_json(s);
    j["delta"] = point_to_json(delta);
    j["volume"] = cert.volume;
    j["folds"] = cert.folds;
    j["tau"] = cert.tau;
    j["alpha"] = cert.alpha;
    j["order"] = order;
    if (!cert.folds) j["reason"] = cert.reason;
    out << j.dump(2) << "\n";
  } else {
    if (s.dim == 2) out << grid();
    else out << join(order) << "\n";
    out << "folds: " << (cert.folds ? "yes" : "no") << "\n";
    out << "volume: " << cert.volume << "\n";
    out << "tau: " << cert.tau << "\n";
    out << "alpha: " << join(cert.alpha) << "\n";
    if (!cert.folds) out << "reason: " << cert.reason << "\n";
  }
  return cert.folds ? 0 : 1;
}

// ---------------------------------------------------------------------------
// b2 / mseq

struct B2Opts {
  i64 q = 0;
  bool check = false;
  bool as_json = false;
};

int run_b2(const B2Opts& o, std::ostream& out) {
  B2Set b = bose_b2(o.q);
  B2Check chk;
  if (o.check) chk = verify_b2(b);
  if (o.as_json) {
    json j = b2_to_json(b);
    if (o.check) j["verify"] = chk.ok;
    out << j.dump(2) << "\n";
  } else {
    out << "n: " << b.n << "\n";
    out << "size: " << b.elements.size() << "\n";
    out << "elements: " << join(b.elements) << "\n";
    if (o.check) out << "verify: " << (chk.ok ? "ok" : "fail: " + chk.reason) << "\n";
  }
  return (!o.check || chk.ok) ? 0 : 1;
}

struct MseqOpts {
  int n = 0;
  std::string poly;
  bool check = false;
  bool as_json = false;
};

int run_mseq(const MseqOpts& o, std::ostream& out) {
  std::optional<uint32_t> poly;
  if (!o.poly.empty()) poly = parse_binary_poly(o.poly);
  MSequence m = msequence(o.n, poly);
  MSeqReport rep;
  if (o.check) rep = validate_msequence(m.bits);
  if (o.as_json) {
    json j;
    j["n"] = m.n;
    j["poly"] = binary_string(m.poly);
    j["bits"] = bits_to_string(m.bits);
    if (o.check) j["ok"] = rep.all_ok();
    out << j.dump(2) << "\n";
  } else {
    out << bits_to_string(m.bits) << "\n";
    if (o.check) {
      out << "poly: " << binary_string(m.poly) << "\n";
      out << "window: " << (rep.window_ok ? "ok" : "fail") << "\n";
      out << "balance: " << (rep.balance_ok ? "ok" : "fail") << " (" << rep.ones << "/"
          << rep.zeros << ")\n";
      out << "shift-add: " << (rep.shift_add_ok ? "ok" : "fail") << "\n";
      out << "autocorrelation: " << (rep.autocorr_ok ? "ok" : "fail") << "\n";
    }
  }
  return (!o.check || rep.all_ok()) ? 0 : 1;
}

// ---------------------------------------------------------------------------
// ddc

std::string family_summary(const FamilyInstance& inst, bool with_render) {
  std::ostringstream os;
  os << "family: " << family_name(inst.family) << "\n";
  os << "p: " << inst.p << "\n";
  os << "split: " << inst.n1 << " x " << inst.n2 << "\n";
  os << "lattice: " << to_string(inst.lat.gen()) << "\n";
  os << "delta: " << csv(inst.delta) << "\n";
  os << "cells: " << inst.shape.size() << "\n";
  os << "b2: " << join(inst.b2.elements) << "\n";
  os << "dots: " << inst.pattern.dots.size() << "\n";
  if (with_render) os << render_dots(inst.pattern);
  return os.str();
}

struct DdcGenOpts {
  std::string family;
  i64 p = 0;
  i64 n1 = 0;
  i64 w2 = 0;
  std::string out_path;
  std::string pbm_path;
  bool as_json = false;
};

int run_ddc_gen(const DdcGenOpts& o, std::ostream& out) {
  FamilyParams params;
  params.p = o.p;
  if (o.n1 > 0) params.n1 = o.n1;
  if (o.w2 > 0) params.w2 = o.w2;
  FamilyInstance inst = construct_ddc_family(parse_family(o.family), params);
  if (!o.out_path.empty())
    write_file(o.out_path, periodic_pattern_to_json(inst.periodic).dump(2) + "\n");
  if (!o.pbm_path.empty()) {
    Point origin = Point::zero(2);
    write_file(o.pbm_path, pattern_to_pbm(inst.periodic, origin, inst.periodic.period[0],
                                          inst.periodic.period[1]));
  }
  if (o.as_json) {
    json j;
    j["family"] = family_name(inst.family);
    j["p"] = inst.p;
    j["n1"] = inst.n1;
    j["n2"] = inst.n2;
    j["lattice"] = lattice_to_json(inst.lat);
    j["delta"] = point_to_json(inst.delta);
    j["b2"] = b2_to_json(inst.b2);
    j["pattern"] = dot_pattern_to_json(inst.pattern);
    j["periodic"] = periodic_pattern_to_json(inst.periodic);
    out << j.dump(2) << "\n";
  } else {
    out << family_summary(inst, true);
  }
  return 0;
}

struct DdcVerifyOpts {
  std::string pattern;
  std::string shape;
  i64 budget = 5'000'000;
  bool as_json = false;
};

int run_ddc_verify(const DdcVerifyOpts& o, std::ostream& out) {
  json pj = parse_json_arg(o.pattern);
  DdcCheck chk;
  std::string mode;
  if (pj.is_object() && pj.contains("period")) {
    PeriodicPattern pp = periodic_pattern_from_json(pj);
    require(!o.shape.empty(), Errc::bad_input,
            "a periodic pattern needs --shape for the window check");
    Shape s = parse_shape_arg(o.shape);
    chk = verify_periodic_sddc(pp, s, o.budget);
    mode = "periodic";
  } else if (pj.is_object() && pj.contains("shape")) {
    chk = verify_ddc(dot_pattern_from_json(pj));
    mode = "single";
  } else {
    std::vector<Point> dots;
    for (const auto& e : pj) dots.push_back(point_from_json(e));
    chk = verify_ddc(dots);
    mode = "single";
  }
  if (o.as_json) {
    json j;
    j["mode"] = mode;
    j["ok"] = chk.ok;
    if (!chk.ok) {
      j["reason"] = chk.reason;
      if (chk.witness) {
        json w = json::array();
        for (const Point& p : *chk.witness) w.push_back(point_to_json(p));
        j["witness"] = w;
      }
    }
    out << j.dump(2) << "\n";
  } else if (chk.ok) {
    out << "ok\n";
  } else {
    out << "fail: " << chk.reason << "\n";
    if (chk.witness) {
      const auto& w = *chk.witness;
      out << "witness: " << to_string(w[0]) << " " << to_string(w[1]) << " vs "
          << to_string(w[2]) << " " << to_string(w[3]) << "\n";
    }
  }
  return chk.ok ? 0 : 1;
}

struct DdcPlaceOpts {
  std::string pattern;
  std::string query;
  bool no_symmetries = false;
  i64 budget = 5'000'000;
  bool as_json = false;
};

int run_ddc_place(const DdcPlaceOpts& o, std::ostream& out) {
  PeriodicPattern pp = parse_pattern_arg(o.pattern);
  Shape q = parse_shape_arg(o.query);
  Placement pl = best_placement(pp, q, !o.no_symmetries, o.budget);
  if (o.as_json) {
    json j;
    j["offset"] = point_to_json(pl.offset);
    j["symmetry"] = pl.symmetry;
    j["count"] = pl.count;
    json dots = json::array();
    for (const Point& d : pl.dots) dots.push_back(point_to_json(d));
    j["dots"] = dots;
    out << j.dump(2) << "\n";
  } else {
    out << "offset: " << csv(pl.offset) << "\n";
    out << "symmetry: " << pl.symmetry << "\n";
    out << "count: " << pl.count << "\n";
    for (const Point& d : pl.dots) out << "dot: " << csv(d) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// burst

struct BurstBuildOpts {
  std::string dims;
  std::string lattice;
  std::string shape;
  std::string delta;
  std::string out_path;
  bool as_json = false;
};

json burst_full_json(const BurstCode& code, const std::string& lattice_arg,
                     const std::string& delta_arg) {
  json j = burst_code_to_json(code);
  if (!lattice_arg.empty()) {
    j["lattice"] = lattice_to_json(parse_lattice_arg(lattice_arg));
    j["delta"] = point_to_json(parse_point_arg(delta_arg));
  }
  return j;
}

std::string burst_summary(const BurstCode& code) {
  std::ostringstream os;
  os << "cells: " << code.cells().size() << "\n";
  os << "m: " << code.m() << "\n";
  os << "d: " << code.d() << "\n";
  os << "redundancy: " << code.redundancy() << "\n";
  os << "modulus: " << binary_string(code.field().modulus()) << "\n";
  os << "phi: " << join(code.phi()) << "\n";
  os << "padding: " << code.padding().size() << "\n";
  for (const Point& p : code.padding()) os << "pad: " << csv(p) << "\n";
  os << "columns:\n";
  for (size_t i = 0; i < code.cells().size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(code.column(i)));
    os << buf << "\n";
  }
  return os.str();
}

BurstCode burst_from_opts(const std::string& dims, const std::string& lattice,
                          const std::string& shape, const std::string& delta) {
  if (!dims.empty()) return BurstCode::of_box(parse_i64_list(dims));
  require(!lattice.empty() && !shape.empty() && !delta.empty(), Errc::bad_input,
          "need either --dims or --lattice, --shape and --delta");
  return BurstCode::of_shape(parse_lattice_arg(lattice), parse_shape_arg(shape),
                             parse_point_arg(delta));
}

int run_burst_build(const BurstBuildOpts& o, std::ostream& out) {
  BurstCode code = burst_from_opts(o.dims, o.lattice, o.shape, o.delta);
  code.check_invariants();
  if (!o.out_path.empty())
    write_file(o.out_path, burst_full_json(code, o.lattice, o.delta).dump(2) + "\n");
  if (o.as_json)
    out << burst_full_json(code, o.lattice, o.delta).dump(2) << "\n";
  else
    out << burst_summary(code);
  return 0;
}

struct BurstDecodeOpts {
  std::string code_path;
  std::string word_path;
  std::string bits;
  bool as_json = false;
};

int run_burst_decode(const BurstDecodeOpts& o, std::ostream& out) {
  json cj = parse_json_arg(o.code_path);
  BurstCode code = [&]() {
    if (cj.contains("dims")) return BurstCode::of_box(cj.at("dims").get<std::vector<i64>>());
    require(cj.contains("lattice") && cj.contains("shape") && cj.contains("delta"),
            Errc::bad_input, "code file needs dims or lattice/shape/delta");
    return BurstCode::of_shape(lattice_from_json(cj.at("lattice")),
                               shape_from_json(cj.at("shape")),
                               point_from_json(cj.at("delta")));
  }();
  if (cj.contains("columns")) {
    auto cols = cj.at("columns").get<std::vector<std::string>>();
    require(cols.size() == code.cells().size(), Errc::bad_input,
            "code file column count mismatch");
    for (size_t i = 0; i < cols.size(); ++i)
      require(std::stoll(cols[i], nullptr, 16) == code.column(i),
              Errc::internal_inconsistency, "code file columns disagree with rebuild");
  }
  require(!o.bits.empty() || !o.word_path.empty(), Errc::bad_input,
          "need --word or --bits");
  std::vector<uint8_t> word =
      o.bits.empty() ? parse_bits(read_file(o.word_path)) : parse_bits(o.bits);
  BurstDecodeResult res = code.correct_2burst(word);
  if (o.as_json) {
    json j;
    j["corrected"] = bits_to_string(res.corrected);
    json cells = json::array();
    for (size_t idx : res.error_cells) cells.push_back(point_to_json(code.cells()[idx]));
    j["errors"] = cells;
    out << j.dump(2) << "\n";
  } else {
    out << "corrected: " << bits_to_string(res.corrected) << "\n";
    out << "errors: " << res.error_cells.size() << "\n";
    for (size_t idx : res.error_cells) out << "error: " << csv(code.cells()[idx]) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// pra

struct PraOpts {
  std::string lattice;
  std::string shape;
  std::string delta;
  int mseq_n = 0;
  std::string poly;
  std::string bits;
  std::string window;
  bool check = false;
  bool as_json = false;
};

FoldedArray array_from_opts(const PraOpts& o) {
  Lattice lat = parse_lattice_arg(o.lattice);
  Shape s = parse_shape_arg(o.shape);
  Point delta = parse_point_arg(o.delta);
  if (!o.bits.empty()) return fold_bits(lat, s, delta, parse_bits(o.bits));
  require(o.mseq_n > 0, Errc::bad_input, "need --mseq-n or --bits");
  std::optional<uint32_t> poly;
  if (!o.poly.empty()) poly = parse_binary_poly(o.poly);
  return fold_msequence(lat, s, delta, msequence(o.mseq_n, poly));
}

int run_pra_fold(const PraOpts& o, std::ostream& out) {
  FoldedArray fa = array_from_opts(o);
  ArrayPropertyReport rep;
  if (o.check) rep = property_report(fa);
  if (o.as_json) {
    json j;
    j["bits"] = bits_to_string(fa.bits);
    j["row_bits"] = bits_to_string(fa.row_bits);
    j["grid"] = render_bits(fa);
    if (o.check) {
      j["balance"] = rep.balance_ok;
      j["shift_add"] = rep.shift_add_ok;
      j["autocorrelation"] = rep.autocorr_ok;
    }
    out << j.dump(2) << "\n";
  } else {
    out << render_bits(fa);
    if (o.check) {
      out << "balance: " << (rep.balance_ok ? "ok" : "fail") << " (" << rep.ones << "/"
          << rep.zeros << ")\n";
      out << "shift-add: " << (rep.shift_add_ok ? "ok" : "fail") << "\n";
      out << "autocorrelation: " << (rep.autocorr_ok ? "ok" : "fail") << "\n";
      if (!rep.detail.empty()) out << "detail: " << rep.detail << "\n";
    }
  }
  return (!o.check || rep.all_ok()) ? 0 : 1;
}

int run_pra_windows(const PraOpts& o, std::ostream& out) {
  FoldedArray fa = array_from_opts(o);
  std::string wspec = o.window;
  if (wspec.rfind("shape:", 0) == 0) wspec = wspec.substr(6);
  Shape w = parse_shape_arg(wspec);
  WindowReport rep = window_property(fa, w);
  if (o.as_json) {
    json j;
    j["ok"] = rep.ok;
    j["windows"] = rep.windows;
    j["distinct_nonzero"] = rep.distinct_nonzero;
    j["zero_window"] = rep.zero_window;
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    out << j.dump(2) << "\n";
  } else {
    out << "windows: " << rep.windows << "\n";
    out << "distinct nonzero: " << rep.distinct_nonzero << "\n";
    out << "zero window: " << (rep.zero_window ? "yes" : "no") << "\n";
    out << "ok: " << (rep.ok ? "yes" : "no") << "\n";
    if (!rep.detail.empty()) out << "detail: " << rep.detail << "\n";
  }
  return rep.ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bounds

int run_bounds_table(bool as_csv, bool as_json, std::ostream& out) {
  std::vector<BoundTableRow> rows = table_bounds();
  if (as_json) {
    json j = json::array();
    for (const auto& r : rows)
      j.push_back({{"label", r.label}, {"upper", r.upper}, {"lower", r.lower},
                   {"ratio", r.ratio}});
    out << j.dump(2) << "\n";
  } else if (as_csv) {
    out << "region,upper,lower,ratio\n";
    for (const auto& r : rows)
      out << r.label << "," << fmt(r.upper, 5) << "," << fmt(r.lower, 5) << ","
          << fmt(r.ratio, 6) << "\n";
  } else {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-8s %10s %10s %10s\n", "region", "upper", "lower",
                  "ratio");
    out << buf;
    for (const auto& r : rows) {
      std::snprintf(buf, sizeof buf, "%-8s %10s %10s %10s\n", r.label.c_str(),
                    fmt(r.upper, 5).c_str(), fmt(r.lower, 5).c_str(),
                    fmt(r.ratio, 6).c_str());
      out << buf;
    }
  }
  return 0;
}

int run_bounds_solve(const std::string& family, int n, bool as_csv, bool as_json,
                     std::ostream& out) {
  BoundResult r = optimize_bound(parse_bound_family(family), n);
  if (as_json) {
    json j;
    j["family"] = bound_family_name(r.family);
    if (r.n > 0) j["n"] = r.n;
    j["argmax"] = r.argmax;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["ratio"] = r.ratio;
    out << j.dump(2) << "\n";
  } else if (as_csv) {
    out << "family,argmax,lower,upper,ratio\n";
    std::string am;
    for (size_t i = 0; i < r.argmax.size(); ++i)
      am += (i ? ";" : "") + fmt(r.argmax[i], 6);
    out << bound_family_name(r.family) << "," << am << "," << fmt(r.lower, 5) << ","
        << fmt(r.upper, 5) << "," << fmt(r.ratio, 6) << "\n";
  } else {
    out << "family: " << bound_family_name(r.family) << "\n";
    if (r.n > 0) out << "n: " << r.n << "\n";
    for (size_t i = 0; i < r.argmax.size(); ++i)
      out << "argmax[" << i << "]: " << fmt(r.argmax[i], 6) << "\n";
    out << "lower: " << fmt(r.lower, 5) << "\n";
    out << "upper: " << fmt(r.upper, 5) << "\n";
    out << "ratio: " << fmt(r.ratio, 6) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// repro: regenerate the worked examples and diff them against golden files

Shape stair_shape_11() {
  std::vector<Point> pts;
  for (i64 x = 0; x < 4; ++x) pts.push_back({x, 0});
  for (i64 x = 0; x < 4; ++x) pts.push_back({x, 1});
  for (i64 x = 0; x < 3; ++x) pts.push_back({x, 2});
  return Shape::of(2, pts);
}

Shape tee_shape_11() {
  std::vector<Point> pts = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1},
                            {0, 2}, {1, 2}, {2, 2}, {1, 3}, {2, 3}};
  return Shape::of(2, pts);
}

std::string fold_table(const Lattice& lat, const Shape& s, const std::vector<Point>& deltas) {
  std::ostringstream os;
  Tiling t = Tiling::of(lat, s);
  for (const Point& d : deltas) {
    Coloring col = Coloring::of(t, d);
    os << "direction " << csv(d) << "\n";
    os << render_coloring(col);
  }
  return os.str();
}

std::string gen_diag_3x5() {
  ClassicFold cf = classic_fold(ClassicKind::diagonal, 3, 5);
  Tiling t = Tiling::of(cf.lat, cf.shape);
  Coloring col = Coloring::of(t, cf.delta);
  std::ostringstream os;
  os << "indices\n" << render_coloring(col);
  MSequence m = msequence(4, 25);
  os << "sequence " << bits_to_string(m.bits) << "\n";
  os << "bits\n" << render_bits(fold_bits(col, m.bits));
  return os.str();
}

std::string gen_rowmajor_ruler_3x5() {
  ClassicFold cf = classic_fold(ClassicKind::row_major, 3, 5);
  Tiling t = Tiling::of(cf.lat, cf.shape);
  Coloring col = Coloring::of(t, cf.delta);
  std::ostringstream os;
  os << "indices\n" << render_coloring(col);
  B2Set ruler{15, {0, 1, 4, 10, 12}};
  DotPattern dp = fold_dots(col, ruler);
  os << "ruler " << join(ruler.elements) << "\n";
  os << "dots\n" << render_dots(dp);
  return os.str();
}

std::string gen_diagcolor_31() {
  ClassicFold cf = classic_fold(ClassicKind::coloring_diag, 4, 8);
  Tiling t = Tiling::of(cf.lat, cf.shape);
  Coloring col = Coloring::of(t, cf.delta);
  B2Set b{31, {0, 1, 4, 10, 12, 17}};
  B2Check bc = verify_b2(b);
  PeriodicPattern pp = build_periodic(col, b);
  std::ostringstream os;
  os << "lattice: " << to_string(cf.lat.gen()) << "\n";
  os << "delta: " << csv(cf.delta) << "\n";
  os << "b2: " << join(b.elements) << " over " << b.n << "\n";
  os << "b2 verify: " << (bc.ok ? "ok" : "fail") << "\n";
  os << "window 12x12 at origin\n";
  os << render_pattern_window(pp, Point::zero(2), 12, 12);
  DdcCheck chk = verify_periodic_sddc(pp, cf.shape, 1'000'000);
  os << "periodic window check: " << (chk.ok ? "ok" : "fail: " + chk.reason) << "\n";
  return os.str();
}

std::string gen_ternary_2x2() {
  std::vector<Point> dirs = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  std::ostringstream os;
  for (const auto& rows :
       {std::vector<std::vector<i64>>{{2, 2}, {0, 2}}, {{2, 1}, {0, 2}}}) {
    Lattice lat = Lattice::from_rows(rows);
    os << "lattice " << to_string(lat.gen()) << "\n";
    for (const Point& d : dirs) {
      bool closed = is_folding_2d(lat, d);
      bool brute = is_folding_bruteforce(lat, d);
      require(closed == brute, Errc::internal_inconsistency,
              "closed form disagrees with brute force");
      os << "  " << csv(d) << ": " << (closed ? "yes" : "no") << "\n";
    }
  }
  return os.str();
}

std::string gen_strip11() {
  Lattice lat = Lattice::from_rows({{3, 2}, {7, 1}});
  return fold_table(lat, rect_shape(1, 11),
                    {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 0}});
}

std::string gen_stair11() {
  Lattice lat = Lattice::from_rows({{3, 2}, {7, 1}});
  return fold_table(lat, stair_shape_11(), {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 0}});
}

std::string gen_tee11() {
  Lattice lat = Lattice::from_rows({{3, 2}, {7, 1}});
  return fold_table(lat, tee_shape_11(), {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}});
}

std::string gen_pra31_arrays() {
  Lattice lat = Lattice::from_rows({{3, 4}, {10, 3}});
  Shape s = corner_shape(5, 7, 1, 4);
  MSequence m = msequence(5);
  std::ostringstream os;
  os << "sequence " << bits_to_string(m.bits) << "\n";
  for (Point d : {Point{1, 0}, Point{0, 1}}) {
    FoldedArray fa = fold_msequence(lat, s, d, m);
    os << "direction " << csv(d) << "\n";
    os << render_bits(fa);
  }
  return os.str();
}

std::string gen_morph_rect_to_hex() {
  FamilyInstance inst = construct_ddc_family(DdcFamily::rectangle, FamilyParams{7, {}, {}});
  std::vector<Point> pts;
  const i64 width[6] = {6, 8, 10, 10, 8, 6};
  const i64 start[6] = {2, 1, 0, 0, 1, 2};
  for (i64 y = 0; y < 6; ++y)
    for (i64 x = start[y]; x < start[y] + width[y]; ++x) pts.push_back({x, y});
  Shape target = Shape::of(2, pts);
  std::vector<Shape> steps = morph_toward(inst.lat, inst.shape, inst.delta, target);
  std::ostringstream os;
  os << "lattice: " << to_string(inst.lat.gen()) << "\n";
  os << "start cells: " << inst.shape.size() << "\n";
  os << "steps: " << steps.size() - 1 << "\n";
  const Shape& last = steps.back();
  os << "final\n" << shape_silhouette(last);
  TilingCheck tc = verify_tiling(inst.lat, last);
  os << "tiling: " << (tc.ok ? "ok" : "fail") << "\n";
  os << "folds: " << (is_folding_bruteforce(inst.lat, inst.delta) ? "yes" : "no") << "\n";
  return os.str();
}

std::string gen_hexsphere_xi() {
  std::ostringstream os;
  for (i64 r = 0; r <= 6; ++r)
    os << "radius " << r << ": " << hex_sphere_count(r) << " cells\n";
  os << "radius 4 silhouette\n" << shape_silhouette(hex_sphere_shape(4));
  os << "plane placement of radius 1\n";
  for (const Point& p : hex_sphere_shape(1).points) {
    auto xy = hex_to_plane(double(p.x()), double(p.y()));
    os << csv(p) << " -> " << fmt(xy[0], 6) << "," << fmt(xy[1], 6) << "\n";
  }
  return os.str();
}

std::string gen_hexsphere_corner() {
  Shape corner = corner_shape(9, 9, 5, 4);
  Shape sphere = hex_sphere_shape(4);
  Shape flipped = flip_horizontal(sphere);
  std::ostringstream os;
  os << "corner cells: " << corner.size() << "\n";
  os << "sphere cells: " << sphere.size() << "\n";
  os << "corner\n" << shape_silhouette(corner);
  os << "sphere\n" << shape_silhouette(sphere);
  os << "sphere flipped\n" << shape_silhouette(flipped);
  return os.str();
}

std::string gen_families() {
  std::ostringstream os;
  os << family_summary(construct_ddc_family(DdcFamily::rectangle, FamilyParams{7, {}, {}}),
                       true);
  os << "\n";
  os << family_summary(construct_ddc_family(DdcFamily::corner, FamilyParams{7, {}, {}}),
                       true);
  os << "\n";
  os << family_summary(construct_ddc_family(DdcFamily::flipped_t, FamilyParams{7, {}, {}}),
                       true);
  os << "\n";
  os << family_summary(construct_ddc_family(DdcFamily::corner, FamilyParams{11, {}, {}}),
                       true);
  return os.str();
}

std::string gen_burst(const std::string& dims, const std::string& lattice,
                      const std::string& shape, const std::string& delta) {
  BurstCode code = burst_from_opts(dims, lattice, shape, delta);
  code.check_invariants();
  return burst_summary(code);
}

std::string gen_bounds_table() {
  std::ostringstream os;
  run_bounds_table(false, false, os);
  return os.str();
}

std::string gen_bounds_argmax() {
  std::ostringstream os;
  for (const char* f : {"pentagon", "heptagon", "octagon", "decagon", "circle"})
    run_bounds_solve(f, 0, false, false, os);
  return os.str();
}

std::string gen_b2_7() {
  std::ostringstream os;
  run_b2(B2Opts{7, true, false}, os);
  return os.str();
}

std::string gen_mseq_5() {
  std::ostringstream os;
  run_mseq(MseqOpts{5, "", true, false}, os);
  return os.str();
}

const std::map<std::string, std::function<std::string()>>& repro_targets() {
  static const std::map<std::string, std::function<std::string()>> targets = {
      {"diag_3x5.txt", gen_diag_3x5},
      {"rowmajor_ruler_3x5.txt", gen_rowmajor_ruler_3x5},
      {"diagcolor_31.txt", gen_diagcolor_31},
      {"ternary_2x2.txt", gen_ternary_2x2},
      {"strip11_foldings.txt", gen_strip11},
      {"stair11_foldings.txt", gen_stair11},
      {"tee11_foldings.txt", gen_tee11},
      {"pra31_arrays.txt", gen_pra31_arrays},
      {"morph_rect_to_hex.txt", gen_morph_rect_to_hex},
      {"hexsphere_xi.txt", gen_hexsphere_xi},
      {"hexsphere_corner.txt", gen_hexsphere_corner},
      {"families.txt", gen_families},
      {"burst_3x5.txt", [] { return gen_burst("3,5", "", "", ""); }},
      {"burst_3x4x5.txt", [] { return gen_burst("3,4,5", "", "", ""); }},
      {"burst_corner31.txt",
       [] { return gen_burst("", "[[3,4],[10,3]]", "corner:5,7,1,4", "1,0"); }},
      {"bounds_table.txt", gen_bounds_table},
      {"bounds_argmax.txt", gen_bounds_argmax},
      {"b2_7.txt", gen_b2_7},
      {"mseq_5.txt", gen_mseq_5},
  };
  return targets;
}

int run_repro(const std::string& out_dir, const std::string& golden_dir, bool update,
              std::ostream& out) {
  int failures = 0;
  for (const auto& [name, gen] : repro_targets()) {
    std::string content;
    try {
      content = gen();
    } catch (const Error& e) {
      out << "ERROR " << name << ": " << e.what() << "\n";
      ++failures;
      continue;
    }
    write_file(out_dir + "/" + name, content);
    std::string golden_path = golden_dir + "/" + name;
    if (update) {
      write_file(golden_path, content);
      out << "wrote " << name << "\n";
      continue;
    }
    std::string expect;
    try {
      expect = read_file(golden_path);
    } catch (const Error&) {
      out << "MISSING " << name << "\n";
      ++failures;
      continue;
    }
    if (expect == content) {
      out << "ok " << name << "\n";
    } else {
      out << "DIFF " << name << "\n";
      ++failures;
    }
  }
  if (failures) out << failures << " target(s) failed\n";
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sequence folding over lattice tilings"};
  app.require_subcommand(1);
  std::ostream& out = std::cout;

  FoldOpts fold_opts;
  auto* fold_cmd = app.add_subcommand("fold", "fold a sequence into a shape");
  fold_cmd->add_option("--lattice", fold_opts.lattice, "generator matrix (JSON or file)")
      ->required();
  fold_cmd->add_option("--shape", fold_opts.shape,
                       "shape (spec like rect:3,5, JSON, or file); default: coset box");
  fold_cmd->add_option("--delta", fold_opts.delta, "direction, e.g. 1,0")->required();
  fold_cmd->add_flag("--json", fold_opts.as_json, "machine readable output");

  B2Opts b2_opts;
  auto* b2_cmd = app.add_subcommand("b2", "Sidon set construction");
  b2_cmd->add_option("--q", b2_opts.q, "prime power; the set has q elements")->required();
  b2_cmd->add_flag("--check", b2_opts.check, "verify the distinct-difference property");
  b2_cmd->add_flag("--json", b2_opts.as_json, "machine readable output");

  MseqOpts mseq_opts;
  auto* mseq_cmd = app.add_subcommand("mseq", "maximum length sequences");
  mseq_cmd->add_option("--n", mseq_opts.n, "register length")->required();
  mseq_cmd->add_option("--poly", mseq_opts.poly, "feedback polynomial as a binary string");
  mseq_cmd->add_flag("--check", mseq_opts.check, "run the property battery");
  mseq_cmd->add_flag("--json", mseq_opts.as_json, "machine readable output");

  auto* ddc_cmd = app.add_subcommand("ddc", "distinct difference configurations");
  ddc_cmd->require_subcommand(1);

  DdcGenOpts gen_opts;
  auto* gen_cmd = ddc_cmd->add_subcommand("gen", "build a named family instance");
  gen_cmd->add_option("--family", gen_opts.family, "rectangle, corner or flipped_t")
      ->required();
  gen_cmd->add_option("--p", gen_opts.p, "prime power dot count")->required();
  gen_cmd->add_option("--n1", gen_opts.n1, "split override");
  gen_cmd->add_option("--w2", gen_opts.w2, "flipped T width override");
  gen_cmd->add_option("--out", gen_opts.out_path, "write the periodic pattern JSON here");
  gen_cmd->add_option("--pbm", gen_opts.pbm_path, "write one period as a bitmap here");
  gen_cmd->add_flag("--json", gen_opts.as_json, "machine readable output");

  DdcVerifyOpts verify_opts;
  auto* verify_cmd = ddc_cmd->add_subcommand("verify", "check the difference property");
  verify_cmd->add_option("--pattern", verify_opts.pattern, "pattern (JSON or file)")
      ->required();
  verify_cmd->add_option("--shape", verify_opts.shape, "window shape for periodic checks");
  verify_cmd->add_option("--budget", verify_opts.budget, "operation budget");
  verify_cmd->add_flag("--json", verify_opts.as_json, "machine readable output");

  DdcPlaceOpts place_opts;
  auto* place_cmd = ddc_cmd->add_subcommand("place", "best window placement");
  place_cmd->add_option("--pattern", place_opts.pattern, "periodic pattern (JSON or file)")
      ->required();
  place_cmd->add_option("--query", place_opts.query, "query shape")->required();
  place_cmd->add_flag("--no-symmetries", place_opts.no_symmetries,
                      "translations only, skip rotations and reflections");
  place_cmd->add_option("--budget", place_opts.budget, "operation budget");
  place_cmd->add_flag("--json", place_opts.as_json, "machine readable output");

  auto* burst_cmd = app.add_subcommand("burst", "two burst correcting codes");
  burst_cmd->require_subcommand(1);

  BurstBuildOpts build_opts;
  auto* build_cmd = burst_cmd->add_subcommand("build", "assemble a code");
  build_cmd->add_option("--dims", build_opts.dims, "box extents, e.g. 3,5");
  build_cmd->add_option("--lattice", build_opts.lattice, "lattice for the shape variant");
  build_cmd->add_option("--shape", build_opts.shape, "shape for the shape variant");
  build_cmd->add_option("--delta", build_opts.delta, "folding direction");
  build_cmd->add_option("--out", build_opts.out_path, "write the code JSON here");
  build_cmd->add_flag("--json", build_opts.as_json, "machine readable output");

  BurstDecodeOpts decode_opts;
  auto* decode_cmd = burst_cmd->add_subcommand("decode", "correct a received word");
  decode_cmd->add_option("--code", decode_opts.code_path, "code JSON (inline or file)")
      ->required();
  decode_cmd->add_option("--word", decode_opts.word_path, "file with the received bits");
  decode_cmd->add_option("--bits", decode_opts.bits, "received bits inline");
  decode_cmd->add_flag("--json", decode_opts.as_json, "machine readable output");

  auto* pra_cmd = app.add_subcommand("pra", "pseudo random arrays");
  pra_cmd->require_subcommand(1);

  PraOpts pra_fold_opts;
  auto* pra_fold_cmd = pra_cmd->add_subcommand("fold", "fold a sequence into an array");
  pra_fold_cmd->add_option("--lattice", pra_fold_opts.lattice, "generator matrix")
      ->required();
  pra_fold_cmd->add_option("--shape", pra_fold_opts.shape, "shape")->required();
  pra_fold_cmd->add_option("--delta", pra_fold_opts.delta, "direction")->required();
  pra_fold_cmd->add_option("--mseq-n", pra_fold_opts.mseq_n, "fold a maximum length sequence");
  pra_fold_cmd->add_option("--poly", pra_fold_opts.poly, "feedback polynomial (binary)");
  pra_fold_cmd->add_option("--bits", pra_fold_opts.bits, "fold an explicit bit string");
  pra_fold_cmd->add_flag("--check", pra_fold_opts.check, "run the property battery");
  pra_fold_cmd->add_flag("--json", pra_fold_opts.as_json, "machine readable output");

  PraOpts pra_win_opts;
  auto* pra_win_cmd = pra_cmd->add_subcommand("windows", "window content check");
  pra_win_cmd->add_option("--lattice", pra_win_opts.lattice, "generator matrix")
      ->required();
  pra_win_cmd->add_option("--shape", pra_win_opts.shape, "shape")->required();
  pra_win_cmd->add_option("--delta", pra_win_opts.delta, "direction")->required();
  pra_win_cmd->add_option("--mseq-n", pra_win_opts.mseq_n, "fold a maximum length sequence");
  pra_win_cmd->add_option("--poly", pra_win_opts.poly, "feedback polynomial (binary)");
  pra_win_cmd->add_option("--bits", pra_win_opts.bits, "fold an explicit bit string");
  pra_win_cmd->add_option("--window", pra_win_opts.window,
                          "window shape (rect:1,5, shape:FILE, JSON, or file)")
      ->required();
  pra_win_cmd->add_flag("--json", pra_win_opts.as_json, "machine readable output");

  auto* bounds_cmd = app.add_subcommand("bounds", "dot count bounds for plane regions");
  bounds_cmd->require_subcommand(1);

  bool table_csv = false, table_json = false;
  auto* table_cmd = bounds_cmd->add_subcommand("table", "the full bound table");
  table_cmd->add_flag("--csv", table_csv, "comma separated output");
  table_cmd->add_flag("--json", table_json, "machine readable output");

  std::string solve_family;
  int solve_n = 0;
  bool solve_csv = false, solve_json = false;
  auto* solve_cmd = bounds_cmd->add_subcommand("solve", "maximize one family");
  solve_cmd->add_option("--family", solve_family, "family name")->required();
  solve_cmd->add_option("--n", solve_n, "side count (polygon rows parameterized by n)");
  solve_cmd->add_flag("--csv", solve_csv, "comma separated output");
  solve_cmd->add_flag("--json", solve_json, "machine readable output");

  auto* repro_cmd = app.add_subcommand("repro", "regenerate the worked examples");
  repro_cmd->require_subcommand(1);
  std::string repro_out = "repro_out", repro_golden = "data/golden";
  bool repro_update = false;
  auto* repro_all = repro_cmd->add_subcommand("all", "regenerate and diff everything");
  repro_all->add_option("--out", repro_out, "output directory");
  repro_all->add_option("--golden", repro_golden, "golden directory");
  repro_all->add_flag("--update", repro_update, "rewrite the golden files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*fold_cmd) return run_fold(fold_opts, out);
    if (*b2_cmd) return run_b2(b2_opts, out);
    if (*mseq_cmd) return run_mseq(mseq_opts, out);
    if (*gen_cmd) return run_ddc_gen(gen_opts, out);
    if (*verify_cmd) return run_ddc_verify(verify_opts, out);
    if (*place_cmd) return run_ddc_place(place_opts, out);
    if (*build_cmd) return run_burst_build(build_opts, out);
    if (*decode_cmd) return run_burst_decode(decode_opts, out);
    if (*pra_fold_cmd) return run_pra_fold(pra_fold_opts, out);
    if (*pra_win_cmd) return run_pra_windows(pra_win_opts, out);
    if (*table_cmd) return run_bounds_table(table_csv, table_json, out);
    if (*solve_cmd)
      return run_bounds_solve(solve_family, solve_n, solve_csv, solve_json, out);
    if (*repro_all) return run_repro(repro_out, repro_golden, repro_update, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
