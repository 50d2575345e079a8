#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "latfold/burst.hpp"
#include "latfold/shapes.hpp"

using namespace latfold;

namespace {

// every weight <= 2 pattern confined to one cell or an axis-adjacent pair
std::vector<BurstError> all_bursts(const BurstCode& code) {
  std::vector<BurstError> out;
  const auto& cells = code.cells();
  for (const Point& p : cells) out.push_back({{p}});
  for (const Point& p : cells)
    for (int axis = 0; axis < code.dim(); ++axis) {
      Point q = p + Point::unit(p.dim, axis);
      if (code.cell_index(q)) out.push_back({{p, q}});
    }
  return out;
}

void check_exhaustive_decode(const BurstCode& code) {
  size_t n = code.cells().size();
  for (const BurstError& e : all_bursts(code)) {
    REQUIRE(code.is_legal_burst(e));
    std::vector<uint8_t> word(n, 0);
    for (const Point& p : e.cells) word[*code.cell_index(p)] ^= 1;
    BurstDecodeResult res = code.correct_2burst(word);
    std::set<size_t> expect;
    for (const Point& p : e.cells) expect.insert(*code.cell_index(p));
    std::set<size_t> got(res.error_cells.begin(), res.error_cells.end());
    REQUIRE(got == expect);
    REQUIRE(res.corrected == std::vector<uint8_t>(n, 0));
  }
}

}  // namespace

TEST_CASE("planar code parameters") {
  BurstCode code = BurstCode::of_box({3, 5});
  CHECK(code.dim() == 2);
  CHECK(code.m() == 4);
  CHECK(code.d() == 1);
  CHECK(code.redundancy() == 6);
  CHECK(code.cells().size() == 15);
  CHECK(code.field().modulus() == 19);
  CHECK(code.padding().empty());
  code.check_invariants();
}

TEST_CASE("planar code corrects every short burst") {
  check_exhaustive_decode(BurstCode::of_box({3, 5}));
}

TEST_CASE("cubic code parameters and decoding") {
  BurstCode code = BurstCode::of_box({3, 4, 5});
  CHECK(code.m() == 6);
  CHECK(code.d() == 2);
  CHECK(code.redundancy() == 9);
  CHECK(code.cells().size() == 60);
  code.check_invariants();
  check_exhaustive_decode(code);
}

TEST_CASE("one dimensional code") {
  BurstCode code = BurstCode::of_box({7});
  CHECK(code.m() == 3);
  CHECK(code.d() == 0);
  CHECK(code.redundancy() == 4);
  code.check_invariants();
  check_exhaustive_decode(code);
}

TEST_CASE("box exponents are the row major ranks") {
  BurstCode code = BurstCode::of_box({3, 5});
  REQUIRE(code.exponents().size() == 15);
  for (size_t i = 0; i < 15; ++i) {
    const Point& p = code.cells()[i];
    i64 expect = 0;
    for (int ax = 0; ax < 2; ++ax) expect = expect * (ax == 0 ? 3 : 5) + p[ax];
    CHECK(code.exponents()[i] == expect % 15);
  }
}

TEST_CASE("folded code over the 31-cell corner") {
  Lattice lat = Lattice::from_rows(fixtures::kCornerLat);
  Shape s = corner_shape(5, 7, 1, 4);
  BurstCode code = BurstCode::of_shape(lat, s, Point{1, 0});
  CHECK(code.cells().size() == 31);
  CHECK(code.m() == 5);
  CHECK(code.d() == 1);
  CHECK(code.redundancy() == 7);
  CHECK(code.padding().empty());
  REQUIRE(code.phi().size() == 2);
  CHECK(code.phi() == std::vector<i64>{1, 7});
  for (size_t i = 0; i < code.cells().size(); ++i) {
    const Point& p = code.cells()[i];
    CHECK(code.exponents()[i] == mod_floor(p.x() + 7 * p.y(), 31));
  }
  code.check_invariants();
  check_exhaustive_decode(code);
}

TEST_CASE("folded code pads short shapes") {
  Lattice lat = Lattice::from_rows(fixtures::kLat11);
  BurstCode code = BurstCode::of_shape(lat, strip_shape(11), Point{0, 1});
  CHECK(code.cells().size() == 11);
  CHECK(code.m() == 4);
  CHECK(code.padding().size() == 4);
  std::set<i64> used;
  for (i64 e : code.exponents()) used.insert(e);
  for (const Point& p : code.padding()) {
    i64 e = 0;
    for (int i = 0; i < 2; ++i) e += code.phi()[static_cast<size_t>(i)] * p[i];
    CHECK(used.count(mod_floor(e, 15)) == 0);
  }
  code.check_invariants();
}

TEST_CASE("syndrome of codewords vanishes") {
  BurstCode code = BurstCode::of_box({3, 5});
  auto basis = code.nullspace_basis();
  CHECK(basis.size() == 15 - 6);
  for (const auto& v : basis) CHECK(code.syndrome(v) == 0);
  std::vector<uint8_t> word = basis[0];
  for (size_t i = 0; i < word.size(); ++i) word[i] ^= basis[1][i];
  CHECK(code.syndrome(word) == 0);
}

TEST_CASE("decoding a corrupted codeword restores it") {
  BurstCode code = BurstCode::of_box({3, 5});
  auto basis = code.nullspace_basis();
  std::vector<uint8_t> sent = basis[2];
  std::vector<uint8_t> recv = sent;
  size_t a = *code.cell_index(Point{1, 2});
  size_t b = *code.cell_index(Point{1, 3});
  recv[a] ^= 1;
  recv[b] ^= 1;
  BurstDecodeResult res = code.correct_2burst(recv);
  CHECK(res.corrected == sent);
  CHECK(res.error_cells.size() == 2);
}

TEST_CASE("clean words decode to themselves") {
  BurstCode code = BurstCode::of_box({3, 5});
  std::vector<uint8_t> zero(15, 0);
  BurstDecodeResult res = code.correct_2burst(zero);
  CHECK(res.error_cells.empty());
  CHECK(res.corrected == zero);
}

TEST_CASE("illegal bursts are rejected") {
  BurstCode code = BurstCode::of_box({3, 5});
  CHECK(!code.is_legal_burst({{Point{0, 0}, Point{1, 1}}}));
  CHECK(!code.is_legal_burst({{Point{0, 0}, Point{0, 2}}}));
  CHECK(code.is_legal_burst({{Point{0, 0}, Point{0, 1}}}));
  CHECK(code.is_legal_burst({{Point{0, 0}, Point{1, 0}}}));
}

TEST_CASE("oversized parameters are refused") {
  CHECK_THROWS_AS(BurstCode::of_box({1 << 14, 1 << 14}), Error);
}

TEST_CASE("word length is validated") {
  BurstCode code = BurstCode::of_box({3, 5});
  CHECK_THROWS_AS(code.correct_2burst(std::vector<uint8_t>(14, 0)), Error);
}
