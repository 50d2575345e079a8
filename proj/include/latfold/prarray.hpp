#pragma once

#include "latfold/fields.hpp"
#include "latfold/folding.hpp"

namespace latfold {

// Arrays obtained by writing a binary sequence into a shape along a folded
// row. The array extends periodically over the whole grid: the bit at any
// grid point is the bit of its cell.

struct FoldedArray {
  Coloring coloring;
  std::vector<uint8_t> bits;      // per shape cell, in shape point order
  std::vector<uint8_t> row_bits;  // same bits, indexed by folded-row position

  i64 n() const { return coloring.period(); }
  const Shape& shape() const { return coloring.tiling().shape(); }
  uint8_t at(const Point& p) const {
    return row_bits[static_cast<size_t>(coloring.color(p))];
  }
};

FoldedArray fold_bits(Coloring col, const std::vector<uint8_t>& bits);
FoldedArray fold_bits(const Lattice& lat, const Shape& s, const Point& delta,
                      const std::vector<uint8_t>& bits);
FoldedArray fold_msequence(const Lattice& lat, const Shape& s, const Point& delta,
                           const MSequence& m);

// the cell at folded index i takes the bit previously at index i + t
FoldedArray cyclic_shift(const FoldedArray& fa, i64 t);

struct ArrayPropertyReport {
  i64 n = 0;
  bool balance_ok = false;
  bool shift_add_ok = false;
  bool autocorr_ok = false;
  i64 ones = 0, zeros = 0;
  std::string detail;  // first violation, empty when all pass

  bool all_ok() const { return balance_ok && shift_add_ok && autocorr_ok; }
};

// balance, shift-and-add closure, and two-valued autocorrelation, all along
// the folded row
ArrayPropertyReport property_report(const FoldedArray& fa);

// correlation against the copy displaced by each cell of the folded row;
// entry i pairs the displacement row[i] with the correlation value
std::vector<std::pair<Point, i64>> planar_autocorrelation(const FoldedArray& fa);

struct WindowReport {
  bool ok = false;
  i64 windows = 0;           // base positions examined, one per cell
  i64 distinct_nonzero = 0;  // distinct nonzero window contents seen
  bool zero_window = false;  // some placement reads all zeroes
  std::string detail;        // first violation, empty when ok
};

// every placement of the window over the periodic array must read a distinct
// nonzero pattern; requires 2^|window| - 1 == n. The zero-window shortcut is
// computed alongside the direct count and the two must agree.
WindowReport window_property(const FoldedArray& fa, const Shape& window);

// all fixed pentominoes fitting in two grid rows, normalized to touch the
// axes; there are exactly 19 (18 spanning both rows plus the flat strip)
std::vector<Shape> two_row_pentominoes();

}  // namespace latfold
