#pragma once

#include <functional>
#include <optional>
#include <unordered_map>

#include "latfold/fields.hpp"
#include "latfold/folding.hpp"

namespace latfold {

// 2-burst-correcting codes over multidimensional arrays. The parity-check
// column of a cell stacks a parity bit, a small axis-mixing block, and a
// power of the field generator; the exponent is the cell's row-major rank in
// the box variant or its folded-row index in the shape variant. A received
// word holds one error when the syndrome's parity entry is one and two
// axis-adjacent errors when it is zero (with a nonzero syndrome).

struct BurstError {
  std::vector<Point> cells;  // one cell, or two cells adjacent along an axis
};

struct BurstDecodeResult {
  std::vector<uint8_t> corrected;
  std::vector<size_t> error_cells;  // indices into cells(), empty when clean
};

class BurstCode {
 public:
  // cells form an n_1 x ... x n_D box; exponent = row-major rank (last axis
  // fastest)
  static BurstCode of_box(const std::vector<i64>& dims);
  // cells are the shape's; exponents follow the folded row. When |S| is
  // below the field's group order the shape is conceptually padded with
  // extra cells along delta so the exponent map stays a homomorphism; the
  // padding carries no code bits and is reported as metadata.
  static BurstCode of_shape(const Lattice& lat, const Shape& s, const Point& delta);

  int dim() const { return D_; }
  int m() const { return m_; }
  int d() const { return d_; }
  int redundancy() const { return m_ + d_ + 1; }
  const GaloisField& field() const { return field_; }
  const std::vector<i64>& dims() const { return dims_; }  // empty for shapes
  const std::optional<Shape>& shape() const { return shape_; }
  const std::vector<Point>& cells() const { return cells_; }
  const std::vector<i64>& exponents() const { return exponent_; }
  const std::vector<Point>& padding() const { return padding_; }
  // exponent-map coefficients: exponent(p) = sum coeff[i] * p[i] mod 2^m-1
  const std::vector<i64>& phi() const { return step_; }

  // packed parity-check column of one cell: bit 0 = parity, bits 1..d = the
  // axis-mixing block, bits d+1..d+m = field element, low degree first
  i64 column(size_t cell) const { return column_[cell]; }
  std::optional<size_t> cell_index(const Point& p) const;

  // XOR of the columns at the set bits of the word (H * word over GF(2))
  i64 syndrome(const std::vector<uint8_t>& word) const;

  // corrects a burst of length <= 2; throws uncorrectable_pattern when no
  // such burst explains the syndrome
  BurstDecodeResult correct_2burst(const std::vector<uint8_t>& received) const;

  // basis of the codeword space (null space of the parity-check matrix)
  std::vector<std::vector<uint8_t>> nullspace_basis() const;

  // all columns distinct, adjacent-pair XORs nonzero and distinct from each
  // other and from every single column; pass a predicate to redefine which
  // cell pairs count as adjacent (the default is axis adjacency)
  void check_invariants(
      const std::function<bool(const Point&, const Point&)>& adjacent = {}) const;

  bool is_legal_burst(const BurstError& e) const;

 private:
  explicit BurstCode(GaloisField f) : field_(std::move(f)) {}
  void assemble();

  int D_ = 0;
  int m_ = 0;
  int d_ = 0;
  GaloisField field_;
  std::vector<i64> dims_;
  std::optional<Shape> shape_;
  std::optional<Lattice> lat_;
  Point delta_;
  std::vector<Point> cells_;
  std::vector<i64> exponent_;   // per cell, in [0, 2^m-1)
  std::vector<i64> step_;       // exponent increment per +1 step along axis j
  std::vector<i64> column_;     // packed columns per cell
  std::vector<Point> padding_;
  std::unordered_map<i64, size_t> cell_by_exponent_;
  std::unordered_map<Point, size_t, PointHash> cell_by_point_;
};

}  // namespace latfold
