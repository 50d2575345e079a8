#pragma once

#include <cstdint>
#include <optional>

#include "latfold/base.hpp"

namespace latfold {

// GF(p^k) with log/antilog tables. Elements are packed base-p digit vectors:
// the element sum c_j x^j is stored as sum c_j p^j, so for p = 2 the packing
// is the usual bit representation. The modulus is a primitive polynomial, so
// x itself generates the multiplicative group.
class GaloisField {
 public:
  // picks the lexicographically least primitive polynomial (by packed value)
  static GaloisField make(i64 p, int k);
  // same, but with a caller-supplied monic modulus given as packed digits
  // including the leading x^k term; rejected if not primitive
  static GaloisField with_modulus(i64 p, int k, i64 packed_poly);

  i64 p() const { return p_; }
  int k() const { return k_; }
  i64 q() const { return q_; }            // p^k
  i64 order() const { return q_ - 1; }    // multiplicative group order
  i64 modulus() const { return poly_; }   // packed, degree k
  i64 gen() const { return x_; }          // the element x

  i64 add(i64 a, i64 b) const;
  i64 sub(i64 a, i64 b) const;
  i64 neg(i64 a) const;
  i64 mul(i64 a, i64 b) const;
  i64 inv(i64 a) const;
  i64 pow(i64 a, i64 e) const;
  i64 log(i64 a) const;   // a != 0; log(exp(e)) = e mod (q-1)
  i64 exp(i64 e) const;   // x^e, any integer e

  // scalar embedding GF(p) -> GF(p^k)
  i64 scalar(i64 c) const { return mod_floor(c, p_); }

 private:
  GaloisField() = default;
  static std::optional<GaloisField> try_modulus(i64 p, int k, i64 packed_poly);
  i64 mul_slow(i64 a, i64 b) const;  // polynomial multiplication mod the modulus
  i64 p_ = 0, q_ = 0, poly_ = 0, x_ = 0;
  int k_ = 0;
  std::vector<i64> log_;      // index: element, value: exponent (log_[0] unused)
  std::vector<i64> antilog_;  // index: exponent in [0, q-1)
};

bool is_prime(i64 n);
// p^k decomposition of a prime power, nullopt otherwise
std::optional<std::pair<i64, int>> prime_power(i64 n);

// Sidon set in Z_n: all pairwise differences of distinct elements are
// distinct modulo n.
struct B2Set {
  i64 n = 0;
  std::vector<i64> elements;  // sorted residues
};

struct B2Check {
  bool ok = false;
  std::string reason;
};

// classical construction in Z_{q^2-1} with q elements, q a prime power
B2Set bose_b2(i64 q);
B2Check verify_b2(const B2Set& b);

// exhaustive backtracking search for a size-m Sidon set in Z_n containing 0,
// lexicographically least; nullopt when none exists within the node budget
std::optional<B2Set> sidon_search(i64 n, int m, i64 node_budget = 50'000'000);

// Binary M-sequences. bits has length 2^n - 1; the feedback polynomial is
// packed like the field modulus (bit j = coefficient of x^j, bit n set).
struct MSequence {
  int n = 0;
  uint32_t poly = 0;
  std::vector<uint8_t> bits;
};

// lexicographically least primitive polynomial of degree n over GF(2)
uint32_t default_primitive_poly(int n);
bool is_primitive_poly(uint32_t packed_poly, int n);

// canonical seed 0...01: bits start with n-1 zeroes followed by a one
MSequence msequence(int n, std::optional<uint32_t> poly = std::nullopt);

struct MSeqReport {
  int n = 0;
  bool window_ok = false;
  bool balance_ok = false;
  bool shift_add_ok = false;
  bool autocorr_ok = false;
  i64 ones = 0, zeros = 0;
  std::string detail;  // first violation, empty when all pass

  bool all_ok() const { return window_ok && balance_ok && shift_add_ok && autocorr_ok; }
};

// full property battery: cyclic n-window bijection onto nonzero n-tuples,
// balance, shift-and-add closure, two-valued autocorrelation
MSeqReport validate_msequence(const std::vector<uint8_t>& bits);

}  // namespace latfold
