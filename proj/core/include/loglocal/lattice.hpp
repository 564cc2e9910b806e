#pragma once

#include <vector>

#include "loglocal/numeric.hpp"

namespace loglocal {

// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMat {
 public:
  IntMat(int rows, int cols);
  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  bool operator==(const IntMat&) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<Int> a_;
};

IntMat mat_mul(const IntMat& a, const IntMat& b);

// Exact determinant (fraction-free Bareiss elimination).
Int det(const IntMat& a);

// u * a * v == s with u, v unimodular and s diagonal, nonnegative,
// s_1 | s_2 | ... . Pivoting is deterministic: smallest absolute value,
// row-major tie break.
struct SnfResult {
  IntMat u;
  IntMat s;
  IntMat v;
};
SnfResult smith_normal_form(const IntMat& a);

// gcd of the entries is 1. Rejects the zero vector.
bool is_primitive(const IntVec& v);

// |det| of n vectors of length n; equals the index of the generated
// sublattice in Z^n when nonzero. Throws MathError when the vectors are
// linearly dependent.
Int lattice_index(const std::vector<IntVec>& vectors);

// Primitive rays of the weighted projective space P(w) in the quotient
// lattice Z^{n+1}/Zw, with sum_j w_j * ray_j == 0 and the index of any n
// rays equal to the omitted weight. Requires well-formed weights: every
// n-subset coprime (otherwise some quotient ray fails to be primitive).
std::vector<IntVec> wps_fan_from_weights(const std::vector<Int>& weights);

}  // namespace loglocal
