#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>

#include "loglocal/numeric.hpp"

namespace loglocal {

// Element of the exterior algebra over the dual of Z^rank. A basis term
// e*_{s1} ^ ... ^ e*_{sk} with s1 < ... < sk is stored as the bitmask of
// {s1,...,sk} (0-based); coefficients are arbitrary-precision integers and
// zeros are never stored.
class MultiVector {
 public:
  explicit MultiVector(int rank);

  static MultiVector unit(int rank);  // grade-0 element 1
  static MultiVector basis(int rank, std::initializer_list<int> indices);
  static MultiVector top_generator(int rank);  // e*_1 ^ ... ^ e*_rank

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::uint64_t, Int>& terms() const { return terms_; }

  void accumulate(std::uint64_t mask, const Int& c);
  Int coefficient(std::uint64_t mask) const;

  // -1 for the zero element; otherwise true iff a single grade occurs
  bool is_homogeneous(int* grade = nullptr) const;

  bool operator==(const MultiVector&) const = default;

  friend MultiVector operator+(const MultiVector& a, const MultiVector& b);
  friend MultiVector operator-(const MultiVector& a, const MultiVector& b);
  friend MultiVector operator*(const Int& c, const MultiVector& a);

 private:
  int rank_;
  std::map<std::uint64_t, Int> terms_;
};

// Graded-commutative wedge product with the shuffle sign.
MultiVector wedge(const MultiVector& a, const MultiVector& b);

// Interior product: first-slot evaluation with alternating signs,
// i_n(e*_{s1} ^ ... ^ e*_{sk}) = sum_j (-1)^{j-1} n_{sj} e*_{S \ sj}.
MultiVector contract(const IntVec& n, const MultiVector& a);

// Monomial z^exponent (x) alpha of the algebra Z[N] (x) Lambda* M.
struct AMonomial {
  IntVec exponent;
  MultiVector alpha;

  bool operator==(const AMonomial&) const = default;
};

// z^{n1+...+nk} i_{n1+...+nk}(a1 ^ ... ^ ak), the vertex operation of the
// tropical multiplicity recursion.
AMonomial ell(std::span<const AMonomial> args);

// z^{n1+...+nk} (a1 ^ ... ^ ak): the sink product.
AMonomial a_product(std::span<const AMonomial> args);

// |c| for a = z^0 (x) c * (e*_1 ^ ... ^ e*_rank). Throws MathError when the
// exponent is nonzero or alpha is not concentrated in the top grade
// ("curve not rigid/maximal").
Int top_index(const AMonomial& a);

}  // namespace loglocal
