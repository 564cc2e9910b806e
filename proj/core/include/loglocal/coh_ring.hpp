#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "loglocal/toric.hpp"

namespace loglocal {

/* Coefficient scalars of the equivariant series: exact rationals times a
   monomial in the equivariant parameter (Laurent in lam), the formal log
   variables L_1..L_r of the mirror map, and Laurent powers of z. Every
   series handled here has finite support per degree, so no rational-function
   normalization is ever needed. */
struct ScalarKey {
  int lam = 0;
  int zpow = 0;
  std::vector<int> lpow;

  auto operator<=>(const ScalarKey&) const = default;
};

class CoeffScalar {
 public:
  explicit CoeffScalar(int num_l);

  static CoeffScalar from_rat(const Rat& c, int num_l);
  static CoeffScalar lambda_pow(int k, int num_l);
  static CoeffScalar z_pow(int k, int num_l);
  static CoeffScalar log_var(int i, int num_l);  // L_i

  int num_l() const { return num_l_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<ScalarKey, Rat>& terms() const { return terms_; }

  void accumulate(const ScalarKey& k, const Rat& c);

  CoeffScalar operator-() const;
  friend CoeffScalar operator+(const CoeffScalar& a, const CoeffScalar& b);
  friend CoeffScalar operator-(const CoeffScalar& a, const CoeffScalar& b);
  friend CoeffScalar operator*(const CoeffScalar& a, const CoeffScalar& b);

  // terms with the given z power, with z stripped out
  CoeffScalar z_coefficient(int zpow) const;

  // zero or a single constant term
  bool as_rational(Rat* out) const;
  // zero or a single lam^k term with no z and no L content
  bool as_pure_lambda(int k, Rat* out) const;

  // formal derivative in L_i
  CoeffScalar l_derivative(int i) const;

  std::string str() const;  // deterministic, for diagnostics

  bool operator==(const CoeffScalar&) const = default;

 private:
  int num_l_;
  std::map<ScalarKey, Rat> terms_;
};

/* Polynomials in the hyperplane classes H_1..H_r with CoeffScalar
   coefficients, truncated by H_i^{n_i+1} = 0. The truncation vector doubles
   as the geometry tag: operands must agree on it. */
class HPoly {
 public:
  explicit HPoly(std::vector<int> trunc);

  static HPoly scalar(const CoeffScalar& c, const std::vector<int>& trunc);
  static HPoly one(const std::vector<int>& trunc);
  static HPoly h_var(int i, const std::vector<int>& trunc);

  const std::vector<int>& trunc() const { return trunc_; }
  int num_l() const { return static_cast<int>(trunc_.size()); }
  bool is_zero() const { return comps_.empty(); }
  const std::map<std::vector<int>, CoeffScalar>& components() const { return comps_; }

  void accumulate(const std::vector<int>& m, const CoeffScalar& c);
  CoeffScalar component(const std::vector<int>& m) const;
  CoeffScalar identity_component() const;

  friend HPoly operator+(const HPoly& a, const HPoly& b);
  friend HPoly operator-(const HPoly& a, const HPoly& b);
  friend HPoly operator*(const HPoly& a, const HPoly& b);
  friend HPoly operator*(const CoeffScalar& c, const HPoly& a);

  HPoly l_derivative(int i) const;

  bool operator==(const HPoly&) const = default;

 private:
  std::vector<int> trunc_;
  std::map<std::vector<int>, CoeffScalar> comps_;
};

// (c + kappa)^{-1} = c^{-1} sum_k (-kappa/c)^k for c a nonzero rational
// z-monomial and kappa nilpotent (zero identity component); the sum is
// finite by truncation.
HPoly hpoly_invert_linear(const CoeffScalar& c, const HPoly& nilpotent);

// Poincare pairing of the local geometry on the H^l basis and its inverse:
// K/lam^{|n|+r} on the anti-diagonal l+m = n, zero elsewhere.
CoeffScalar eta(const NefToricProduct& x, const std::vector<int>& l,
                const std::vector<int>& m);
CoeffScalar eta_inv(const NefToricProduct& x, const std::vector<int>& l,
                    const std::vector<int>& m);

}  // namespace loglocal
