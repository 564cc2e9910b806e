#pragma once

#include <string>
#include <vector>

#include "loglocal/lattice.hpp"

namespace loglocal {

/* One fake weighted projective factor P(w)/G of dimension n, given by its
   n+1 positive weights (gcd 1), the n+1 primitive rays of its fan in Z^n,
   and the order of the finite quotient group. For a true weighted projective
   space the rays follow from the weights and the group order is 1; fake
   quotients have no canonical coordinates, so explicit rays are the input. */
struct FwpsFactor {
  std::vector<Int> weights;
  std::vector<IntVec> rays;
  Int group_order = 1;

  int dim() const { return static_cast<int>(weights.size()) - 1; }
};

FwpsFactor factor_from_weights(const std::vector<Int>& weights);
FwpsFactor factor_from_rays(std::vector<Int> weights, std::vector<IntVec> rays,
                            Int group_order);

/* One boundary divisor in the frozen global ordering: for each factor its
   first n_i divisors occupy the leading |n| global slots (factor by factor),
   and every factor's last divisor sits among the trailing r slots. The
   two-point curve builder and all tables depend on this order. */
struct Divisor {
  int factor;         // 0-based owning factor
  int local;          // 0-based index within the factor
  bool last;          // local == dim of the owning factor
  Int weight;         // the single nonzero torus weight of this divisor
  IntVec direction;   // primitive ray, block-embedded in Z^{|n|}
};

class NefToricProduct {
 public:
  explicit NefToricProduct(std::vector<FwpsFactor> factors);

  const std::vector<FwpsFactor>& factors() const { return factors_; }
  int num_factors() const { return static_cast<int>(factors_.size()); }  // r
  const std::vector<int>& dims() const { return dims_; }                 // n
  int total_dim() const { return total_dim_; }                           // |n|
  int num_divisors() const { return static_cast<int>(divisors_.size()); }  // l_D = |n|+r

  const std::vector<Divisor>& divisors() const { return divisors_; }
  const Divisor& divisor(int j) const;

  // torus-weight matrix entry, r x l_D, in the frozen divisor order
  Int q_entry(int i, int j) const;

  // K = prod |G_i| * prod w: the constant relating the point class to H^n
  const Int& point_constant() const { return point_constant_; }

  // first coordinate of factor i inside Z^{|n|}
  int embed_offset(int factor) const { return offsets_[factor]; }

 private:
  std::vector<FwpsFactor> factors_;
  std::vector<int> dims_;
  std::vector<int> offsets_;
  int total_dim_;
  std::vector<Divisor> divisors_;
  Int point_constant_;
};

// Effective curve class (d_1,...,d_r), nonnegative and not all zero.
struct CurveClass {
  std::vector<Int> d;
};

// Throws InputError unless d has r nonnegative entries; zero allowed only
// when allow_zero is set (the degree-zero series term is the one consumer).
void check_curve_class(const NefToricProduct& x, const CurveClass& d,
                       bool allow_zero = false);

struct Violation {
  int factor;  // -1 for product-level rules
  std::string rule;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  // index of the first n_i rays divided by the last weight, per factor
  std::vector<Rat> recomputed_group_order;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Checks every factor invariant: positive coprime weights, primitive rays,
// the weight relation sum_j w_j ray_j = 0, and the declared group order
// against the lattice index of the first n_i rays.
ValidationReport validate(const NefToricProduct& x);

// e_j(d) = sum_i Q_ij d_i, the contact order along divisor j (0-based).
Int tangency(const NefToricProduct& x, const CurveClass& d, int j);
Int total_tangency(const NefToricProduct& x, const CurveClass& d);

// N_d = prod_j (-1)^{e_j(d)+1} e_j(d); zero iff some tangency vanishes.
Int sign_factor(const NefToricProduct& x, const CurveClass& d);

// All 0 < d <= dmax componentwise, in lexicographic order.
std::vector<CurveClass> degree_box(const NefToricProduct& x,
                                   const std::vector<Int>& dmax);

}  // namespace loglocal
