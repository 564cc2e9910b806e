#pragma once

#include <string>
#include <vector>

#include "loglocal/coh_ring.hpp"
#include "loglocal/toric.hpp"

namespace loglocal {

/* One degree-d term of an equivariant hypergeometric series, as an element
   of the truncated ring. The prefactor prod_i y_i^{H_i/z} is expanded as
   exp(sum_i L_i H_i / z) with formal log variables, so the body is the exact
   coefficient of y^d. Every term carries the global leading factor z. */
struct ISeriesTerm {
  std::vector<Int> degree;
  HPoly body;
};

// exp(sum_i L_i H_i / z), truncated
HPoly i_prefactor(const NefToricProduct& x);

// Degree-d term of the series for the base geometry: the prefactor divided
// by the Pochhammer-type product prod_j prod_{m=1}^{e_j} (m z + w_j H).
// The zero class is allowed (empty product: z times the prefactor).
ISeriesTerm i_term_base(const NefToricProduct& x, const CurveClass& d);

// Degree-d term for the local geometry: same denominator, with the
// equivariant numerator prod_j prod_{m=0}^{e_j-1} (lam - m z - w_j H).
// Rejects the zero class.
ISeriesTerm i_term_local(const NefToricProduct& x, const CurveClass& d);

// Multiplies the degree-d term by prod_i (z d_i + H_i)^{l_i}: the action of
// prod_i (z y_i d/dy_i)^{l_i} on y^{H/z + d}. Requires l <= n componentwise.
ISeriesTerm dl_operator(const NefToricProduct& x, const std::vector<int>& l,
                        const ISeriesTerm& term);

/* Mirror-map triviality over a degree box: for every 0 < d <= dmax the z^0
   coefficient of every component of H-weight <= 1 of both series terms must
   vanish, and the degree-zero term must reduce to z + sum_i L_i H_i there.
   Violations are listed rather than thrown. */
struct MirrorMapReport {
  struct Entry {
    std::vector<Int> degree;
    std::vector<int> component;
    std::string series;  // "base" or "local"
    std::string value;
  };
  bool pass = true;
  std::vector<Entry> violations;
};
MirrorMapReport mirror_map_check(const NefToricProduct& x,
                                 const std::vector<Int>& dmax);

// One-point local invariant from the series: coefficient of z^{1-|n|-r} of
// the identity component of the local term, asserted to be a pure
// lam^{|n|+r} monomial. Throws MathError when purity fails.
Rat p_local_series(const NefToricProduct& x, const CurveClass& d);

// Two-point local invariant: apply dl with l = n, take the coefficient of
// z^{1-r} of the identity component, and pair with eta(n, 0).
Rat q_local_series(const NefToricProduct& x, const CurveClass& d);

// Closed forms: p = (-1)^{e(d)-|n|-r} / prod'_j e_j(d) with the product over
// nonzero tangencies, q = K * prod_i d_i^{n_i} * p.
Rat p_closed(const NefToricProduct& x, const CurveClass& d);
Rat q_closed(const NefToricProduct& x, const CurveClass& d);

struct LocalInvariantPair {
  Rat p;
  Rat q;
};
LocalInvariantPair local_invariants_series(const NefToricProduct& x,
                                           const CurveClass& d);
LocalInvariantPair local_invariants_closed(const NefToricProduct& x,
                                           const CurveClass& d);

}  // namespace loglocal
