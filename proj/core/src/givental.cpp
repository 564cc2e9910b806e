#include "loglocal/givental.hpp"

namespace loglocal {

namespace {

Rat factorial(long n) {
  Int f = 1;
  for (long k = 2; k <= n; ++k) f *= k;
  return Rat(f);
}

// shared hypergeometric assembly; the numerator is the local twist
HPoly series_body(const NefToricProduct& x, const CurveClass& d, bool local) {
  const int r = x.num_factors();
  const std::vector<int>& trunc = x.dims();

  HPoly body = HPoly::scalar(CoeffScalar::z_pow(1, r), trunc) * i_prefactor(x);
  for (int j = 0; j < x.num_divisors(); ++j) {
    const long e = to_long(tangency(x, d, j), "tangency");
    if (e == 0) continue;  // restricted product over nonzero tangencies
    const Divisor& dv = x.divisor(j);
    const CoeffScalar w = CoeffScalar::from_rat(Rat(dv.weight), r);
    const HPoly kappa = w * HPoly::h_var(dv.factor, trunc);

    if (local) {
      for (long m = 0; m < e; ++m) {
        HPoly factor = HPoly::scalar(
            CoeffScalar::lambda_pow(1, r) -
                CoeffScalar::from_rat(Rat(m), r) * CoeffScalar::z_pow(1, r),
            trunc);
        factor = factor - kappa;
        body = body * factor;
      }
    }
    for (long m = 1; m <= e; ++m) {
      CoeffScalar mz = CoeffScalar::from_rat(Rat(m), r) * CoeffScalar::z_pow(1, r);
      body = body * hpoly_invert_linear(mz, kappa);
    }
  }
  return body;
}

}  // namespace

HPoly i_prefactor(const NefToricProduct& x) {
  const int r = x.num_factors();
  const std::vector<int>& trunc = x.dims();
  HPoly out = HPoly::one(trunc);
  for (int i = 0; i < r; ++i) {
    HPoly factor(trunc);
    std::vector<int> m(trunc.size(), 0);
    for (int k = 0; k <= x.dims()[i]; ++k) {
      m[i] = k;
      CoeffScalar c(r);
      ScalarKey key;
      key.zpow = -k;
      key.lpow.assign(r, 0);
      key.lpow[i] = k;
      c.accumulate(key, Rat(1) / factorial(k));
      factor.accumulate(m, c);
    }
    out = out * factor;
  }
  return out;
}

ISeriesTerm i_term_base(const NefToricProduct& x, const CurveClass& d) {
  check_curve_class(x, d, /*allow_zero=*/true);
  return {d.d, series_body(x, d, /*local=*/false)};
}

ISeriesTerm i_term_local(const NefToricProduct& x, const CurveClass& d) {
  check_curve_class(x, d);
  return {d.d, series_body(x, d, /*local=*/true)};
}

ISeriesTerm dl_operator(const NefToricProduct& x, const std::vector<int>& l,
                        const ISeriesTerm& term) {
  const int r = x.num_factors();
  if (static_cast<int>(l.size()) != r)
    throw InputError("dl_operator: exponent length must equal the factor count");
  if (static_cast<int>(term.degree.size()) != r)
    throw InputError("dl_operator: term degree length mismatch");
  HPoly body = term.body;
  for (int i = 0; i < r; ++i) {
    if (l[i] < 0 || l[i] > x.dims()[i])
      throw InputError("dl_operator: exponent out of range for factor " +
                       std::to_string(i));
    if (l[i] == 0) continue;
    HPoly factor =
        HPoly::scalar(CoeffScalar::from_rat(Rat(term.degree[i]), r) *
                          CoeffScalar::z_pow(1, r),
                      x.dims()) +
        HPoly::h_var(i, x.dims());
    for (int k = 0; k < l[i]; ++k) body = body * factor;
  }
  return {term.degree, body};
}

MirrorMapReport mirror_map_check(const NefToricProduct& x,
                                 const std::vector<Int>& dmax) {
  const int r = x.num_factors();
  MirrorMapReport report;
  auto flag = [&](const std::vector<Int>& deg, const std::vector<int>& comp,
                  const char* series, const CoeffScalar& value) {
    report.pass = false;
    report.violations.push_back({deg, comp, series, value.str()});
  };

  // components of H-weight <= 1
  std::vector<std::vector<int>> low;
  low.push_back(std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) {
    std::vector<int> m(r, 0);
    m[i] = 1;
    low.push_back(m);
  }

  // degree zero: z + sum_i L_i H_i at z^0 and weight <= 1
  {
    CurveClass zero;
    zero.d.assign(r, Int(0));
    ISeriesTerm t0 = i_term_base(x, zero);
    CoeffScalar c0 = t0.body.identity_component().z_coefficient(0);
    if (!c0.is_zero()) flag(zero.d, low[0], "base", c0);
    for (int i = 0; i < r; ++i) {
      CoeffScalar ci = t0.body.component(low[i + 1]).z_coefficient(0);
      if (!(ci == CoeffScalar::log_var(i, r))) flag(zero.d, low[i + 1], "base", ci);
    }
  }

  for (const CurveClass& d : degree_box(x, dmax)) {
    ISeriesTerm base = i_term_base(x, d);
    ISeriesTerm local = i_term_local(x, d);
    for (const std::vector<int>& m : low) {
      CoeffScalar cb = base.body.component(m).z_coefficient(0);
      if (!cb.is_zero()) flag(d.d, m, "base", cb);
      CoeffScalar cl = local.body.component(m).z_coefficient(0);
      if (!cl.is_zero()) flag(d.d, m, "local", cl);
    }
  }
  return report;
}

Rat p_local_series(const NefToricProduct& x, const CurveClass& d) {
  check_curve_class(x, d);
  // The extraction sits at the leading z-power of the identity component,
  // z^{1-#nz} for #nz nonzero tangencies, where the coefficient is a pure
  // lam^{#nz} monomial. With every tangency positive #nz = |n|+r and this is
  // the z^{1-|n|-r} coefficient; for degenerate classes the zero-tangency
  // divisors each flip the sign (their normal direction contributes no
  // equivariant weight), continuing the restricted-product closed form.
  int nz = 0;
  for (int j = 0; j < x.num_divisors(); ++j)
    if (tangency(x, d, j) != 0) ++nz;
  ISeriesTerm term = i_term_local(x, d);
  CoeffScalar cz = term.body.identity_component().z_coefficient(1 - nz);
  Rat out;
  if (!cz.as_pure_lambda(nz, &out))
    throw MathError("one-point extraction is not a pure lam^" + std::to_string(nz) +
                    " monomial: " + cz.str());
  if ((x.num_divisors() - nz) % 2 != 0) out = -out;
  return out;
}

Rat q_local_series(const NefToricProduct& x, const CurveClass& d) {
  check_curve_class(x, d);
  const int r = x.num_factors();
  ISeriesTerm term = dl_operator(x, x.dims(), i_term_local(x, d));
  CoeffScalar cz = term.body.identity_component().z_coefficient(1 - r);
  CoeffScalar paired = eta(x, x.dims(), std::vector<int>(r, 0)) * cz;
  Rat out;
  if (!paired.as_rational(&out))
    throw MathError("two-point extraction is not rational after pairing: " +
                    paired.str());
  return out;
}

Rat p_closed(const NefToricProduct& x, const CurveClass& d) {
  check_curve_class(x, d);
  Int excess = total_tangency(x, d) - x.total_dim() - x.num_factors();
  Int denom = 1;
  for (int j = 0; j < x.num_divisors(); ++j) {
    Int e = tangency(x, d, j);
    if (e != 0) denom *= e;
  }
  Rat p = make_rat(Int(1), denom);
  if (is_odd(excess)) p = -p;
  return p;
}

Rat q_closed(const NefToricProduct& x, const CurveClass& d) {
  Int scale = x.point_constant();
  for (int i = 0; i < x.num_factors(); ++i)
    scale *= int_pow(d.d[i], static_cast<unsigned long>(x.dims()[i]));
  return Rat(scale) * p_closed(x, d);
}

LocalInvariantPair local_invariants_series(const NefToricProduct& x,
                                           const CurveClass& d) {
  return {p_local_series(x, d), q_local_series(x, d)};
}

LocalInvariantPair local_invariants_closed(const NefToricProduct& x,
                                           const CurveClass& d) {
  return {p_closed(x, d), q_closed(x, d)};
}

}  // namespace loglocal
