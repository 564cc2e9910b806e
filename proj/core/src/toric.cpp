#include "loglocal/toric.hpp"

#include <sstream>

namespace loglocal {

FwpsFactor factor_from_weights(const std::vector<Int>& weights) {
  FwpsFactor f;
  f.weights = weights;
  f.rays = wps_fan_from_weights(weights);
  f.group_order = 1;
  return f;
}

FwpsFactor factor_from_rays(std::vector<Int> weights, std::vector<IntVec> rays,
                            Int group_order) {
  FwpsFactor f;
  f.weights = std::move(weights);
  f.rays = std::move(rays);
  f.group_order = std::move(group_order);
  return f;
}

NefToricProduct::NefToricProduct(std::vector<FwpsFactor> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw InputError("geometry needs at least one factor");
  total_dim_ = 0;
  for (size_t i = 0; i < factors_.size(); ++i) {
    const FwpsFactor& f = factors_[i];
    if (f.weights.size() < 2)
      throw InputError("factor " + std::to_string(i) + ": needs at least two weights");
    const int n = f.dim();
    if (static_cast<int>(f.rays.size()) != n + 1)
      throw InputError("factor " + std::to_string(i) + ": expected " +
                       std::to_string(n + 1) + " rays");
    for (const IntVec& r : f.rays)
      if (static_cast<int>(r.size()) != n)
        throw InputError("factor " + std::to_string(i) + ": rays must have length " +
                         std::to_string(n));
    if (f.group_order < 1)
      throw InputError("factor " + std::to_string(i) + ": group order must be positive");
    dims_.push_back(n);
    offsets_.push_back(total_dim_);
    total_dim_ += n;
  }

  auto embed = [&](int factor, const IntVec& ray) {
    IntVec dir(total_dim_, Int(0));
    for (size_t c = 0; c < ray.size(); ++c) dir[offsets_[factor] + c] = ray[c];
    return dir;
  };

  // non-last divisors first, factor by factor; last divisors trail
  for (size_t i = 0; i < factors_.size(); ++i)
    for (int j = 0; j < dims_[i]; ++j)
      divisors_.push_back({static_cast<int>(i), j, false, factors_[i].weights[j],
                           embed(static_cast<int>(i), factors_[i].rays[j])});
  for (size_t i = 0; i < factors_.size(); ++i) {
    const int j = dims_[i];
    divisors_.push_back({static_cast<int>(i), j, true, factors_[i].weights[j],
                         embed(static_cast<int>(i), factors_[i].rays[j])});
  }

  point_constant_ = 1;
  for (const FwpsFactor& f : factors_) {
    point_constant_ *= f.group_order;
    for (const Int& w : f.weights) point_constant_ *= w;
  }
}

const Divisor& NefToricProduct::divisor(int j) const {
  if (j < 0 || j >= num_divisors())
    throw InputError("divisor index " + std::to_string(j) + " out of range");
  return divisors_[j];
}

Int NefToricProduct::q_entry(int i, int j) const {
  if (i < 0 || i >= num_factors()) throw InputError("factor index out of range");
  const Divisor& dv = divisor(j);
  return dv.factor == i ? dv.weight : Int(0);
}

void check_curve_class(const NefToricProduct& x, const CurveClass& d, bool allow_zero) {
  if (static_cast<int>(d.d.size()) != x.num_factors())
    throw InputError("curve class: expected " + std::to_string(x.num_factors()) +
                     " entries, got " + std::to_string(d.d.size()));
  bool nonzero = false;
  for (const Int& v : d.d) {
    if (v < 0) throw InputError("curve class: entries must be nonnegative");
    if (v != 0) nonzero = true;
  }
  if (!nonzero && !allow_zero) throw InputError("curve class: zero class rejected");
}

std::string ValidationReport::to_string() const {
  if (violations.empty()) return "valid";
  std::ostringstream os;
  for (const Violation& v : violations) {
    if (v.factor >= 0) os << "factor " << v.factor << ": ";
    os << v.rule << ": " << v.detail << "\n";
  }
  return os.str();
}

ValidationReport validate(const NefToricProduct& x) {
  ValidationReport report;
  auto add = [&](int factor, std::string rule, std::string detail) {
    report.violations.push_back({factor, std::move(rule), std::move(detail)});
  };

  for (int i = 0; i < x.num_factors(); ++i) {
    const FwpsFactor& f = x.factors()[i];
    const int n = f.dim();

    Int g = 0;
    bool positive = true;
    for (const Int& w : f.weights) {
      if (w < 1) positive = false;
      g = gcd(g, w);
    }
    if (!positive) add(i, "weights.positive", "all weights must be >= 1");
    if (positive && g != 1) add(i, "weights.coprime", "gcd of weights is " + int_str(g));

    for (int j = 0; j <= n; ++j) {
      bool zero = true;
      for (const Int& c : f.rays[j])
        if (c != 0) zero = false;
      if (zero) {
        add(i, "rays.primitive", "ray " + std::to_string(j) + " is zero");
        continue;
      }
      if (!is_primitive(f.rays[j]))
        add(i, "rays.primitive", "ray " + std::to_string(j) + " is not primitive");
    }

    for (int c = 0; c < n; ++c) {
      Int acc = 0;
      for (int j = 0; j <= n; ++j) acc += f.weights[j] * f.rays[j][c];
      if (acc != 0) {
        add(i, "weights.relation",
            "sum_j w_j ray_j is nonzero in coordinate " + std::to_string(c));
        break;
      }
    }

    // declared |G| against the index of the first n rays over the last weight
    try {
      std::vector<IntVec> first(f.rays.begin(), f.rays.begin() + n);
      Int index = lattice_index(first);
      Rat rec = make_rat(index, f.weights[n]);
      report.recomputed_group_order.push_back(rec);
      if (rec != Rat(f.group_order))
        add(i, "group.index",
            "lattice index of the first " + std::to_string(n) + " rays is " +
                int_str(index) + ", expected last weight * |G| = " +
                int_str(Int(f.weights[n] * f.group_order)));
    } catch (const MathError&) {
      report.recomputed_group_order.push_back(Rat(0));
      add(i, "rays.independent", "first " + std::to_string(n) + " rays are dependent");
    }
  }
  return report;
}

Int tangency(const NefToricProduct& x, const CurveClass& d, int j) {
  check_curve_class(x, d, /*allow_zero=*/true);
  const Divisor& dv = x.divisor(j);
  return dv.weight * d.d[dv.factor];
}

Int total_tangency(const NefToricProduct& x, const CurveClass& d) {
  Int e = 0;
  for (int j = 0; j < x.num_divisors(); ++j) e += tangency(x, d, j);
  return e;
}

Int sign_factor(const NefToricProduct& x, const CurveClass& d) {
  check_curve_class(x, d);
  Int out = 1;
  for (int j = 0; j < x.num_divisors(); ++j) {
    Int e = tangency(x, d, j);
    out *= e;
    if (!is_odd(e)) out = -out;  // (-1)^{e+1}
  }
  return out;
}

std::vector<CurveClass> degree_box(const NefToricProduct& x,
                                   const std::vector<Int>& dmax) {
  if (static_cast<int>(dmax.size()) != x.num_factors())
    throw InputError("dmax: expected one bound per factor");
  for (const Int& m : dmax)
    if (m < 1) throw InputError("dmax: bounds must be >= 1");

  std::vector<CurveClass> out;
  CurveClass d;
  d.d.assign(x.num_factors(), Int(0));
  for (;;) {
    // odometer with the last coordinate fastest = ascending lexicographic
    int pos = x.num_factors() - 1;
    while (pos >= 0 && d.d[pos] == dmax[pos]) {
      d.d[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    d.d[pos] += 1;
    out.push_back(d);
  }
  return out;
}

}  // namespace loglocal
