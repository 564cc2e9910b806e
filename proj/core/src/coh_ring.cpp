#include "loglocal/coh_ring.hpp"

#include <sstream>

namespace loglocal {

CoeffScalar::CoeffScalar(int num_l) : num_l_(num_l) {
  if (num_l < 0) throw InputError("negative L-variable count");
}

CoeffScalar CoeffScalar::from_rat(const Rat& c, int num_l) {
  CoeffScalar out(num_l);
  out.accumulate({0, 0, std::vector<int>(num_l, 0)}, c);
  return out;
}

CoeffScalar CoeffScalar::lambda_pow(int k, int num_l) {
  CoeffScalar out(num_l);
  out.accumulate({k, 0, std::vector<int>(num_l, 0)}, Rat(1));
  return out;
}

CoeffScalar CoeffScalar::z_pow(int k, int num_l) {
  CoeffScalar out(num_l);
  out.accumulate({0, k, std::vector<int>(num_l, 0)}, Rat(1));
  return out;
}

CoeffScalar CoeffScalar::log_var(int i, int num_l) {
  if (i < 0 || i >= num_l) throw InputError("L-variable index out of range");
  std::vector<int> lp(num_l, 0);
  lp[i] = 1;
  CoeffScalar out(num_l);
  out.accumulate({0, 0, std::move(lp)}, Rat(1));
  return out;
}

void CoeffScalar::accumulate(const ScalarKey& k, const Rat& c) {
  if (c == 0) return;
  if (static_cast<int>(k.lpow.size()) != num_l_)
    throw InputError("scalar key has wrong L-variable count");
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CoeffScalar CoeffScalar::operator-() const {
  CoeffScalar out(num_l_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, Rat(-c));
  return out;
}

CoeffScalar operator+(const CoeffScalar& a, const CoeffScalar& b) {
  if (a.num_l_ != b.num_l_) throw InputError("scalar L-variable count mismatch");
  CoeffScalar out = a;
  for (const auto& [k, c] : b.terms_) out.accumulate(k, c);
  return out;
}

CoeffScalar operator-(const CoeffScalar& a, const CoeffScalar& b) {
  if (a.num_l_ != b.num_l_) throw InputError("scalar L-variable count mismatch");
  CoeffScalar out = a;
  for (const auto& [k, c] : b.terms_) out.accumulate(k, Rat(-c));
  return out;
}

CoeffScalar operator*(const CoeffScalar& a, const CoeffScalar& b) {
  if (a.num_l_ != b.num_l_) throw InputError("scalar L-variable count mismatch");
  CoeffScalar out(a.num_l_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      ScalarKey k;
      k.lam = ka.lam + kb.lam;
      k.zpow = ka.zpow + kb.zpow;
      k.lpow.resize(ka.lpow.size());
      for (size_t i = 0; i < k.lpow.size(); ++i) k.lpow[i] = ka.lpow[i] + kb.lpow[i];
      out.accumulate(k, ca * cb);
    }
  return out;
}

CoeffScalar CoeffScalar::z_coefficient(int zpow) const {
  CoeffScalar out(num_l_);
  for (const auto& [k, c] : terms_) {
    if (k.zpow != zpow) continue;
    ScalarKey stripped = k;
    stripped.zpow = 0;
    out.accumulate(stripped, c);
  }
  return out;
}

bool CoeffScalar::as_rational(Rat* out) const {
  if (terms_.empty()) {
    if (out) *out = 0;
    return true;
  }
  if (terms_.size() != 1) return false;
  const auto& [k, c] = *terms_.begin();
  if (k.lam != 0 || k.zpow != 0) return false;
  for (int p : k.lpow)
    if (p != 0) return false;
  if (out) *out = c;
  return true;
}

bool CoeffScalar::as_pure_lambda(int lam, Rat* out) const {
  if (terms_.empty()) {
    if (out) *out = 0;
    return true;
  }
  if (terms_.size() != 1) return false;
  const auto& [k, c] = *terms_.begin();
  if (k.lam != lam || k.zpow != 0) return false;
  for (int p : k.lpow)
    if (p != 0) return false;
  if (out) *out = c;
  return true;
}

CoeffScalar CoeffScalar::l_derivative(int i) const {
  if (i < 0 || i >= num_l_) throw InputError("L-variable index out of range");
  CoeffScalar out(num_l_);
  for (const auto& [k, c] : terms_) {
    if (k.lpow[i] == 0) continue;
    ScalarKey kd = k;
    kd.lpow[i] -= 1;
    out.accumulate(kd, Rat(k.lpow[i]) * c);
  }
  return out;
}

std::string CoeffScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << rat_str(c) << ")";
    if (k.lam != 0) os << "*lam^" << k.lam;
    if (k.zpow != 0) os << "*z^" << k.zpow;
    for (size_t i = 0; i < k.lpow.size(); ++i)
      if (k.lpow[i] != 0) os << "*L" << i + 1 << "^" << k.lpow[i];
  }
  return os.str();
}

HPoly::HPoly(std::vector<int> trunc) : trunc_(std::move(trunc)) {
  for (int n : trunc_)
    if (n < 0) throw InputError("truncation bounds must be nonnegative");
}

HPoly HPoly::scalar(const CoeffScalar& c, const std::vector<int>& trunc) {
  HPoly out(trunc);
  out.accumulate(std::vector<int>(trunc.size(), 0), c);
  return out;
}

HPoly HPoly::one(const std::vector<int>& trunc) {
  return scalar(CoeffScalar::from_rat(Rat(1), static_cast<int>(trunc.size())), trunc);
}

HPoly HPoly::h_var(int i, const std::vector<int>& trunc) {
  if (i < 0 || i >= static_cast<int>(trunc.size()))
    throw InputError("H-variable index out of range");
  HPoly out(trunc);
  std::vector<int> m(trunc.size(), 0);
  m[i] = 1;
  // H_i is already zero when the factor is a point; not a case that arises
  if (trunc[i] >= 1)
    out.accumulate(m, CoeffScalar::from_rat(Rat(1), static_cast<int>(trunc.size())));
  return out;
}

void HPoly::accumulate(const std::vector<int>& m, const CoeffScalar& c) {
  if (m.size() != trunc_.size()) throw InputError("H-exponent length mismatch");
  if (c.num_l() != num_l()) throw InputError("coefficient L-variable count mismatch");
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) throw InputError("negative H-exponent");
    if (m[i] > trunc_[i]) return;  // truncated away
  }
  if (c.is_zero()) return;
  auto it = comps_.find(m);
  if (it == comps_.end()) {
    comps_.emplace(m, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

CoeffScalar HPoly::component(const std::vector<int>& m) const {
  auto it = comps_.find(m);
  return it == comps_.end() ? CoeffScalar(num_l()) : it->second;
}

CoeffScalar HPoly::identity_component() const {
  return component(std::vector<int>(trunc_.size(), 0));
}

HPoly operator+(const HPoly& a, const HPoly& b) {
  if (a.trunc_ != b.trunc_) throw InputError("geometry mismatch in ring sum");
  HPoly out = a;
  for (const auto& [m, c] : b.comps_) out.accumulate(m, c);
  return out;
}

HPoly operator-(const HPoly& a, const HPoly& b) {
  if (a.trunc_ != b.trunc_) throw InputError("geometry mismatch in ring difference");
  HPoly out = a;
  for (const auto& [m, c] : b.comps_) out.accumulate(m, -c);
  return out;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
  if (a.trunc_ != b.trunc_) throw InputError("geometry mismatch in ring product");
  HPoly out(a.trunc_);
  std::vector<int> m(a.trunc_.size());
  for (const auto& [ma, ca] : a.comps_)
    for (const auto& [mb, cb] : b.comps_) {
      bool keep = true;
      for (size_t i = 0; i < m.size(); ++i) {
        m[i] = ma[i] + mb[i];
        if (m[i] > a.trunc_[i]) {
          keep = false;
          break;
        }
      }
      if (keep) out.accumulate(m, ca * cb);
    }
  return out;
}

HPoly operator*(const CoeffScalar& c, const HPoly& a) {
  HPoly out(a.trunc_);
  for (const auto& [m, x] : a.comps_) out.accumulate(m, c * x);
  return out;
}

HPoly HPoly::l_derivative(int i) const {
  HPoly out(trunc_);
  for (const auto& [m, c] : comps_) out.accumulate(m, c.l_derivative(i));
  return out;
}

HPoly hpoly_invert_linear(const CoeffScalar& c, const HPoly& nilpotent) {
  // c must be q * z^a with q != 0
  if (c.terms().size() != 1) throw InputError("invert: leading scalar must be a monomial");
  const auto& [k, q] = *c.terms().begin();
  if (k.lam != 0) throw InputError("invert: leading scalar must be lambda-free");
  for (int p : k.lpow)
    if (p != 0) throw InputError("invert: leading scalar must be L-free");
  if (!nilpotent.identity_component().is_zero())
    throw InputError("invert: nilpotent part has a nonzero constant term");

  CoeffScalar c_inv(c.num_l());
  c_inv.accumulate({0, -k.zpow, std::vector<int>(k.lpow.size(), 0)}, Rat(1) / q);

  HPoly out = HPoly::scalar(c_inv, nilpotent.trunc());
  HPoly power = HPoly::one(nilpotent.trunc());
  CoeffScalar factor = c_inv;
  for (;;) {
    power = power * nilpotent;
    if (power.is_zero()) break;
    factor = -(factor * c_inv);  // (-1)^k / c^{k+1}
    out = out + factor * power;
  }
  return out;
}

namespace {

CoeffScalar eta_value(const NefToricProduct& x, const std::vector<int>& l,
                      const std::vector<int>& m, bool inverse) {
  const int r = x.num_factors();
  if (static_cast<int>(l.size()) != r || static_cast<int>(m.size()) != r)
    throw InputError("pairing: exponent length must equal the factor count");
  bool antidiag = true;
  for (int i = 0; i < r; ++i) {
    if (l[i] < 0 || l[i] > x.dims()[i] || m[i] < 0 || m[i] > x.dims()[i])
      throw InputError("pairing: exponent exceeds the truncation range");
    if (l[i] + m[i] != x.dims()[i]) antidiag = false;
  }
  CoeffScalar out(r);
  if (!antidiag) return out;
  const int top = x.total_dim() + r;
  if (inverse)
    out.accumulate({top, 0, std::vector<int>(r, 0)},
                   make_rat(Int(1), x.point_constant()));
  else
    out.accumulate({-top, 0, std::vector<int>(r, 0)}, Rat(x.point_constant()));
  return out;
}

}  // namespace

CoeffScalar eta(const NefToricProduct& x, const std::vector<int>& l,
                const std::vector<int>& m) {
  return eta_value(x, l, m, false);
}

CoeffScalar eta_inv(const NefToricProduct& x, const std::vector<int>& l,
                    const std::vector<int>& m) {
  return eta_value(x, l, m, true);
}

}  // namespace loglocal
