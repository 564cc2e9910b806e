#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "loglocal/coh_ring.hpp"
#include "loglocal/fleet.hpp"

using namespace loglocal;

namespace {

CoeffScalar rational(int num, int den, int num_l) {
  return CoeffScalar::from_rat(make_rat(Int(num), Int(den)), num_l);
}

CoeffScalar random_scalar(std::mt19937& rng, int num_l) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> expn(-2, 2);
  std::uniform_int_distribution<int> small(0, 2);
  CoeffScalar out(num_l);
  const int terms = static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    ScalarKey k;
    k.lam = small(rng);
    k.zpow = expn(rng);
    k.lpow.assign(num_l, 0);
    for (int i = 0; i < num_l; ++i) k.lpow[i] = small(rng);
    out.accumulate(k, Rat(num(rng)));
  }
  return out;
}

HPoly random_hpoly(std::mt19937& rng, const std::vector<int>& trunc) {
  HPoly out(trunc);
  std::vector<int> m(trunc.size());
  const int comps = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < comps; ++t) {
    for (size_t i = 0; i < trunc.size(); ++i)
      m[i] = static_cast<int>(rng() % (trunc[i] + 1));
    out.accumulate(m, random_scalar(rng, static_cast<int>(trunc.size())));
  }
  return out;
}

}  // namespace

TEST_CASE("truncation kills high powers") {
  std::vector<int> p1 = {1};
  HPoly h = HPoly::h_var(0, p1);
  CHECK((h * h).is_zero());
  HPoly any = HPoly::one(p1) + h;
  CHECK(any * HPoly::one(p1) == any);
}

TEST_CASE("hand multiplication with mixed scalars") {
  // (lam - z - H) * (z^{-1} - H z^{-2}) in the line geometry
  std::vector<int> p1 = {1};
  const int r = 1;
  HPoly a = HPoly::scalar(CoeffScalar::lambda_pow(1, r) - CoeffScalar::z_pow(1, r), p1) -
            HPoly::h_var(0, p1);
  HPoly b = HPoly::scalar(CoeffScalar::z_pow(-1, r), p1) -
            CoeffScalar::z_pow(-2, r) * HPoly::h_var(0, p1);
  HPoly prod = a * b;

  // identity component: lam z^{-1} - 1
  CoeffScalar c0 = prod.identity_component();
  CoeffScalar expect0 = CoeffScalar::lambda_pow(1, r) * CoeffScalar::z_pow(-1, r) -
                        rational(1, 1, r);
  CHECK(c0 == expect0);
  // H component: -lam z^{-2} + z^{-1} - z^{-1} = -lam z^{-2}
  CoeffScalar c1 = prod.component({1});
  CoeffScalar expect1 =
      -(CoeffScalar::lambda_pow(1, r) * CoeffScalar::z_pow(-2, r));
  CHECK(c1 == expect1);
}

TEST_CASE("linear inverses") {
  const int r = 1;
  std::vector<int> p1 = {1};
  // 1/z
  HPoly inv0 = hpoly_invert_linear(CoeffScalar::z_pow(1, r), HPoly(p1));
  CHECK(inv0 == HPoly::scalar(CoeffScalar::z_pow(-1, r), p1));

  // (z + H)^{-1} = z^{-1} - H z^{-2} in the line
  HPoly inv1 = hpoly_invert_linear(CoeffScalar::z_pow(1, r), HPoly::h_var(0, p1));
  HPoly expect1 = HPoly::scalar(CoeffScalar::z_pow(-1, r), p1) -
                  CoeffScalar::z_pow(-2, r) * HPoly::h_var(0, p1);
  CHECK(inv1 == expect1);

  // (2z + H)^{-1} = z^{-1}/2 - H z^{-2}/4 + H^2 z^{-3}/8 in the plane
  std::vector<int> p2 = {2};
  CoeffScalar two_z = rational(2, 1, r) * CoeffScalar::z_pow(1, r);
  HPoly h = HPoly::h_var(0, p2);
  HPoly inv2 = hpoly_invert_linear(two_z, h);
  HPoly expect2 =
      HPoly::scalar(rational(1, 2, r) * CoeffScalar::z_pow(-1, r), p2) -
      (rational(1, 4, r) * CoeffScalar::z_pow(-2, r)) * h +
      (rational(1, 8, r) * CoeffScalar::z_pow(-3, r)) * (h * h);
  CHECK(inv2 == expect2);

  CHECK_THROWS_AS(hpoly_invert_linear(CoeffScalar(r), HPoly::h_var(0, p1)), InputError);
  CHECK_THROWS_AS(hpoly_invert_linear(CoeffScalar::z_pow(1, r), HPoly::one(p1)),
                  InputError);
}

TEST_CASE("inverse identity on random nilpotents") {
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> cnum(1, 5);
  std::uniform_int_distribution<int> czp(-2, 2);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> trunc = {1 + static_cast<int>(rng() % 3),
                              1 + static_cast<int>(rng() % 2)};
    HPoly kappa = random_hpoly(rng, trunc);
    // strip the constant term to make it nilpotent
    HPoly nil = kappa - HPoly::scalar(kappa.identity_component(), trunc);
    CoeffScalar c = rational(cnum(rng), 1, 2) * CoeffScalar::z_pow(czp(rng), 2);
    HPoly inv = hpoly_invert_linear(c, nil);
    HPoly lin = HPoly::scalar(c, trunc) + nil;
    CHECK(inv * lin == HPoly::one(trunc));
  }
}

TEST_CASE("ring laws on random elements") {
  std::mt19937 rng(314159);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> trunc = {1 + static_cast<int>(rng() % 3),
                              1 + static_cast<int>(rng() % 3)};
    HPoly a = random_hpoly(rng, trunc);
    HPoly b = random_hpoly(rng, trunc);
    HPoly c = random_hpoly(rng, trunc);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("geometry mismatch is rejected") {
  HPoly a = HPoly::one({1});
  HPoly b = HPoly::one({2});
  CHECK_THROWS_AS(a * b, InputError);
  CHECK_THROWS_AS(a + b, InputError);
}

TEST_CASE("pairing values") {
  NefToricProduct p2 = fleet_geometry("P2");
  // on the plane: K = 1, top power 3: eta_{0,(2)} = 1/lam^3
  CoeffScalar e = eta(p2, {0}, {2});
  REQUIRE(e.terms().size() == 1);
  CHECK(e.terms().begin()->first.lam == -3);
  CHECK(e.terms().begin()->second == 1);

  NefToricProduct p112 = fleet_geometry("P(1,1,2)");
  CoeffScalar e2 = eta(p112, {0}, {2});
  REQUIRE(e2.terms().size() == 1);
  CHECK(e2.terms().begin()->first.lam == -3);
  CHECK(e2.terms().begin()->second == 2);

  // off the anti-diagonal everything vanishes
  CHECK(eta(p2, {0}, {1}).is_zero());
  CHECK(eta(p2, {2}, {2}).is_zero());
  CHECK_THROWS_AS(eta(p2, {3}, {0}), InputError);

  // eta * eta_inv restricted to the pairing slot is 1
  for (const auto& [name, x] : standard_fleet()) {
    std::vector<int> zero(x.num_factors(), 0);
    std::vector<int> l = zero;
    for (;;) {
      std::vector<int> m(x.num_factors());
      for (int i = 0; i < x.num_factors(); ++i) m[i] = x.dims()[i] - l[i];
      CoeffScalar prod = eta(x, l, m) * eta_inv(x, m, l);
      Rat val;
      CHECK(prod.as_rational(&val));
      CHECK(val == 1);
      int pos = x.num_factors() - 1;
      while (pos >= 0 && l[pos] == x.dims()[pos]) l[pos--] = 0;
      if (pos < 0) break;
      ++l[pos];
    }
  }
}

TEST_CASE("formal derivative in the log variables") {
  const int r = 2;
  CoeffScalar l0 = CoeffScalar::log_var(0, r);
  CoeffScalar sq = l0 * l0;
  CHECK(sq.l_derivative(0) == rational(2, 1, r) * l0);
  CHECK(sq.l_derivative(1).is_zero());
  CHECK(CoeffScalar::log_var(1, r).l_derivative(1) == rational(1, 1, r));
}
