#include "loglocal/fleet.hpp"

namespace loglocal {

namespace {

NefToricProduct projective(std::initializer_list<int> dims) {
  std::vector<FwpsFactor> factors;
  for (int n : dims)
    factors.push_back(factor_from_weights(std::vector<Int>(n + 1, Int(1))));
  return NefToricProduct(std::move(factors));
}

NefToricProduct weighted_p112() {
  return NefToricProduct({factor_from_weights({Int(1), Int(1), Int(2)})});
}

NefToricProduct fake_p2() {
  return NefToricProduct({factor_from_rays(
      {Int(1), Int(1), Int(1)},
      {{Int(3), Int(-2)}, {Int(0), Int(1)}, {Int(-3), Int(1)}}, Int(3))});
}

}  // namespace

std::vector<std::pair<std::string, NefToricProduct>> standard_fleet() {
  std::vector<std::pair<std::string, NefToricProduct>> fleet;
  fleet.emplace_back("P1", projective({1}));
  fleet.emplace_back("P2", projective({2}));
  fleet.emplace_back("P3", projective({3}));
  fleet.emplace_back("P1xP1", projective({1, 1}));
  fleet.emplace_back("P1xP1xP1", projective({1, 1, 1}));
  fleet.emplace_back("P1xP2", projective({1, 2}));
  fleet.emplace_back("P(1,1,2)", weighted_p112());
  fleet.emplace_back("fakeP2", fake_p2());
  return fleet;
}

NefToricProduct fleet_geometry(const std::string& name) {
  for (auto& [n, x] : standard_fleet())
    if (n == name) return x;
  throw InputError("unknown fleet geometry: " + name);
}

}  // namespace loglocal
