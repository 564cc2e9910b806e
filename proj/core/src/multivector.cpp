#include "loglocal/multivector.hpp"

#include <bit>

namespace loglocal {

namespace {

std::uint64_t full_mask(int rank) {
  return rank == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << rank) - 1);
}

// parity of #{(i,j) in s x t : i > j}; the sign of merging sorted index sets
int shuffle_sign(std::uint64_t s, std::uint64_t t) {
  int inv = 0;
  for (std::uint64_t rest = t; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inv += std::popcount(s >> (j + 1));
  }
  return (inv & 1) ? -1 : 1;
}

}  // namespace

MultiVector::MultiVector(int rank) : rank_(rank) {
  if (rank < 1 || rank > 64) throw InputError("multivector rank must be in 1..64");
}

MultiVector MultiVector::unit(int rank) {
  MultiVector m(rank);
  m.accumulate(0, Int(1));
  return m;
}

MultiVector MultiVector::basis(int rank, std::initializer_list<int> indices) {
  MultiVector m(rank);
  std::uint64_t mask = 0;
  int prev = -1;
  for (int i : indices) {
    if (i < 0 || i >= rank) throw InputError("basis index out of range");
    if (i <= prev) throw InputError("basis indices must be strictly increasing");
    mask |= std::uint64_t{1} << i;
    prev = i;
  }
  m.accumulate(mask, Int(1));
  return m;
}

MultiVector MultiVector::top_generator(int rank) {
  MultiVector m(rank);
  m.accumulate(full_mask(rank), Int(1));
  return m;
}

void MultiVector::accumulate(std::uint64_t mask, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    terms_.emplace(mask, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int MultiVector::coefficient(std::uint64_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Int(0) : it->second;
}

bool MultiVector::is_homogeneous(int* grade) const {
  if (terms_.empty()) {
    if (grade) *grade = -1;
    return true;
  }
  const int g = std::popcount(terms_.begin()->first);
  for (const auto& [mask, c] : terms_)
    if (std::popcount(mask) != g) return false;
  if (grade) *grade = g;
  return true;
}

MultiVector operator+(const MultiVector& a, const MultiVector& b) {
  if (a.rank_ != b.rank_) throw InputError("multivector rank mismatch");
  MultiVector out = a;
  for (const auto& [mask, c] : b.terms_) out.accumulate(mask, c);
  return out;
}

MultiVector operator-(const MultiVector& a, const MultiVector& b) {
  if (a.rank_ != b.rank_) throw InputError("multivector rank mismatch");
  MultiVector out = a;
  for (const auto& [mask, c] : b.terms_) out.accumulate(mask, Int(-c));
  return out;
}

MultiVector operator*(const Int& c, const MultiVector& a) {
  MultiVector out(a.rank_);
  if (c == 0) return out;
  for (const auto& [mask, x] : a.terms_) out.accumulate(mask, c * x);
  return out;
}

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
  if (a.rank() != b.rank()) throw InputError("wedge: rank mismatch");
  MultiVector out(a.rank());
  for (const auto& [s, ca] : a.terms())
    for (const auto& [t, cb] : b.terms()) {
      if (s & t) continue;
      out.accumulate(s | t, Int(shuffle_sign(s, t)) * ca * cb);
    }
  return out;
}

MultiVector contract(const IntVec& n, const MultiVector& a) {
  if (static_cast<int>(n.size()) != a.rank()) throw InputError("contract: rank mismatch");
  MultiVector out(a.rank());
  for (const auto& [mask, c] : a.terms()) {
    int pos = 0;  // 1-based position of the bit within the sorted index set
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      ++pos;
      Int coeff = c * n[i];
      if ((pos - 1) & 1) coeff = -coeff;
      out.accumulate(mask & ~(std::uint64_t{1} << i), coeff);
    }
  }
  return out;
}

AMonomial ell(std::span<const AMonomial> args) {
  if (args.empty()) throw InputError("ell: empty argument list");
  const int rank = args[0].alpha.rank();
  IntVec total(rank, Int(0));
  MultiVector acc = args[0].alpha;
  for (size_t k = 0; k < args.size(); ++k) {
    const AMonomial& m = args[k];
    if (m.alpha.rank() != rank || static_cast<int>(m.exponent.size()) != rank)
      throw InputError("ell: rank mismatch");
    for (int i = 0; i < rank; ++i) total[i] += m.exponent[i];
    if (k > 0) acc = wedge(acc, m.alpha);
  }
  return {total, contract(total, acc)};
}

AMonomial a_product(std::span<const AMonomial> args) {
  if (args.empty()) throw InputError("a_product: empty argument list");
  const int rank = args[0].alpha.rank();
  IntVec total(rank, Int(0));
  MultiVector acc = args[0].alpha;
  for (size_t k = 0; k < args.size(); ++k) {
    const AMonomial& m = args[k];
    if (m.alpha.rank() != rank || static_cast<int>(m.exponent.size()) != rank)
      throw InputError("a_product: rank mismatch");
    for (int i = 0; i < rank; ++i) total[i] += m.exponent[i];
    if (k > 0) acc = wedge(acc, m.alpha);
  }
  return {total, acc};
}

Int top_index(const AMonomial& a) {
  for (const Int& x : a.exponent)
    if (x != 0)
      throw MathError(
          "top_index: nonzero lattice exponent at the sink (curve not rigid/maximal)");
  if (a.alpha.is_zero()) return 0;
  const std::uint64_t full = full_mask(a.alpha.rank());
  if (a.alpha.terms().size() != 1 || a.alpha.terms().begin()->first != full)
    throw MathError(
        "top_index: sink value not concentrated in the top grade (curve not "
        "rigid/maximal)");
  return abs(a.alpha.terms().begin()->second);
}

}  // namespace loglocal
