#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace loglocal {

// Everything in the math path is exact: arbitrary-precision integers and
// rationals throughout, no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed user data: geometry files, curve classes, out-of-range arguments.
struct InputError : Error {
  using Error::Error;
};

// Internal structure violations: degenerate lattices, a sink monomial that is
// not concentrated in the top grade, coefficient-purity failures. These signal
// a bug or an invalid curve rather than bad user input.
struct MathError : Error {
  using Error::Error;
};

// Canonical rational with positive denominator in lowest terms.
Rat make_rat(const Int& num, const Int& den);

// "p/q" in lowest terms with q > 0, or plain "p" when q == 1.
std::string rat_str(const Rat& q);
std::string int_str(const Int& v);

bool is_odd(const Int& v);
Int int_pow(const Int& base, unsigned long exp);

// Checked narrowing for exponent bookkeeping (z-powers, product lengths).
long to_long(const Int& v, const char* what);

}  // namespace loglocal
