#include "loglocal/numeric.hpp"

namespace loglocal {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_str();
}

std::string int_str(const Int& v) { return v.get_str(); }

bool is_odd(const Int& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

Int int_pow(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

long to_long(const Int& v, const char* what) {
  if (!v.fits_slong_p())
    throw InputError(std::string(what) + ": value " + v.get_str() +
                     " exceeds the supported exponent range");
  return v.get_si();
}

}  // namespace loglocal
