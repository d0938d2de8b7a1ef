#include "qkdv/exact/rational.h"

namespace qkdv {

Rat make_rat(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  Rat r;
  if (r.set_str(std::string(text), 10) != 0) {
    throw Error("malformed rational: " + std::string(text));
  }
  if (r.get_den() == 0) throw Error("zero denominator");
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

std::string to_string(const Integer& n) { return n.get_str(10); }

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rat pow(const Rat& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error("negative power of zero");
    Rat inv = 1 / base;
    return pow(inv, -exponent);
  }
  // Powers of coprime integers stay coprime, so no canonicalization is needed.
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

}  // namespace qkdv
