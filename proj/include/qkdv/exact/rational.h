#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qkdv {

using Integer = mpz_class;
using Rat = mpq_class;

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed. These signal bugs (or a falsified
// mathematical claim), never bad user input.
class VerificationError : public Error {
 public:
  using Error::Error;
};

Rat make_rat(long num, long den = 1);
Rat parse_rat(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);
std::string to_string(const Integer& n);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Rat pow(const Rat& base, int exponent);

}  // namespace qkdv
