#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qkdv/exact/rational.h"

namespace qkdv {

// Symbolic parameters, in the fixed global order used for canonical output.
// `h` stands for the square root of hbar, so hbar = h^2.
enum class Var : std::uint8_t { h, eps2, U0, sigma, V0, z, rho };

inline constexpr std::size_t kVarCount = 7;
inline constexpr std::array<Var, kVarCount> kAllVars = {Var::h,  Var::eps2, Var::U0, Var::sigma,
                                                        Var::V0, Var::z,    Var::rho};

std::string_view var_name(Var v);
// Throws Error("unknown variable: ...") for names outside the global list.
Var var_from_name(std::string_view name);

using Exponents = std::array<std::int16_t, kVarCount>;

// Sparse multivariate Laurent polynomial with rational coefficients.
// Terms are kept sorted by exponent vector (lexicographic) and no stored
// coefficient is zero, so structural equality is mathematical equality.
class ExactPoly {
 public:
  using Term = std::pair<Exponents, Rat>;

  ExactPoly() = default;
  ExactPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  ExactPoly(long c);        // NOLINT(google-explicit-constructor)

  static ExactPoly variable(Var v, int power = 1);
  static ExactPoly monomial(const Exponents& exps, const Rat& coeff);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;

  bool depends_on(Var v) const;
  int degree(Var v) const;      // 0 for the zero polynomial
  int min_degree(Var v) const;  // 0 for the zero polynomial
  bool has_negative_exponents() const;

  // Sum of the terms whose exponent of v equals `power`, with v removed.
  ExactPoly coefficient(Var v, int power) const;

  ExactPoly& operator+=(const ExactPoly& o);
  ExactPoly& operator-=(const ExactPoly& o);
  ExactPoly& operator*=(const ExactPoly& o);
  ExactPoly& operator*=(const Rat& c);

  friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
  friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator*(ExactPoly a, const Rat& c) { return a *= c; }
  friend ExactPoly operator*(const Rat& c, ExactPoly a) { return a *= c; }
  friend ExactPoly operator*(ExactPoly a, long c) { return a *= Rat(c); }
  friend ExactPoly operator*(long c, ExactPoly a) { return a *= Rat(c); }
  ExactPoly operator-() const;

  friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.terms_ == b.terms_; }

  // Replace v by `value`. Negative powers of v require a single-term value.
  ExactPoly substitute(Var v, const ExactPoly& value) const;
  ExactPoly substitute(std::string_view name, const ExactPoly& value) const;
  ExactPoly evaluate(Var v, const Rat& value) const;
  ExactPoly derivative(Var v) const;
  // Multiply by v^power; power may be negative.
  ExactPoly shift(Var v, int power) const;
  ExactPoly pow(unsigned n) const;

  // Exact quotient when `divisor` divides this polynomial, nullopt otherwise.
  // Both operands must be ordinary (non-Laurent) polynomials.
  std::optional<ExactPoly> divide_exact(const ExactPoly& divisor) const;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

}  // namespace qkdv
