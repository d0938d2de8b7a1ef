#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qkdv/exact/matrix.h"

namespace qkdv {

// Quotient of two polynomials. No gcd is taken; `simplified` only removes a
// denominator that divides the numerator exactly or is a single term.
struct RatFunc {
  ExactPoly num;
  ExactPoly den{1};

  RatFunc() = default;
  RatFunc(ExactPoly n) : num(std::move(n)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(ExactPoly n, ExactPoly d);

  RatFunc simplified() const;
  // The polynomial value when the denominator cancels, nullopt otherwise.
  std::optional<ExactPoly> as_poly() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  // Cross-multiplied comparison.
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  std::string to_string() const;
};

// Thrown when an overdetermined system has no solution; `row` is the first
// equation (in input order) that cannot be satisfied.
class InconsistentSystem : public VerificationError {
 public:
  InconsistentSystem(std::size_t row, const std::string& what);
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

class RankDeficient : public Error {
 public:
  explicit RankDeficient(std::vector<std::size_t> free_columns);
  const std::vector<std::size_t>& free_columns() const { return free_; }

 private:
  std::vector<std::size_t> free_;
};

// Solves A x = b over the fraction field of the polynomial ring by
// division-free elimination. A needs full column rank; rows beyond the rank
// must reduce to 0 = 0.
std::vector<RatFunc> solve_linear(const ExactMatrix& a, const std::vector<ExactPoly>& b);

// Sparse system with rational coefficients, reduced as equations arrive.
// Used for ansatz fitting where there are many more equations than unknowns.
class RationalSystem {
 public:
  explicit RationalSystem(std::size_t unknowns) : n_(unknowns) {}

  std::size_t unknowns() const { return n_; }
  std::size_t equations() const { return added_; }
  std::size_t rank() const { return pivots_.size(); }

  // Throws InconsistentSystem carrying the equation's index on conflict.
  void add(std::map<std::size_t, Rat> row, Rat rhs);

  std::vector<std::size_t> free_columns() const;
  // Unique solution; throws RankDeficient if some unknown is undetermined.
  std::vector<Rat> solve() const;

 private:
  struct Pivot {
    std::map<std::size_t, Rat> row;  // leading entry normalized to 1
    Rat rhs;
  };
  std::size_t n_;
  std::size_t added_ = 0;
  std::map<std::size_t, Pivot> pivots_;  // keyed by leading column
};

}  // namespace qkdv
