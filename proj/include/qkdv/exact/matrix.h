#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qkdv/exact/poly.h"

namespace qkdv {

// Dense row-major matrix of polynomials.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(const std::vector<ExactPoly>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  ExactPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const ExactPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_diagonal() const;
  ExactMatrix transpose() const;
  ExactMatrix map(const std::function<ExactPoly(const ExactPoly&)>& fn) const;

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactPoly& c, const ExactMatrix& a);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

  std::vector<ExactPoly> apply(const std::vector<ExactPoly>& v) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExactPoly> data_;
};

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

// det(rho*I - M) as a polynomial whose `rho` exponent is the matrix
// dimension at most. Division-free (Berkowitz), so entries may come from any
// polynomial ring.
ExactPoly charpoly(const ExactMatrix& m, Var rho = Var::rho);

// Coefficients c_0..c_n of det(x*I - M) = sum c_k x^(n-k), c_0 = 1.
std::vector<ExactPoly> charpoly_coefficients(const ExactMatrix& m);

}  // namespace qkdv
