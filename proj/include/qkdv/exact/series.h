#pragma once

#include <vector>

#include "qkdv/exact/poly.h"

namespace qkdv {

// Power series in one variable truncated at `order` (exclusive), with
// polynomial coefficients. Binary operations truncate to the smaller order.
class ExactSeries {
 public:
  ExactSeries(Var var, int order);
  ExactSeries(Var var, std::vector<ExactPoly> coeffs);

  // Expands p in powers of `var` (which must occur with nonnegative powers).
  static ExactSeries from_poly(const ExactPoly& p, Var var, int order);
  // exp(t) = sum t^n/n!.
  static ExactSeries exp_series(Var var, int order);

  Var var() const { return var_; }
  int order() const { return static_cast<int>(coeffs_.size()); }
  const ExactPoly& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  ExactPoly& coeff(int n) { return coeffs_[static_cast<std::size_t>(n)]; }
  const std::vector<ExactPoly>& coeffs() const { return coeffs_; }

  ExactSeries truncated(int order) const;
  ExactSeries scaled(const ExactPoly& factor) const;

  friend ExactSeries operator+(const ExactSeries& a, const ExactSeries& b);
  friend ExactSeries operator-(const ExactSeries& a, const ExactSeries& b);
  friend ExactSeries operator*(const ExactSeries& a, const ExactSeries& b);
  friend bool operator==(const ExactSeries& a, const ExactSeries& b);

  // Throws Error("series not invertible") unless the constant coefficient is
  // a nonzero rational.
  ExactSeries reciprocal() const;
  // this(inner); `inner` must have zero constant coefficient.
  ExactSeries compose(const ExactSeries& inner) const;

  ExactPoly to_poly() const;
  std::string to_string() const;

 private:
  Var var_;
  std::vector<ExactPoly> coeffs_;
};

}  // namespace qkdv
