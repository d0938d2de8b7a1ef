#include "qkdv/exact/series.h"

#include <algorithm>

namespace qkdv {

namespace {

void check_same_var(const ExactSeries& a, const ExactSeries& b) {
  if (a.var() != b.var()) throw Error("series in different variables");
}

}  // namespace

ExactSeries::ExactSeries(Var var, int order) : var_(var), coeffs_(static_cast<std::size_t>(std::max(order, 0))) {}

ExactSeries::ExactSeries(Var var, std::vector<ExactPoly> coeffs) : var_(var), coeffs_(std::move(coeffs)) {}

ExactSeries ExactSeries::from_poly(const ExactPoly& p, Var var, int order) {
  if (p.min_degree(var) < 0) throw Error("series expansion of a negative power");
  ExactSeries out(var, order);
  for (int n = 0; n < order; ++n) out.coeffs_[static_cast<std::size_t>(n)] = p.coefficient(var, n);
  return out;
}

ExactSeries ExactSeries::exp_series(Var var, int order) {
  ExactSeries out(var, order);
  for (int n = 0; n < order; ++n) out.coeffs_[static_cast<std::size_t>(n)] = ExactPoly(Rat(1, 1) / Rat(factorial(static_cast<unsigned>(n))));
  return out;
}

ExactSeries ExactSeries::truncated(int order) const {
  ExactSeries out(var_, std::min(order, this->order()));
  for (int n = 0; n < out.order(); ++n) out.coeffs_[static_cast<std::size_t>(n)] = (*this)[n];
  return out;
}

ExactSeries ExactSeries::scaled(const ExactPoly& factor) const {
  ExactSeries out = *this;
  for (auto& c : out.coeffs_) c = c * factor;
  return out;
}

ExactSeries operator+(const ExactSeries& a, const ExactSeries& b) {
  check_same_var(a, b);
  ExactSeries out(a.var_, std::min(a.order(), b.order()));
  for (int n = 0; n < out.order(); ++n) out.coeff(n) = a[n] + b[n];
  return out;
}

ExactSeries operator-(const ExactSeries& a, const ExactSeries& b) {
  check_same_var(a, b);
  ExactSeries out(a.var_, std::min(a.order(), b.order()));
  for (int n = 0; n < out.order(); ++n) out.coeff(n) = a[n] - b[n];
  return out;
}

ExactSeries operator*(const ExactSeries& a, const ExactSeries& b) {
  check_same_var(a, b);
  ExactSeries out(a.var_, std::min(a.order(), b.order()));
  for (int i = 0; i < out.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j < out.order(); ++j) {
      if (b[j].is_zero()) continue;
      out.coeff(i + j) += a[i] * b[j];
    }
  }
  return out;
}

bool operator==(const ExactSeries& a, const ExactSeries& b) { return a.var_ == b.var_ && a.coeffs_ == b.coeffs_; }

ExactSeries ExactSeries::reciprocal() const {
  if (order() == 0) return *this;
  const ExactPoly& c0 = coeffs_[0];
  if (c0.is_zero() || !c0.is_constant()) throw Error("series not invertible");
  const Rat inv0 = 1 / c0.constant_term();
  ExactSeries out(var_, order());
  out.coeffs_[0] = ExactPoly(inv0);
  for (int n = 1; n < order(); ++n) {
    ExactPoly acc;
    for (int i = 1; i <= n; ++i) {
      if ((*this)[i].is_zero()) continue;
      acc += (*this)[i] * out[n - i];
    }
    out.coeff(n) = acc * Rat(-inv0);
  }
  return out;
}

ExactSeries ExactSeries::compose(const ExactSeries& inner) const {
  check_same_var(*this, inner);
  if (inner.order() > 0 && !inner[0].is_zero()) throw Error("composition needs an inner series without constant term");
  const int order = std::min(this->order(), inner.order());
  ExactSeries out(var_, order);
  ExactSeries power(var_, order);
  if (order > 0) power.coeff(0) = ExactPoly(1);
  for (int n = 0; n < order; ++n) {
    if (!(*this)[n].is_zero()) out = out + power.scaled((*this)[n]);
    power = power * inner;
  }
  return out;
}

ExactPoly ExactSeries::to_poly() const {
  ExactPoly out;
  for (int n = 0; n < order(); ++n) out += (*this)[n].shift(var_, n);
  return out;
}

std::string ExactSeries::to_string() const {
  std::string out;
  for (int n = 0; n < order(); ++n) {
    if ((*this)[n].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + (*this)[n].to_string() + ")";
    if (n > 0) out += "*" + std::string(var_name(var_)) + (n > 1 ? "^" + std::to_string(n) : "");
  }
  out += (out.empty() ? "" : " + ") + std::string("O(") + std::string(var_name(var_)) + "^" + std::to_string(order()) + ")";
  return out;
}

}  // namespace qkdv
