#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qkdv/exact/poly.h"

namespace qkdv {

// Differential polynomial in u, u_x, u_xx, ... with ExactPoly coefficients.
// A monomial u_{j1 x} ... u_{jn x} is keyed by its sorted derivative orders;
// the empty key is the constant monomial.
class Density {
 public:
  using Key = std::vector<int>;

  Density() = default;
  Density(const ExactPoly& constant);  // NOLINT(google-explicit-constructor)

  // u_{jx}
  static Density u(int j = 0);
  static Density monomial(Key orders, const ExactPoly& coeff);

  const std::map<Key, ExactPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ExactPoly coefficient(const Key& orders) const;
  ExactPoly constant() const { return coefficient({}); }
  Density without_constant() const;

  Density& operator+=(const Density& o);
  Density& operator-=(const Density& o);
  friend Density operator+(Density a, const Density& b) { return a += b; }
  friend Density operator-(Density a, const Density& b) { return a -= b; }
  friend Density operator*(const Density& a, const Density& b);
  friend Density operator*(const ExactPoly& c, const Density& a);
  friend bool operator==(const Density&, const Density&) = default;

  Density dx() const;
  // partial derivative with respect to u_{jx}
  Density partial(int j) const;
  // variational derivative sum_j (-d/dx)^j d/du_{jx}
  Density euler() const;
  Density map_coefficients(const std::function<ExactPoly(const ExactPoly&)>& fn) const;

  int max_u_degree() const;

  // "1/6*u^3 + (1/24*eps2)*u*u_xx"
  std::string to_string() const;

 private:
  void add_term(const Key& k, const ExactPoly& c);
  std::map<Key, ExactPoly> terms_;
};

std::string u_name(int j);

}  // namespace qkdv
