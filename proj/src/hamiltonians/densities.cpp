#include "qkdv/hamiltonians/densities.h"

#include <functional>
#include <map>
#include <mutex>

#include "qkdv/exact/linear.h"
#include "qkdv/partitions/partition.h"

namespace qkdv {

namespace {

ExactPoly hbar() { return ExactPoly::variable(Var::h, 2); }
ExactPoly eps2() { return ExactPoly::variable(Var::eps2); }

// All multisets of n derivative orders (sorted ascending) with total `order`.
void derivative_multisets(int n, int order, int min_part, std::vector<int>& prefix,
                          std::vector<std::vector<int>>& out) {
  if (n == 0) {
    if (order == 0) out.push_back(prefix);
    return;
  }
  for (int j = min_part; j * n <= order; ++j) {
    prefix.push_back(j);
    derivative_multisets(n - 1, order - j, j, prefix, out);
    prefix.pop_back();
  }
}

// Truncated exponential generating series in z with Density coefficients.
std::vector<Density> dispersionless_series(int order) {
  // S(i h z d/dx) u = sum_g s_g (-1)^g h^{2g} z^{2g} u_{2g x}; the exponent is z times it.
  std::vector<Density> w(static_cast<std::size_t>(order));
  for (int g = 0; 2 * g + 1 < order; ++g) {
    const Rat s_g = Rat(1) / Rat(pow(Rat(4), g) * Rat(factorial(static_cast<unsigned>(2 * g + 1))));
    const Rat sign = (g % 2 == 0) ? 1 : -1;
    w[static_cast<std::size_t>(2 * g + 1)] = ExactPoly::variable(Var::h, 2 * g) * Rat(s_g * sign) * Density::u(2 * g);
  }
  // exp(w) = sum w^n / n!
  std::vector<Density> result(static_cast<std::size_t>(order));
  std::vector<Density> power(static_cast<std::size_t>(order));
  power[0] = Density(ExactPoly(1));
  result[0] = power[0];
  for (int n = 1; n < order; ++n) {
    std::vector<Density> next(static_cast<std::size_t>(order));
    for (int i = 0; i < order; ++i) {
      if (power[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 1; i + j < order; ++j) {
        if (w[static_cast<std::size_t>(j)].is_zero()) continue;
        next[static_cast<std::size_t>(i + j)] += power[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)];
      }
    }
    power = std::move(next);
    const ExactPoly inv_fact(Rat(1) / Rat(factorial(static_cast<unsigned>(n))));
    for (int i = 0; i < order; ++i) result[static_cast<std::size_t>(i)] += inv_fact * power[static_cast<std::size_t>(i)];
  }
  // multiply by 1/S(h z) = sum beta_j h^j z^j
  std::vector<Density> out(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    for (int j = 0; i + j < order; ++j) {
      const Rat b = beta_coeff(j);
      if (b == 0) continue;
      out[static_cast<std::size_t>(i + j)] += (ExactPoly::variable(Var::h, j) * b) * result[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

}  // namespace

Density explicit_density(int m) {
  const Density u = Density::u();
  switch (m) {
    case -1:
      return u;
    case 0:
      return make_rat(1, 2) * ExactPoly(1) * (u * u) + (eps2() * make_rat(1, 24)) * Density::u(2) -
             Density(hbar() * make_rat(1, 24));
    case 1:
      return make_rat(1, 6) * ExactPoly(1) * (u * u * u) - (hbar() * make_rat(1, 24)) * u +
             (eps2() * make_rat(1, 24)) * (u * Density::u(2)) - Density(hbar() * eps2() * make_rat(1, 2880));
    default:
      throw Error("explicit densities exist for m = -1, 0, 1 only");
  }
}

Density eliashberg_density(int m) {
  if (m < -1) throw Error("dispersionless density needs m >= -1");
  static std::mutex mu;
  static std::vector<Density> cache;
  std::lock_guard lock(mu);
  const auto need = static_cast<std::size_t>(m + 3);
  if (cache.size() < need) {
    cache = dispersionless_series(static_cast<int>(std::max<std::size_t>(need, 10)));
    if (!(cache[0] == Density(ExactPoly(1))) || !(cache[1] == Density::u())) {
      throw VerificationError("dispersionless generating series does not start with 1 + z u");
    }
  }
  return cache[need - 1];
}

Density lenard_magri(int m) {
  if (m < -1) throw Error("Lenard-Magri needs m >= -1");
  static std::mutex mu;
  static std::map<int, Density> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  Density result;
  if (m == -1) {
    result = Density::u();
  } else {
    const Density prev = lenard_magri(m - 1);
    const Density u = Density::u();
    const Density rhs = ExactPoly(2) * (u * prev.dx()) + Density::u(1) * prev +
                        (eps2() * make_rat(1, 4)) * prev.dx().dx().dx();
    // Ansatz: u-degree n >= 1, eps2^a with 2a derivatives, n + a = m + 2.
    std::vector<Density> basis;
    for (int a = 0; a <= m + 1; ++a) {
      std::vector<std::vector<int>> keys;
      std::vector<int> prefix;
      derivative_multisets(m + 2 - a, 2 * a, 0, prefix, keys);
      for (const auto& k : keys) basis.push_back(Density::monomial(k, eps2().pow(static_cast<unsigned>(a))));
    }
    // Equation rows indexed by (density monomial, coefficient monomial).
    std::map<std::pair<Density::Key, Exponents>, std::map<std::size_t, Rat>> rows;
    std::map<std::pair<Density::Key, Exponents>, Rat> targets;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Density lhs = ExactPoly(2 * m + 3) * basis[i].dx();
      for (const auto& [k, c] : lhs.terms())
        for (const auto& [e, v] : c.terms()) rows[{k, e}][i] += v;
    }
    for (const auto& [k, c] : rhs.terms())
      for (const auto& [e, v] : c.terms()) {
        targets[{k, e}] = v;
        rows[{k, e}];
      }
    RationalSystem sys(basis.size());
    try {
      for (auto& [key, row] : rows) sys.add(row, targets.count(key) ? targets[key] : Rat(0));
    } catch (const InconsistentSystem&) {
      throw VerificationError("Lenard-Magri right-hand side is not a total derivative at m=" + std::to_string(m));
    }
    const auto x = sys.solve();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (x[i] != 0) result += ExactPoly(x[i]) * basis[i];
    }
  }
  std::lock_guard lock(mu);
  return cache.emplace(m, result).first->second;
}

}  // namespace qkdv
