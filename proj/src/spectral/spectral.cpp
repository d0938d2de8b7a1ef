#include "qkdv/spectral/spectral.h"

#include <algorithm>

#include "qkdv/exact/linear.h"

namespace qkdv {

namespace {

ExactPoly v0_power_over_factorial(int n) {
  return ExactPoly::variable(Var::V0, n) * Rat(Rat(1) / Rat(factorial(static_cast<unsigned>(n))));
}

int sigma_degree(const ExactMatrix& m) {
  int d = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) d = std::max(d, m(r, c).degree(Var::sigma));
  }
  return d;
}

ExactMatrix sigma_coefficient(const ExactMatrix& m, int j) {
  return m.map([j](const ExactPoly& e) { return e.coefficient(Var::sigma, j); });
}

std::vector<ExactMatrix> sigma_orders(const ScaledOperator& op, int order) {
  std::vector<ExactMatrix> out;
  for (int j = 0; j < order; ++j) out.push_back(op.schur_order(j));
  return out;
}

}  // namespace

ExactMatrix ScaledOperator::schur_order(int j) const { return sigma_coefficient(schur, j); }

ScaledOperator scale(const HamiltonianRecord& record, int k, bool with_V0) {
  const auto& basis = enumerate_partitions(k);
  const std::size_t n = basis.size();
  const ExactMatrix& raw = record.block0(k);
  const ExactPoly h = ExactPoly::variable(Var::h);
  const ExactPoly eps2_value = -(ExactPoly::variable(Var::sigma) * h);
  const ExactPoly u0_value = with_V0 ? h * ExactPoly::variable(Var::V0) : ExactPoly();

  ScaledOperator out;
  out.m = record.m;
  out.k = k;
  out.with_V0 = with_V0;
  out.monomial = ExactMatrix(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (raw(r, c).is_zero()) continue;
      ExactPoly e = raw(r, c).shift(Var::h, basis[r].length() - basis[c].length());
      e = e.substitute(Var::eps2, eps2_value).substitute(Var::U0, u0_value).shift(Var::h, -(record.m + 2));
      if (e.depends_on(Var::h) || e.has_negative_exponents()) {
        throw VerificationError("scaled operator K_" + std::to_string(record.m) + " on weight " + std::to_string(k) +
                                " is not homogeneous: " + e.to_string());
      }
      out.monomial(r, c) = std::move(e);
    }
  }

  ExactMatrix x = schur_matrix(k);
  std::vector<ExactPoly> z;
  for (const auto& mu : basis) z.emplace_back(Rat(z_factor(mu)));
  out.schur = x.transpose() * ExactMatrix::diagonal(z) * out.monomial * x;
  return out;
}

ExactPoly dispersionless_eigen(int m, const Partition& lambda) {
  ExactPoly out;
  for (int j = 0; j <= m + 2; ++j) out += v0_power_over_factorial(m + 2 - j) * q_function(j, lambda);
  return out;
}

int mstar_search(int k, int bound) {
  const auto& basis = enumerate_partitions(k);
  std::pair<std::size_t, std::size_t> last{0, 0};
  for (int m = 0; m <= bound; ++m) {
    bool separated = true;
    for (std::size_t a = 0; a < basis.size() && separated; ++a) {
      for (std::size_t b = a + 1; b < basis.size(); ++b) {
        bool differ = false;
        for (int j = 0; j <= m + 2 && !differ; ++j) differ = q_function(j, basis[a]) != q_function(j, basis[b]);
        if (!differ) {
          separated = false;
          last = {a, b};
          break;
        }
      }
    }
    if (separated) return m;
  }
  throw Error("no m <= " + std::to_string(bound) + " separates " + basis[last.first].to_string() + " and " +
              basis[last.second].to_string());
}

ExactSeries DeformedSchur::coefficient(std::size_t nu) const {
  ExactSeries out(Var::sigma, order);
  for (int n = 0; n < order; ++n) out.coeff(n) = ExactPoly(coeffs[static_cast<std::size_t>(n)][nu]);
  return out;
}

DeformedSchurSet deformed_schur(HamiltonianStore& store, int k, int order, const std::vector<int>& eigen_ms) {
  if (order < 1) throw Error("deformed_schur needs order >= 1");
  DeformedSchurSet out;
  out.k = k;
  out.mstar = mstar_search(k);
  out.basis = enumerate_partitions(k);
  const std::size_t dim = out.basis.size();

  const ScaledOperator op = scale(store.dispersive(out.mstar), k, true);
  const auto K = sigma_orders(op, order);
  if (!K[0].is_diagonal()) throw VerificationError("sigma^0 part of K_m* is not diagonal on Schur functions");
  std::vector<ExactPoly> f0(dim);
  for (std::size_t l = 0; l < dim; ++l) {
    f0[l] = K[0](l, l);
    if (f0[l] != dispersionless_eigen(out.mstar, out.basis[l])) {
      throw VerificationError("sigma^0 eigenvalue of " + out.basis[l].to_string() + " differs from Q_j formula");
    }
  }

  for (std::size_t l = 0; l < dim; ++l) {
    DeformedSchur r;
    r.lambda = out.basis[l];
    r.order = order;
    r.coeffs.assign(static_cast<std::size_t>(order), std::vector<Rat>(dim));
    r.coeffs[0][l] = 1;
    std::vector<ExactPoly> f(static_cast<std::size_t>(order));
    f[0] = f0[l];
    for (int n = 1; n < order; ++n) {
      for (int j = 1; j <= n; ++j) {
        const auto& prev = r.coeffs[static_cast<std::size_t>(n - j)];
        for (std::size_t nu = 0; nu < dim; ++nu) {
          if (prev[nu] != 0) f[static_cast<std::size_t>(n)] += K[static_cast<std::size_t>(j)](l, nu) * prev[nu];
        }
      }
      for (std::size_t mu = 0; mu < dim; ++mu) {
        if (mu == l) continue;
        ExactPoly num;
        for (int j = 1; j <= n; ++j) {
          const auto& prev = r.coeffs[static_cast<std::size_t>(n - j)];
          for (std::size_t nu = 0; nu < dim; ++nu) {
            if (prev[nu] != 0) num += K[static_cast<std::size_t>(j)](mu, nu) * prev[nu];
          }
        }
        for (int i = 1; i < n; ++i) num -= f[static_cast<std::size_t>(i)] * r.coeffs[static_cast<std::size_t>(n - i)][mu];
        if (num.is_zero()) continue;
        const ExactPoly gap = f0[l] - f0[mu];
        if (gap.is_zero()) {
          throw VerificationError("zero gap between " + out.basis[l].to_string() + " and " + out.basis[mu].to_string());
        }
        auto q = num.divide_exact(gap);
        if (!q || !q->is_constant()) {
          throw VerificationError("r^[" + std::to_string(n) + "] coefficient of " + out.basis[mu].to_string() +
                                  " in r_" + out.basis[l].to_string() + " depends on V0");
        }
        r.coeffs[static_cast<std::size_t>(n)][mu] = q->constant_term();
      }
    }
    r.eigen.emplace(out.mstar, ExactSeries(Var::sigma, f));
    out.vectors.push_back(std::move(r));
  }

  for (int m : eigen_ms) {
    if (m == out.mstar) continue;
    const ScaledOperator other = scale(store.dispersive(m), k, true);
    const auto Km = sigma_orders(other, order);
    for (std::size_t l = 0; l < dim; ++l) {
      auto& r = out.vectors[l];
      ExactSeries f(Var::sigma, order);
      for (int n = 0; n < order; ++n) {
        for (int j = 0; j <= n; ++j) {
          const auto& prev = r.coeffs[static_cast<std::size_t>(n - j)];
          for (std::size_t nu = 0; nu < dim; ++nu) {
            if (prev[nu] != 0) f.coeff(n) += Km[static_cast<std::size_t>(j)](l, nu) * prev[nu];
          }
        }
      }
      r.eigen.emplace(m, std::move(f));
    }
  }
  return out;
}

std::optional<int> eigen_residual(const ScaledOperator& op, const DeformedSchur& r) {
  auto it = r.eigen.find(op.m);
  if (it == r.eigen.end()) throw Error("no eigenvalue series for m = " + std::to_string(op.m));
  const ExactSeries& f = it->second;
  const auto K = sigma_orders(op, r.order);
  const std::size_t dim = op.schur.rows();
  std::optional<int> bad;
  for (int n = 0; n < r.order; ++n) {
    for (std::size_t mu = 0; mu < dim; ++mu) {
      ExactPoly acc;
      for (int j = 0; j <= n; ++j) {
        const auto& prev = r.coeffs[static_cast<std::size_t>(n - j)];
        for (std::size_t nu = 0; nu < dim; ++nu) {
          if (prev[nu] != 0) acc += K[static_cast<std::size_t>(j)](mu, nu) * prev[nu];
        }
        const Rat& c = r.coeffs[static_cast<std::size_t>(n - j)][mu];
        if (c != 0) acc -= f[j] * c;
      }
      if (!acc.is_zero()) bad = n;
    }
  }
  return bad;
}

SpectralCurve spectral_curve(HamiltonianStore& store, int k, int m) {
  const ScaledOperator op = scale(store.dispersive(m), k, false);
  return {k, m, charpoly(op.monomial, Var::rho)};
}

long conjecture_rhs(int k) {
  const auto& basis = enumerate_partitions(k);
  long lengths = 0;
  for (const auto& l : basis) lengths += l.length();
  return static_cast<long>(k - 1) * static_cast<long>(basis.size()) + 1 - lengths;
}

SigmaInfinityReport sigma_infinity_diag(HamiltonianStore& store, int k, int m) {
  const ScaledOperator op = scale(store.dispersive(m), k, false);
  SigmaInfinityReport out;
  out.leading_power = sigma_degree(op.monomial);
  out.sigma_independent = out.leading_power == 0;
  const ExactMatrix lead = sigma_coefficient(op.monomial, out.leading_power);
  if (!lead.is_diagonal()) {
    throw VerificationError("leading sigma^" + std::to_string(out.leading_power) + " part of K_" + std::to_string(m) +
                            " on weight " + std::to_string(k) + " is not diagonal on monomials");
  }
  const auto& basis = enumerate_partitions(k);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!lead(i, i).is_constant()) throw VerificationError("leading sigma coefficient is not a number");
    out.diagonal.push_back(lead(i, i).constant_term());
    Integer s = 0;
    for (int part : basis[i].parts) {
      Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(2 * m + 1));
      s += p;
    }
    out.reference.push_back(s);
  }
  // Fit diagonal = slope * reference + intercept through two distinct references.
  for (std::size_t j = 1; j < basis.size() && !out.slope; ++j) {
    if (out.reference[j] == out.reference[0]) continue;
    out.slope = (out.diagonal[j] - out.diagonal[0]) / Rat(out.reference[j] - out.reference[0]);
    out.intercept = out.diagonal[0] - *out.slope * Rat(out.reference[0]);
  }
  if (!out.slope && !basis.empty()) {
    out.slope = Rat(0);
    out.intercept = out.diagonal[0];
  }
  out.affine = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (out.diagonal[i] != *out.slope * Rat(out.reference[i]) + *out.intercept) out.affine = false;
  }
  return out;
}

}  // namespace qkdv
