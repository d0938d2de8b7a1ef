#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qkdv/exact/series.h"
#include "qkdv/hamiltonians/record.h"

namespace qkdv {

// K_m = H_m / hbar^{(m+2)/2} after eps2 -> -sigma h, U0 -> h V0, written on
// T_mu = q_mu / h^{l(mu)} (`monomial`) and on the Schur basis (`schur`).
// Entries lie in Q[sigma, V0].
struct ScaledOperator {
  int m = 0;
  int k = 0;
  bool with_V0 = true;
  ExactMatrix monomial;
  ExactMatrix schur;

  // Coefficient matrix of sigma^j in the Schur basis.
  ExactMatrix schur_order(int j) const;
};

ScaledOperator scale(const HamiltonianRecord& record, int k, bool with_V0);

// sum_j V0^{m+2-j}/(m+2-j)! Q_j(lambda)
ExactPoly dispersionless_eigen(int m, const Partition& lambda);

// Smallest m >= 0 whose dispersionless eigenvalues separate all partitions of k.
int mstar_search(int k, int bound = 64);

struct DeformedSchur {
  Partition lambda;
  int order = 0;  // sigma^0 .. sigma^{order-1}
  std::vector<std::vector<Rat>> coeffs;  // coeffs[n][nu] = r^{[n]}_{lambda nu}
  std::map<int, ExactSeries> eigen;      // m -> F_m(lambda; sigma), V0-polynomial coefficients

  ExactSeries coefficient(std::size_t nu) const;  // sigma-series with rational coefficients
};

struct DeformedSchurSet {
  int k = 0;
  int mstar = 0;
  std::vector<Partition> basis;
  std::vector<DeformedSchur> vectors;  // in canonical order
};

// Order-by-order construction from K_{m*}; eigenvalue series are produced for
// m* and every m in `eigen_ms`. Throws VerificationError on V0-dependent
// coefficients or a vanishing gap.
DeformedSchurSet deformed_schur(HamiltonianStore& store, int k, int order, const std::vector<int>& eigen_ms = {});

// Largest truncated-series coefficient index at which K_m r - F_m r fails, or
// nullopt if the eigen-equation holds through the stored order.
std::optional<int> eigen_residual(const ScaledOperator& op, const DeformedSchur& r);

struct SpectralCurve {
  int k = 0;
  int m = 0;
  ExactPoly poly;  // det(rho - K_m(sigma)) at V0 = 0
};

SpectralCurve spectral_curve(HamiltonianStore& store, int k, int m);

// (k-1) p(k) + 1 - sum_lambda l(lambda)
long conjecture_rhs(int k);

struct SigmaInfinityReport {
  bool sigma_independent = false;
  int leading_power = 0;
  std::vector<Rat> diagonal;        // leading sigma coefficient on T_lambda
  std::vector<Integer> reference;   // sum_i lambda_i^{2m+1}
  std::optional<Rat> slope;         // diagonal = slope * reference + intercept
  std::optional<Rat> intercept;
  bool affine = false;
};

// Throws VerificationError if the leading sigma coefficient of K_m (V0 = 0)
// is not diagonal on the monomials T_lambda.
SigmaInfinityReport sigma_infinity_diag(HamiltonianStore& store, int k, int m);

}  // namespace qkdv
