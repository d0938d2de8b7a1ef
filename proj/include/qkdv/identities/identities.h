#pragma once

#include <vector>

#include "qkdv/hamiltonians/record.h"

namespace qkdv {

struct DegeneratePair {
  int k = 0;
  Partition lambda;
  Partition mu;
  int j = 3;             // the shared invariant is Q_j
  Rat shared_invariant;  // P_2 for j = 3, Q_j otherwise
};

// Distinct pairs of equal weight <= k_max with Q_j(lambda) = Q_j(mu), each
// pair once with lambda before mu in canonical order.
std::vector<DegeneratePair> find_q_pairs(int j, int k_max);
// Q_3 = P_2/2 + beta_3, so these are the P_2-degenerate pairs.
std::vector<DegeneratePair> find_p2_pairs(int k_max);

// sum_nu |C_nu| chi_lambda(nu) chi_mu(nu) sum_i nu_i^3 (any distinct pair of equal weight).
Integer verify_corollary(const Partition& lambda, const Partition& mu);
inline Integer verify_corollary(const DegeneratePair& p) { return verify_corollary(p.lambda, p.mu); }

// The same matrix element without the hypothesis check.
ExactPoly eps2_matrix_element(const Partition& lambda, const Partition& mu, const HamiltonianRecord& record);

// < s_lambda(q/sqrt(hbar)), H_m^{[1]} s_mu(q/sqrt(hbar)) > where H_m^{[1]} is
// the eps2^1 part of H_m at U0 = 0 (eps2 kept). Requires Q_{m+2} equality.
ExactPoly verify_lemma34(const DegeneratePair& pair, const HamiltonianRecord& record);

}  // namespace qkdv
