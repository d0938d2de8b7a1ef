#include "qkdv/identities/identities.h"

#include "qkdv/partitions/characters.h"

namespace qkdv {

std::vector<DegeneratePair> find_q_pairs(int j, int k_max) {
  std::vector<DegeneratePair> out;
  for (int k = 1; k <= k_max; ++k) {
    const auto& basis = enumerate_partitions(k);
    std::vector<Rat> q;
    for (const auto& l : basis) q.push_back(q_function(j, l));
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = a + 1; b < basis.size(); ++b) {
        if (q[a] != q[b]) continue;
        out.push_back({k, basis[a], basis[b], j, j == 3 ? p_function(2, basis[a]) : q[a]});
      }
    }
  }
  return out;
}

std::vector<DegeneratePair> find_p2_pairs(int k_max) { return find_q_pairs(3, k_max); }

Integer verify_corollary(const Partition& lambda, const Partition& mu) {
  if (lambda == mu) throw Error("verify_corollary needs two distinct partitions");
  if (lambda.weight() != mu.weight()) throw Error("verify_corollary needs partitions of equal weight");
  Integer total = 0;
  for (const auto& nu : enumerate_partitions(lambda.weight())) {
    Integer cubes = 0;
    for (int part : nu.parts) cubes += static_cast<long>(part) * part * part;
    total += class_size(nu) * character(lambda, nu) * character(mu, nu) * cubes;
  }
  return total;
}

ExactPoly verify_lemma34(const DegeneratePair& pair, const HamiltonianRecord& record) {
  const int m = record.m;
  if (q_function(m + 2, pair.lambda) != q_function(m + 2, pair.mu)) {
    throw Error("Q_" + std::to_string(m + 2) + " differs on " + pair.lambda.to_string() + " and " + pair.mu.to_string());
  }
  return eps2_matrix_element(pair.lambda, pair.mu, record);
}

ExactPoly eps2_matrix_element(const Partition& lambda, const Partition& mu, const HamiltonianRecord& record) {
  if (lambda.weight() != mu.weight()) throw Error("matrix element between different weights");
  const int k = lambda.weight();
  const ExactMatrix h1 = record.block0(k).map([](const ExactPoly& e) {
    return e.coefficient(Var::eps2, 1).evaluate(Var::U0, 0).shift(Var::eps2, 1);
  });
  return inner(schur_vector_q(lambda), h1.apply(schur_vector_q(mu)), k);
}

}  // namespace qkdv
