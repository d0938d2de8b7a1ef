#pragma once

#include <json.hpp>
#include <vector>

#include "qkdv/exact/matrix.h"
#include "qkdv/fock/density.h"
#include "qkdv/partitions/partition.h"

namespace qkdv {

// Matrix of an operator from weight d to weight d+p in the monomial bases
// {q_mu}: column = source partition, row = target partition, both in
// canonical order.
struct OperatorBlock {
  int p = 0;
  int source_weight = 0;
  ExactMatrix matrix;

  int target_weight() const { return source_weight + p; }
};

std::size_t weight_dimension(int k);

// Normally ordered quantization of the mode-p part of a density, acting on
// weight `source_weight`. Modes: U_k = q_k (k > 0), U_0 (k = 0), and
// hbar |k| d/dq_|k| (k < 0); each factor u_{jx} contributes (i k)^j.
// Throws VerificationError if the assembled block is not real.
OperatorBlock quantize(const Density& d, int p, int source_weight);
std::vector<OperatorBlock> quantize_range(const Density& d, int p, int max_source_weight);

// Diagonal Gram matrix <q_l, q_m> = z_l hbar^{l(l)} delta.
ExactMatrix weight_matrix(int k);
ExactPoly inner(const std::vector<ExactPoly>& f, const std::vector<ExactPoly>& g, int k);

// Coefficients of s_lambda(q/sqrt(hbar)) on the normalized monomials
// q_mu / hbar^{l(mu)/2}, i.e. chi_lambda(mu)/z_mu. `schur_vector` computes
// them by Jacobi-Trudi and from characters and throws VerificationError if
// the two disagree.
std::vector<Rat> schur_vector(const Partition& lambda);
std::vector<Rat> schur_vector_jacobi_trudi(const Partition& lambda);
std::vector<Rat> schur_vector_characters(const Partition& lambda);
// The same vector on the plain monomials q_mu (entries carry h^{-l(mu)}).
std::vector<ExactPoly> schur_vector_q(const Partition& lambda);
// Columns are schur_vector(lambda) over the canonical order of weight k.
ExactMatrix schur_matrix(int k);

// M_p^T W_{d+p} - W_d M_{-p} for blocks d -> d+p and d+p -> d; zero exactly
// when <M_p f, g> = <f, M_{-p} g>.
ExactMatrix adjoint_defect(const OperatorBlock& plus, const OperatorBlock& minus);

nlohmann::json block_to_json(const OperatorBlock& b);
OperatorBlock block_from_json(const nlohmann::json& j);

}  // namespace qkdv
