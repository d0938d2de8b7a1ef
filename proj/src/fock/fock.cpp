#include "qkdv/fock/fock.h"

#include <map>
#include <mutex>

#include "qkdv/exact/json.h"
#include "qkdv/partitions/characters.h"

namespace qkdv {

namespace {

// Symmetric functions of fixed weight in the power-sum basis.
using PowerSumExpansion = std::map<Partition, Rat>;

PowerSumExpansion multiply(const PowerSumExpansion& a, const PowerSumExpansion& b) {
  PowerSumExpansion out;
  for (const auto& [pa, ca] : a) {
    for (const auto& [pb, cb] : b) {
      std::vector<int> parts = pa.parts;
      parts.insert(parts.end(), pb.parts.begin(), pb.parts.end());
      std::sort(parts.begin(), parts.end(), std::greater<>());
      Rat& slot = out[Partition(parts)];
      slot += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// h_n = sum_{mu |- n} p_mu / z_mu
PowerSumExpansion complete_homogeneous(int n) {
  PowerSumExpansion out;
  if (n < 0) return out;
  for (const auto& mu : enumerate_partitions(n)) out[mu] = Rat(1) / Rat(z_factor(mu));
  return out;
}

}  // namespace

ExactMatrix weight_matrix(int k) {
  std::vector<ExactPoly> diag;
  for (const auto& mu : enumerate_partitions(k)) {
    diag.push_back(ExactPoly::variable(Var::h, 2 * mu.length()) * Rat(z_factor(mu)));
  }
  return ExactMatrix::diagonal(diag);
}

ExactPoly inner(const std::vector<ExactPoly>& f, const std::vector<ExactPoly>& g, int k) {
  const auto basis = enumerate_partitions(k);
  if (f.size() != basis.size() || g.size() != basis.size()) throw Error("inner product: weight mismatch");
  ExactPoly out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (f[i].is_zero() || g[i].is_zero()) continue;
    out += f[i] * g[i] * ExactPoly::variable(Var::h, 2 * basis[i].length()) * Rat(z_factor(basis[i]));
  }
  return out;
}

std::vector<Rat> schur_vector_jacobi_trudi(const Partition& lambda) {
  const int len = lambda.length();
  // det(h_{lambda_i - i + j}) by expansion along rows with memo over used columns.
  std::map<unsigned, PowerSumExpansion> memo;
  auto det = [&](auto&& self, int row, unsigned used) -> PowerSumExpansion {
    if (row == len) return {{Partition{}, Rat(1)}};
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    PowerSumExpansion acc;
    int sign = 1;
    for (int col = 0; col < len; ++col) {
      if (used & (1U << col)) continue;
      const PowerSumExpansion entry = complete_homogeneous(lambda[row] - row + col);
      if (!entry.empty()) {
        for (const auto& [mu, c] : multiply(entry, self(self, row + 1, used | (1U << col)))) {
          acc[mu] += sign > 0 ? c : Rat(-c);
        }
      }
      sign = -sign;
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    memo.emplace(used, acc);
    return acc;
  };
  const PowerSumExpansion s = det(det, 0, 0U);
  const auto basis = enumerate_partitions(lambda.weight());
  std::vector<Rat> out(basis.size());
  for (const auto& [mu, c] : s) out[partition_index(mu)] = c;
  return out;
}

std::vector<Rat> schur_vector_characters(const Partition& lambda) {
  std::vector<Rat> out;
  for (const auto& mu : enumerate_partitions(lambda.weight())) {
    out.push_back(Rat(Rat(character(lambda, mu)) * Rat(class_size(mu))) /
                  Rat(factorial(static_cast<unsigned>(lambda.weight()))));
  }
  return out;
}

std::vector<Rat> schur_vector(const Partition& lambda) {
  static std::mutex mu;
  static std::map<Partition, std::vector<Rat>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(lambda); it != cache.end()) return it->second;
  }
  auto jt = schur_vector_jacobi_trudi(lambda);
  if (jt != schur_vector_characters(lambda)) {
    throw VerificationError("Schur expansion mismatch between Jacobi-Trudi and characters for " + lambda.to_string());
  }
  std::lock_guard lock(mu);
  return cache.emplace(lambda, std::move(jt)).first->second;
}

std::vector<ExactPoly> schur_vector_q(const Partition& lambda) {
  const auto basis = enumerate_partitions(lambda.weight());
  const auto v = schur_vector(lambda);
  std::vector<ExactPoly> out;
  for (std::size_t i = 0; i < basis.size(); ++i) out.push_back(ExactPoly::variable(Var::h, -basis[i].length()) * v[i]);
  return out;
}

ExactMatrix schur_matrix(int k) {
  const auto basis = enumerate_partitions(k);
  ExactMatrix out(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto v = schur_vector(basis[c]);
    for (std::size_t r = 0; r < basis.size(); ++r) out(r, c) = ExactPoly(v[r]);
  }
  return out;
}

ExactMatrix adjoint_defect(const OperatorBlock& plus, const OperatorBlock& minus) {
  if (plus.p != -minus.p || plus.target_weight() != minus.source_weight ||
      minus.target_weight() != plus.source_weight) {
    throw Error("adjoint defect needs blocks d -> d+p and d+p -> d");
  }
  return plus.matrix.transpose() * weight_matrix(plus.target_weight()) -
         weight_matrix(plus.source_weight) * minus.matrix;
}

nlohmann::json block_to_json(const OperatorBlock& b) {
  return {{"p", b.p}, {"source_weight", b.source_weight}, {"basis", "monomial"}, {"matrix", matrix_to_json(b.matrix)}};
}

OperatorBlock block_from_json(const nlohmann::json& j) {
  if (j.at("basis") != "monomial") throw Error("unsupported block basis");
  OperatorBlock b{j.at("p").get<int>(), j.at("source_weight").get<int>(), matrix_from_json(j.at("matrix"))};
  const std::size_t rows = weight_dimension(b.target_weight());
  if (b.matrix.rows() != rows && !(rows == 0 && b.matrix.rows() == 0)) throw Error("block dimension mismatch");
  if (b.matrix.rows() == 0) b.matrix = ExactMatrix(0, weight_dimension(b.source_weight));
  return b;
}

}  // namespace qkdv
