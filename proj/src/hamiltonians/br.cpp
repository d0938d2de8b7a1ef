#include "qkdv/hamiltonians/br.h"

#include "qkdv/exact/linear.h"
#include "qkdv/fock/fock.h"

namespace qkdv {

namespace {

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

// Monomials u-degree n >= 1, eps2^a hbar^b, n + a + 2b = m + 2, even total
// derivative order at most 2(a+b).
std::vector<Density> ansatz(int m) {
  std::vector<Density> out;
  const int total = m + 2;
  for (int b = 0; 2 * b < total; ++b) {
    for (int a = 0; a + 2 * b < total; ++a) {
      const int n = total - a - 2 * b;
      const ExactPoly coeff = ExactPoly::variable(Var::eps2, a) * ExactPoly::variable(Var::h, 2 * b);
      for (int order = 0; order <= 2 * (a + b); order += 2) {
        std::vector<std::vector<int>> keys;
        std::vector<int> prefix;
        derivative_multisets(n, order, 0, prefix, keys);
        for (const auto& k : keys) out.push_back(Density::monomial(k, coeff));
      }
    }
  }
  return out;
}

}  // namespace

ModeBlocks br_step(const Density& h_m, int m, const Density& h_1, const FitWindow& window) {
  std::map<int, ExactMatrix> h1_blocks;
  auto h1_at = [&](int w) -> const ExactMatrix& {
    auto it = h1_blocks.find(w);
    if (it == h1_blocks.end()) it = h1_blocks.emplace(w, quantize(h_1, 0, w).matrix).first;
    return it->second;
  };
  ModeBlocks out;
  for (int p = 1; p <= window.max_mode; ++p) {
    for (int d = 0; d + p <= window.max_target_weight; ++d) {
      const ExactMatrix a = quantize(h_m, p, d).matrix;
      const ExactMatrix comm = a * h1_at(d) - h1_at(d + p) * a;
      const Rat scale = Rat(-1) / Rat(p);
      out.emplace(std::make_pair(p, d), comm.map([&](const ExactPoly& e) {
        // divide by hbar and by (m + 2 + a) on each eps2^a part
        ExactPoly r;
        for (const auto& [ex, c] : e.terms()) {
          Exponents f = ex;
          f[static_cast<std::size_t>(Var::h)] = static_cast<std::int16_t>(f[static_cast<std::size_t>(Var::h)] - 2);
          const int a_pow = ex[static_cast<std::size_t>(Var::eps2)];
          r += ExactPoly::monomial(f, c * scale / Rat(m + 2 + a_pow));
        }
        if (r.has_negative_exponents()) throw VerificationError("commutator is not divisible by hbar");
        return r;
      }));
    }
  }
  return out;
}

Density density_reconstruct(const ModeBlocks& blocks, int target_m) {
  const auto basis = ansatz(target_m);
  // Rows keyed by (p, d, row, col, coefficient monomial).
  using RowKey = std::tuple<int, int, std::size_t, std::size_t, Exponents>;
  std::map<RowKey, std::map<std::size_t, Rat>> rows;
  std::map<RowKey, Rat> rhs;
  for (const auto& [key, target] : blocks) {
    const auto [p, d] = key;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const ExactMatrix q = quantize(basis[i], p, d).matrix;
      for (std::size_t r = 0; r < q.rows(); ++r)
        for (std::size_t c = 0; c < q.cols(); ++c)
          for (const auto& [e, v] : q(r, c).terms()) rows[{p, d, r, c, e}][i] += v;
    }
    for (std::size_t r = 0; r < target.rows(); ++r)
      for (std::size_t c = 0; c < target.cols(); ++c)
        for (const auto& [e, v] : target(r, c).terms()) {
          rhs[{p, d, r, c, e}] = v;
          rows[{p, d, r, c, e}];
        }
  }
  RationalSystem sys(basis.size());
  for (auto& [key, row] : rows) {
    auto it = rhs.find(key);
    sys.add(std::move(row), it == rhs.end() ? Rat(0) : it->second);
  }
  const auto x = sys.solve();
  Density out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (x[i] != 0) out += ExactPoly(x[i]) * basis[i];
  }
  return out;
}

BrResult br_next(const Density& h_m, int m, const Density& h_1) {
  // Modes 1..m+3 separate the derivative orders of the one-field monomials.
  FitWindow window{m + 3, m + 4};
  for (int attempt = 0; attempt < 4; ++attempt) {
    try {
      return {density_reconstruct(br_step(h_m, m, h_1, window), m + 1), window};
    } catch (const RankDeficient&) {
      window.max_target_weight += 1;
      window.max_mode += 1;
    }
  }
  throw Error("enlarge truncation: density fit stays underdetermined");
}

}  // namespace qkdv
