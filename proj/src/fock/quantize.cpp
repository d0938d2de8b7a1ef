#include <algorithm>
#include <map>

#include "qkdv/fock/fock.h"

namespace qkdv {

namespace {

// Sum over distinct assignments of the mode multiset to the slots of
// prod_s mode_s^{j_s}. Key layout: [#slots, j..., modes...], modes sorted.
Integer arrangement_sum(const std::vector<int>& orders, std::size_t first, std::vector<int>& modes) {
  if (first == orders.size()) return 1;
  thread_local std::map<std::vector<int>, Integer> memo;
  std::vector<int> key;
  key.reserve(1 + orders.size() - first + modes.size());
  key.push_back(static_cast<int>(orders.size() - first));
  key.insert(key.end(), orders.begin() + static_cast<std::ptrdiff_t>(first), orders.end());
  key.insert(key.end(), modes.begin(), modes.end());
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  Integer total = 0;
  const int j = orders[first];
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (i > 0 && modes[i] == modes[i - 1]) continue;
    const int v = modes[i];
    if (v == 0 && j > 0) continue;
    Integer w;
    mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(std::abs(v)), static_cast<unsigned long>(j));
    if (v < 0 && j % 2 == 1) w = -w;
    std::vector<int> rest = modes;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    total += w * arrangement_sum(orders, first + 1, rest);
  }
  memo.emplace(std::move(key), total);
  return total;
}

struct PartRun {
  int part;
  int count;
};

std::vector<PartRun> runs_of(const Partition& mu) {
  std::vector<PartRun> out;
  for (int p : mu.parts) {
    if (!out.empty() && out.back().part == p) {
      ++out.back().count;
    } else {
      out.push_back({p, 1});
    }
  }
  return out;
}

}  // namespace

std::size_t weight_dimension(int k) { return k < 0 ? 0 : enumerate_partitions(k).size(); }

OperatorBlock quantize(const Density& d, int p, int source_weight) {
  if (source_weight < 0) throw Error("negative source weight");
  OperatorBlock block{p, source_weight, {}};
  const int target = source_weight + p;
  const auto src = enumerate_partitions(source_weight);
  if (target < 0) {
    block.matrix = ExactMatrix(0, src.size());
    return block;
  }
  const auto tgt = enumerate_partitions(target);
  ExactMatrix re(tgt.size(), src.size());
  ExactMatrix im(tgt.size(), src.size());
  bool any_imaginary = false;

  for (const auto& [orders, coeff] : d.terms()) {
    const int n = static_cast<int>(orders.size());
    if (n == 0) {
      if (p == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) re(i, i) += coeff;
      }
      continue;
    }
    int order_sum = 0;
    for (int j : orders) order_sum += j;
    ExactMatrix& dest = (order_sum % 2 == 0) ? re : im;
    const Rat phase = (order_sum % 4 == 0 || order_sum % 4 == 1) ? Rat(1) : Rat(-1);
    if (order_sum % 2 == 1) any_imaginary = true;

    for (std::size_t col = 0; col < src.size(); ++col) {
      const Partition& mu = src[col];
      const auto runs = runs_of(mu);
      std::vector<int> take(runs.size(), 0);
      // Odometer over sub-multisets A of mu (the annihilated parts).
      while (true) {
        int len_a = 0;
        int size_a = 0;
        Rat factor = phase;
        std::vector<int> modes;
        std::vector<int> remaining;
        for (std::size_t r = 0; r < runs.size(); ++r) {
          len_a += take[r];
          size_a += take[r] * runs[r].part;
          for (int t = 0; t < take[r]; ++t) {
            factor *= Rat(runs[r].part * (runs[r].count - t));  // hbar*a*d/dq_a on q_a^count
            modes.push_back(-runs[r].part);
          }
          for (int t = take[r]; t < runs[r].count; ++t) remaining.push_back(runs[r].part);
        }
        const int created = size_a + p;
        if (len_a <= n && created >= 0) {
          const auto hbar_power = ExactPoly::variable(Var::h, 2 * len_a);
          for (const auto& c : enumerate_partitions(created)) {
            const int zeros = n - len_a - c.length();
            if (zeros < 0) continue;
            std::vector<int> all = modes;
            all.insert(all.end(), c.parts.begin(), c.parts.end());
            all.insert(all.end(), static_cast<std::size_t>(zeros), 0);
            std::sort(all.begin(), all.end());
            const Integer s = arrangement_sum(orders, 0, all);
            if (s == 0) continue;
            std::vector<int> nu = remaining;
            nu.insert(nu.end(), c.parts.begin(), c.parts.end());
            std::sort(nu.begin(), nu.end(), std::greater<>());
            const std::size_t row = partition_index(Partition(nu));
            dest(row, col) += coeff * (hbar_power * ExactPoly::variable(Var::U0, zeros)) * Rat(factor * Rat(s));
          }
        }
        std::size_t r = 0;
        while (r < runs.size() && take[r] == runs[r].count) take[r++] = 0;
        if (r == runs.size()) break;
        ++take[r];
      }
    }
  }
  if (any_imaginary && !im.is_zero()) {
    throw VerificationError("quantized block has a non-vanishing imaginary part (p=" + std::to_string(p) +
                            ", weight " + std::to_string(source_weight) + ")");
  }
  block.matrix = std::move(re);
  return block;
}

std::vector<OperatorBlock> quantize_range(const Density& d, int p, int max_source_weight) {
  std::vector<OperatorBlock> out;
  for (int w = 0; w <= max_source_weight; ++w) out.push_back(quantize(d, p, w));
  return out;
}

}  // namespace qkdv
