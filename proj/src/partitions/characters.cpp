#include "qkdv/partitions/characters.h"

#include <algorithm>
#include <map>
#include <mutex>

namespace qkdv {

namespace {

// Bead positions lambda_i + (len - i), strictly decreasing.
std::vector<int> beta_set(const Partition& lambda) {
  std::vector<int> beads;
  const int len = lambda.length();
  for (int i = 0; i < len; ++i) beads.push_back(lambda[i] + (len - 1 - i));
  return beads;
}

Partition from_beta_set(std::vector<int> beads) {
  std::sort(beads.begin(), beads.end(), std::greater<>());
  std::vector<int> parts;
  const int len = static_cast<int>(beads.size());
  for (int i = 0; i < len; ++i) {
    int p = beads[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(parts);
}

struct CharacterMemo {
  std::mutex mu;
  std::map<std::pair<Partition, Partition>, Integer> values;
};

CharacterMemo& memo() {
  static CharacterMemo m;
  return m;
}

Integer mn_rule(const Partition& lambda, const Partition& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  {
    auto& m = memo();
    std::lock_guard lock(m.mu);
    auto it = m.values.find({lambda, mu});
    if (it != m.values.end()) return it->second;
  }
  const int r = mu[0];
  const Partition rest(std::vector<int>(mu.parts.begin() + 1, mu.parts.end()));
  std::vector<int> beads = beta_set(lambda);
  Integer total = 0;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    const int target = beads[i] - r;
    if (target < 0 || std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
    // Removing a rim hook of length r moves one bead down by r; the hook's
    // height is the number of beads jumped over.
    int jumped = 0;
    for (int b : beads) jumped += (b > target && b < beads[i]) ? 1 : 0;
    std::vector<int> moved = beads;
    moved[i] = target;
    Integer sub = mn_rule(from_beta_set(moved), rest);
    total += (jumped % 2 == 0) ? sub : Integer(-sub);
  }
  auto& m = memo();
  std::lock_guard lock(m.mu);
  return m.values.emplace(std::make_pair(lambda, mu), total).first->second;  // first write wins
}

}  // namespace

Integer character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw Error("character: weights differ");
  return mn_rule(lambda, mu);
}

CharacterTable character_table(int k) {
  CharacterTable t;
  t.k = k;
  t.order = enumerate_partitions(k);
  for (const auto& lambda : t.order) {
    std::vector<Integer> row;
    for (const auto& mu : t.order) row.push_back(character(lambda, mu));
    t.values.push_back(std::move(row));
  }
  return t;
}

std::string character_table_csv(const CharacterTable& t) {
  std::string out = "lambda";
  for (const auto& mu : t.order) out += ",\"" + mu.to_string() + "\"";
  out += "\n";
  for (std::size_t i = 0; i < t.order.size(); ++i) {
    out += "\"" + t.order[i].to_string() + "\"";
    for (const auto& v : t.values[i]) out += "," + v.get_str();
    out += "\n";
  }
  return out;
}

}  // namespace qkdv
