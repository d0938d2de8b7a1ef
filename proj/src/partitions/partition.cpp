#include "qkdv/partitions/partition.h"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "qkdv/exact/series.h"

namespace qkdv {

namespace {

void check_parts(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) throw Error("partition parts must be positive");
    if (i > 0 && p[i] > p[i - 1]) throw Error("partition parts must be non-increasing");
  }
}

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

struct PartitionCache {
  std::mutex mu;
  std::map<int, std::vector<Partition>> lists;
  std::map<int, std::map<Partition, std::size_t>> index;
};

PartitionCache& partition_cache() {
  static PartitionCache cache;
  return cache;
}

// Half-integer powers (x + 1/2)^j.
Rat shifted_power(int x, int j) { return qkdv::pow(Rat(x) + make_rat(1, 2), j); }

}  // namespace

Partition::Partition(std::initializer_list<int> p) : parts(p) { check_parts(parts); }

Partition::Partition(std::vector<int> p) : parts(std::move(p)) { check_parts(parts); }

int Partition::weight() const {
  int w = 0;
  for (int p : parts) w += p;
  return w;
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts) ++m[p];
  return m;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

Partition parse_partition(const std::string& text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '(' || c == ')' || c == '[' || c == ']') continue;
    cleaned += (c == ',') ? ' ' : c;
  }
  std::istringstream in(cleaned);
  std::vector<int> parts;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw Error("malformed partition: " + text);
    }
    if (used != tok.size()) throw Error("malformed partition: " + text);
    parts.push_back(v);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(parts);
}

std::vector<Partition> enumerate_partitions(int k) {
  if (k < 0) throw Error("negative partition weight");
  auto& cache = partition_cache();
  std::lock_guard lock(cache.mu);
  auto it = cache.lists.find(k);
  if (it != cache.lists.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(k, k, prefix, out);
  std::map<Partition, std::size_t> idx;
  for (std::size_t i = 0; i < out.size(); ++i) idx.emplace(out[i], i);
  cache.index.emplace(k, std::move(idx));
  return cache.lists.emplace(k, std::move(out)).first->second;
}

std::size_t partition_index(const Partition& lambda) {
  const int k = lambda.weight();
  enumerate_partitions(k);
  auto& cache = partition_cache();
  std::lock_guard lock(cache.mu);
  return cache.index.at(k).at(lambda);
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out;
  for (int c = 0; c < lambda[0]; ++c) {
    int len = 0;
    while (len < lambda.length() && lambda[len] > c) ++len;
    out.push_back(len);
  }
  return Partition(out);
}

FrobeniusCoords frobenius(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  FrobeniusCoords f;
  while (f.d < lambda.length() && lambda[f.d] > f.d) {
    f.a.push_back(lambda[f.d] - f.d - 1);
    f.b.push_back(conj[f.d] - f.d - 1);
    ++f.d;
  }
  return f;
}

std::vector<int> contents(const Partition& lambda) {
  std::vector<int> out;
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) out.push_back(c - r);
  }
  return out;
}

Integer z_factor(const Partition& mu) {
  Integer z = 1;
  for (const auto& [part, mult] : mu.multiplicities()) {
    z *= factorial(static_cast<unsigned>(mult));
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(mult));
    z *= p;
  }
  return z;
}

Integer class_size(const Partition& mu) { return factorial(static_cast<unsigned>(mu.weight())) / z_factor(mu); }

Rat p_function(int j, const Partition& lambda) {
  if (j < 0) throw Error("P_j needs j >= 0");
  Rat sum = 0;
  // 1-based row i: (lambda_i - i + 1/2)^j - (-i + 1/2)^j
  for (int i = 1; i <= lambda.length(); ++i) sum += shifted_power(lambda[i - 1] - i, j) - shifted_power(-i, j);
  return sum;
}

Rat q_function(int j, const Partition& lambda) {
  if (j < 0) throw Error("Q_j needs j >= 0");
  if (j == 0) return Rat(1);
  return p_function(j - 1, lambda) / Rat(factorial(static_cast<unsigned>(j - 1))) + beta_coeff(j);
}

Rat beta_coeff(int j) {
  if (j < 0) throw Error("beta_j needs j >= 0");
  static std::mutex mu;
  static std::vector<Rat> cache;
  std::lock_guard lock(mu);
  if (static_cast<std::size_t>(j) >= cache.size()) {
    const int order = std::max(2 * j + 2, 16);
    // S(z) = sinh(z/2)/(z/2) = sum z^(2n) / (4^n (2n+1)!)
    ExactSeries s(Var::z, order);
    for (int n = 0; 2 * n < order; ++n) {
      s.coeff(2 * n) = ExactPoly(Rat(1) / Rat(qkdv::pow(Rat(4), n) * Rat(factorial(static_cast<unsigned>(2 * n + 1)))));
    }
    ExactSeries r = s.reciprocal();
    cache.clear();
    for (int n = 0; n < order; ++n) cache.push_back(r[n].constant_term());
  }
  return cache[static_cast<std::size_t>(j)];
}

Rat bernoulli(int j) {
  if (j < 0) throw Error("Bernoulli index must be >= 0");
  static std::mutex mu;
  static std::vector<Rat> cache{Rat(1)};
  std::lock_guard lock(mu);
  while (static_cast<int>(cache.size()) <= j) {
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    const auto m = static_cast<unsigned>(cache.size());
    Rat acc = 0;
    for (unsigned k = 0; k < m; ++k) acc += Rat(binomial(m + 1, k)) * cache[k];
    cache.push_back(-acc / Rat(m + 1));
  }
  return cache[static_cast<std::size_t>(j)];
}

Rat beta_coeff_bernoulli(int j) {
  if (j < 0) throw Error("beta_j needs j >= 0");
  const Rat two_power = qkdv::pow(Rat(2), 1 - j);
  return (two_power - 1) * bernoulli(j) / Rat(factorial(static_cast<unsigned>(j)));
}

std::vector<Rat> faulhaber(int m) {
  if (m < 0) throw Error("Faulhaber index must be >= 0");
  std::vector<Rat> coeffs(static_cast<std::size_t>(m + 2));
  for (int j = 0; j <= m; ++j) {
    Rat term = Rat(binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(j))) * bernoulli(j);
    if (j % 2 == 1) term = -term;
    coeffs[static_cast<std::size_t>(m + 1 - j)] = term;
  }
  return coeffs;
}

}  // namespace qkdv
