#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qkdv/exact/rational.h"

namespace qkdv {

// Non-increasing list of positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p);
  explicit Partition(std::vector<int> p);

  int weight() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }
  int operator[](int i) const { return i < length() ? parts[static_cast<std::size_t>(i)] : 0; }

  // multiplicity of each part size
  std::map<int, int> multiplicities() const;

  // "(3,1,1)"; the empty partition is "()".
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
};

// Accepts "(3,1,1)", "3,1,1", "3 1 1" or "()".
Partition parse_partition(const std::string& text);

// All partitions of k in reverse lexicographic order: (k), (k-1,1), ..., (1^k).
std::vector<Partition> enumerate_partitions(int k);
// Index of lambda within enumerate_partitions(|lambda|).
std::size_t partition_index(const Partition& lambda);

Partition conjugate(const Partition& lambda);

struct FrobeniusCoords {
  std::vector<int> a;  // arms a_i = lambda_i - i
  std::vector<int> b;  // legs b_i = lambda'_i - i
  int d = 0;
};
FrobeniusCoords frobenius(const Partition& lambda);

// Contents c = column - row (0-based) of every box, row by row.
std::vector<int> contents(const Partition& lambda);

// z_mu = prod_i m_i! i^{m_i}
Integer z_factor(const Partition& mu);
// |C_mu| = |mu|! / z_mu
Integer class_size(const Partition& mu);

// P_j(lambda) = sum_i [(lambda_i - i + 1/2)^j - (-i + 1/2)^j]
Rat p_function(int j, const Partition& lambda);
// Q_0 = 1, Q_j = P_{j-1}/(j-1)! + beta_j
Rat q_function(int j, const Partition& lambda);

// Coefficient of z^j in (z/2)/sinh(z/2), by series reversal.
Rat beta_coeff(int j);
// The same through Bernoulli numbers: (1/2^{j-1} - 1) B_j / j!.
Rat beta_coeff_bernoulli(int j);
// B_j with B_1 = -1/2.
Rat bernoulli(int j);

// Coefficients (index = power of x) of F_{m+1}(x), where
// sum_{l=1}^{N} l^m = F_{m+1}(N) / (m+1).
std::vector<Rat> faulhaber(int m);

}  // namespace qkdv
