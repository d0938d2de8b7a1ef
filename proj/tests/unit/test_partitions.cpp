#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "qkdv/partitions/characters.h"

using namespace qkdv;

namespace {

// p(k) by Euler's pentagonal recurrence.
long euler_count(int k) {
  std::vector<long> p(static_cast<std::size_t>(k + 1), 0);
  p[0] = 1;
  for (int n = 1; n <= k; ++n) {
    long acc = 0;
    for (int j = 1;; ++j) {
      int g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
      if (g1 > n) break;
      long sign = (j % 2 == 1) ? 1 : -1;
      acc += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) acc += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = acc;
  }
  return p[static_cast<std::size_t>(k)];
}

Partition cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size());
  std::vector<int> parts;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(parts);
}

Integer hook_dimension(const Partition& l) {
  Partition c = conjugate(l);
  Integer prod = 1;
  for (int i = 0; i < l.length(); ++i)
    for (int j = 0; j < l[i]; ++j) prod *= (l[i] - j - 1) + (c[j] - i - 1) + 1;
  return factorial(static_cast<unsigned>(l.weight())) / prod;
}

}  // namespace

TEST_CASE("enumeration order and counts") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
  CHECK(enumerate_partitions(2) == std::vector<Partition>{Partition{2}, Partition{1, 1}});
  auto p4 = enumerate_partitions(4);
  CHECK(p4 == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  for (int k = 0; k <= 12; ++k) CHECK(static_cast<long>(enumerate_partitions(k).size()) == euler_count(k));
  CHECK(enumerate_partitions(6).size() == 11);
  CHECK(partition_index(Partition{2, 2}) == 2);
  CHECK(parse_partition("(3,1,1)") == Partition{3, 1, 1});
  CHECK(parse_partition("1 3") == Partition{3, 1});
  CHECK(parse_partition("()").empty());
  CHECK_THROWS_AS(parse_partition("2,x"), Error);
  CHECK_THROWS_AS(Partition({1, 2}), Error);
}

TEST_CASE("conjugation, Frobenius coordinates, contents") {
  for (int k = 0; k <= 10; ++k)
    for (const auto& l : enumerate_partitions(k)) CHECK(conjugate(conjugate(l)) == l);
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  auto f = frobenius(Partition{4, 3, 1});
  CHECK(f.d == 2);
  CHECK(f.a == std::vector<int>{3, 1});
  CHECK(f.b == std::vector<int>{2, 0});
  CHECK(contents(Partition{2, 1}) == std::vector<int>{0, 1, -1});
}

TEST_CASE("P, Q and beta") {
  CHECK(p_function(3, Partition{}) == 0);
  CHECK(p_function(2, Partition{2}) == 2);
  CHECK(p_function(2, Partition{1, 1}) == -2);
  for (int k = 0; k <= 8; ++k) {
    for (const auto& l : enumerate_partitions(k)) {
      CHECK(p_function(1, l) == k);
      CHECK(q_function(0, l) == 1);
      CHECK(q_function(1, l) == 0);
      CHECK(q_function(2, l) == Rat(k) - make_rat(1, 24));
      for (int j = 0; j <= 6; ++j) {
        Rat sign = (j % 2 == 1) ? 1 : -1;  // contents negate; each box term is odd under c -> -c for even j
        CHECK(p_function(j, conjugate(l)) == sign * p_function(j, l));
      }
      // Contents route: P_j = sum over boxes of (c+1/2)^j - (c-1/2)^j.
      for (int j = 0; j <= 5; ++j) {
        Rat acc = 0;
        for (int c : contents(l)) acc += pow(Rat(c) + make_rat(1, 2), j) - pow(Rat(c) - make_rat(1, 2), j);
        CHECK(acc == p_function(j, l));
      }
    }
  }
  CHECK(beta_coeff(0) == 1);
  CHECK(beta_coeff(2) == make_rat(-1, 24));
  CHECK(beta_coeff(4) == make_rat(7, 5760));
  CHECK(beta_coeff(6) == make_rat(-31, 967680));
  CHECK(beta_coeff(3) == 0);
  for (int j = 0; j <= 20; ++j) CHECK(beta_coeff(j) == beta_coeff_bernoulli(j));
}

TEST_CASE("Faulhaber polynomials") {
  CHECK(faulhaber(0) == std::vector<Rat>{0, 1});
  CHECK(faulhaber(1) == std::vector<Rat>{0, 1, 1});
  for (int m = 0; m <= 8; ++m) {
    auto f = faulhaber(m);
    Integer direct = 0;
    for (int n = 0; n <= 20; ++n) {
      if (n > 0) {
        Integer t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
        direct += t;
      }
      Rat val = 0;
      for (std::size_t i = 0; i < f.size(); ++i) val += f[i] * pow(Rat(n), static_cast<int>(i));
      CHECK(val / Rat(m + 1) == Rat(direct));
    }
  }
  // sum_m F_{m+1}(x) z^m/(m+1)! = (e^{zx}-1)/(1-e^{-z}); multiply through by
  // (1-e^{-z}) and compare z-coefficients up to z^8.
  for (int x = 0; x <= 5; ++x) {
    const int order = 9;
    std::vector<Rat> lhs(order), den(order + 1), rhs(order + 1);
    for (int m = 0; m < order; ++m) {
      auto f = faulhaber(m);
      Rat v = 0;
      for (std::size_t i = 0; i < f.size(); ++i) v += f[i] * pow(Rat(x), static_cast<int>(i));
      lhs[static_cast<std::size_t>(m)] = v / Rat(factorial(static_cast<unsigned>(m + 1)));
    }
    for (int n = 1; n <= order; ++n) {
      den[static_cast<std::size_t>(n)] = ((n % 2 == 1) ? Rat(1) : Rat(-1)) / Rat(factorial(static_cast<unsigned>(n)));
      rhs[static_cast<std::size_t>(n)] = pow(Rat(x), n) / Rat(factorial(static_cast<unsigned>(n)));
    }
    for (int n = 1; n <= order; ++n) {
      Rat acc = 0;
      for (int m = 0; m < order && m + 1 <= n; ++m) acc += lhs[static_cast<std::size_t>(m)] * den[static_cast<std::size_t>(n - m)];
      CHECK(acc == rhs[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("class sizes from brute-force permutation counts") {
  CHECK(z_factor(Partition{1, 1, 1}) == 6);
  CHECK(class_size(Partition{1, 1, 1}) == 1);
  CHECK(class_size(Partition{2, 1}) == 3);
  CHECK(class_size(Partition{3}) == 2);
  for (int k = 1; k <= 6; ++k) {
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::map<Partition, long> counts;
    do {
      ++counts[cycle_type(perm)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    Integer total = 0;
    for (const auto& mu : enumerate_partitions(k)) {
      CHECK(class_size(mu) == counts[mu]);
      total += class_size(mu);
    }
    CHECK(total == factorial(static_cast<unsigned>(k)));
  }
}

TEST_CASE("Murnaghan-Nakayama characters") {
  CHECK(character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK_THROWS_AS(character(Partition{2}, Partition{1}), Error);
  // Textbook S4 table, rows/columns in canonical order.
  const std::vector<std::vector<int>> s4 = {
      {1, 1, 1, 1, 1}, {-1, 0, -1, 1, 3}, {0, -1, 2, 0, 2}, {1, 0, -1, -1, 3}, {-1, 1, 1, -1, 1}};
  auto t4 = character_table(4);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(t4.values[i][j] == s4[i][j]);
  for (int k = 1; k <= 8; ++k) {
    auto t = character_table(k);
    const std::size_t n = t.order.size();
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(t.values[a][n - 1] == hook_dimension(t.order[a]));
      CHECK(t.values[0][a] == 1);
      for (std::size_t b = 0; b < n; ++b) {
        Integer row = 0, col = 0;
        for (std::size_t c = 0; c < n; ++c) {
          row += class_size(t.order[c]) * t.values[a][c] * t.values[b][c];
          col += t.values[c][a] * t.values[c][b];
        }
        CHECK(row == (a == b ? factorial(static_cast<unsigned>(k)) : Integer(0)));
        CHECK(col == (a == b ? z_factor(t.order[a]) : Integer(0)));
      }
    }
  }
  CHECK(character_table_csv(character_table(2)) == "lambda,\"(2)\",\"(1,1)\"\n\"(2)\",1,1\n\"(1,1)\",-1,1\n");
}
