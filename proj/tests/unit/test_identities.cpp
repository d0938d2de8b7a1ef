#include <doctest.h>

#include "qkdv/identities/identities.h"
#include "qkdv/partitions/characters.h"

using namespace qkdv;

namespace {

HamiltonianStore& store() {
  static HamiltonianStore s;
  return s;
}

}  // namespace

TEST_CASE("P2-degenerate pairs") {
  CHECK(find_p2_pairs(5).empty());
  auto six = find_p2_pairs(6);
  REQUIRE(six.size() == 2);
  CHECK(six[0].lambda == parse_partition("(4,1,1)"));
  CHECK(six[0].mu == parse_partition("(3,3)"));
  CHECK(six[0].shared_invariant == 6);
  CHECK(six[1].lambda == parse_partition("(3,1,1,1)"));
  CHECK(six[1].mu == parse_partition("(2,2,2)"));
  CHECK(six[1].shared_invariant == -6);
  // Brute force over P_2 directly, and P_2 = 2 * (sum of contents).
  for (int k = 1; k <= 8; ++k) {
    std::size_t expected = 0;
    const auto& basis = enumerate_partitions(k);
    for (std::size_t a = 0; a < basis.size(); ++a) {
      long c = 0;
      for (int x : contents(basis[a])) c += x;
      CHECK(p_function(2, basis[a]) == Rat(2 * c));
      for (std::size_t b = a + 1; b < basis.size(); ++b) expected += p_function(2, basis[a]) == p_function(2, basis[b]);
    }
    std::size_t found = 0;
    for (const auto& p : find_p2_pairs(8)) found += p.k == k;
    CHECK(found == expected);
  }
}

TEST_CASE("corollary sum") {
  for (const auto& p : find_p2_pairs(8)) CHECK(verify_corollary(p) == 0);
  // Non-pair: direct sum with sign characters, chi_(1^6) = sign.
  Integer direct = 0;
  for (const auto& nu : enumerate_partitions(6)) {
    Integer cubes = 0;
    for (int x : nu.parts) cubes += x * x * x;
    const int sign = (6 - nu.length()) % 2 == 0 ? 1 : -1;
    direct += class_size(nu) * sign * cubes;
  }
  CHECK(verify_corollary(parse_partition("(6)"), parse_partition("(1,1,1,1,1,1)")) == direct);
  CHECK(direct != 0);
  CHECK_THROWS_AS(verify_corollary(parse_partition("(3,3)"), parse_partition("(3,3)")), Error);
}

TEST_CASE("lemma route matches corollary route") {
  const ExactPoly hbar_eps2 = ExactPoly::variable(Var::h, 2) * ExactPoly::variable(Var::eps2);
  for (const auto& p : find_p2_pairs(7)) {
    auto value = verify_lemma34(p, store().dispersive(1));
    CHECK(value.is_zero());
    CHECK(value == hbar_eps2 * Rat(Rat(-1, 12) * Rat(verify_corollary(p)) / Rat(factorial(static_cast<unsigned>(p.k)))));
  }
  // A nonvanishing instance of the same relation.
  const auto a = parse_partition("(6)"), b = parse_partition("(1,1,1,1,1,1)");
  auto element = eps2_matrix_element(a, b, store().dispersive(1));
  CHECK(!element.is_zero());
  CHECK(element == hbar_eps2 * Rat(Rat(-1, 12) * Rat(verify_corollary(a, b)) / Rat(factorial(6))));
  DegeneratePair np{6, parse_partition("(6)"), parse_partition("(1,1,1,1,1,1)"), 3, 0};
  CHECK_THROWS_AS(verify_lemma34(np, store().dispersive(1)), Error);
}

TEST_CASE("Q4-degenerate pairs") {
  const auto pairs = find_q_pairs(4, 8);
  CHECK(pairs.size() == 41);
  for (const auto& p : pairs) {
    CHECK(q_function(4, p.lambda) == q_function(4, p.mu));
    CHECK(verify_lemma34(p, store().dispersive(2)).is_zero());
  }
}
