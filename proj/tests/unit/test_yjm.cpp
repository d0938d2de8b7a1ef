#include <doctest.h>

#include "qkdv/partitions/characters.h"
#include "qkdv/yjm/yjm.h"

using namespace qkdv;

namespace {

HamiltonianStore& store() {
  static HamiltonianStore s;
  return s;
}

}  // namespace

TEST_CASE("group algebra basics") {
  CHECK(group_order(4) == 24);
  CHECK(cycle_type({1, 2, 0, 4, 3}) == parse_partition("(3,2)"));
  // J_2^2 = identity in S_2; transposition classes add up to sum J_i.
  auto j2 = yjm_element(2, 2);
  CHECK((j2 * j2).coeffs == group_identity(2).coeffs);
  for (int k = 1; k <= 5; ++k) {
    auto sum1 = yjm_powersum_brute(k, 1);
    const auto& basis = enumerate_partitions(k);
    ClassAlgebraElement expected{k, std::vector<Rat>(basis.size())};
    if (k >= 2) {
      std::vector<int> parts{2};
      parts.insert(parts.end(), static_cast<std::size_t>(k - 2), 1);
      expected.coeffs[partition_index(Partition(parts))] = 1;
    }
    CHECK(sum1.coeffs == expected.coeffs);
    auto sum0 = yjm_powersum_brute(k, 0);
    ClassAlgebraElement k_identity{k, std::vector<Rat>(basis.size())};
    k_identity.coeffs.back() = k;  // (1^k) is last in canonical order
    CHECK(sum0.coeffs == k_identity.coeffs);
  }
  // Non-central element is rejected.
  CHECK_THROWS_AS(to_class_algebra(yjm_element(3, 2)), VerificationError);
}

TEST_CASE("YJM power sums are central") {
  for (int k = 1; k <= 5; ++k) {
    for (int m = 0; m <= 3; ++m) {
      auto e = yjm_powersum_brute(k, m);
      GroupElement g{k, std::vector<Integer>(group_order(k))};
      for (const auto& mu : enumerate_partitions(k)) {
        auto c = class_sum(mu);
        const Rat coeff = e.coeffs[partition_index(mu)];
        REQUIRE(coeff.get_den() == 1);
        for (std::size_t x = 0; x < c.coeffs.size(); ++x) g.coeffs[x] += c.coeffs[x] * coeff.get_num();
      }
      for (const auto& mu : enumerate_partitions(k)) {
        auto c = class_sum(mu);
        CHECK((g * c).coeffs == (c * g).coeffs);
      }
    }
  }
}

TEST_CASE("Frobenius map sends characters to Schur functions") {
  for (int k = 0; k <= 6; ++k) {
    const auto& basis = enumerate_partitions(k);
    for (const auto& l : basis) {
      ClassAlgebraElement chi{k, {}};
      for (const auto& mu : basis) chi.coeffs.push_back(Rat(character(l, mu)));
      CHECK(frobenius_image(chi) == schur_vector(l));
    }
  }
}

TEST_CASE("content power sums") {
  CHECK(yjm_eigen(parse_partition("(2)"), 1) == 1);
  CHECK(yjm_eigen(parse_partition("(1,1)"), 1) == -1);
  CHECK(yjm_eigen(parse_partition("(3,2,1)"), 3) == 0);
  CHECK(yjm_eigen(parse_partition("(2,2)"), 5) == 0);
  CHECK(yjm_eigen(parse_partition("(4,1,1)"), 0) == 6);
  for (int k = 1; k <= 5; ++k) {
    for (int m = 0; m <= 4; ++m) {
      auto chi = on_character_basis(class_multiplication(yjm_powersum_brute(k, m)), k);
      CHECK(chi.is_diagonal());
      const auto& basis = enumerate_partitions(k);
      for (std::size_t i = 0; i < basis.size(); ++i) CHECK(chi(i, i) == ExactPoly(yjm_eigen(basis[i], m)));
    }
  }
}

TEST_CASE("auxiliary sinh identity") {
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) CHECK(sinh_identity_holds(a, b, 10));
  }
}

TEST_CASE("generating identity for the dispersionless tower") {
  auto k0 = verify_propA1(store(), 0, 8, PropA1Route::eigen);
  CHECK(k0.zero());
  for (int k = 1; k <= 4; ++k) {
    CHECK(verify_propA1(store(), k, 8, PropA1Route::brute).zero());
    CHECK(verify_propA1(store(), k, 8, PropA1Route::eigen).zero());
  }
}
