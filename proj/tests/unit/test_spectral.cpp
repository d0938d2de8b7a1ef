#include <doctest.h>

#include "qkdv/exact/linear.h"
#include "qkdv/spectral/spectral.h"

using namespace qkdv;

namespace {

ExactPoly V0() { return ExactPoly::variable(Var::V0); }
ExactPoly sig() { return ExactPoly::variable(Var::sigma); }

HamiltonianStore& store() {
  static HamiltonianStore s;
  return s;
}

// Coefficient of s_nu in r_lambda as a polynomial in sigma.
ExactPoly r_entry(const DeformedSchurSet& set, const std::string& lambda, const std::string& nu) {
  const auto l = partition_index(parse_partition(lambda));
  const auto n = partition_index(parse_partition(nu));
  return set.vectors[l].coefficient(n).to_poly();
}

ExactPoly series(std::initializer_list<std::pair<int, Rat>> terms) {
  ExactPoly out;
  for (const auto& [p, c] : terms) out += ExactPoly::variable(Var::sigma, p) * c;
  return out;
}

}  // namespace

TEST_CASE("scaled operators") {
  for (int k = 0; k <= 4; ++k) {
    auto km1 = scale(store().dispersive(-1), k, true);
    CHECK(km1.schur == V0() * ExactMatrix::identity(weight_dimension(k)));
    auto k0 = scale(store().dispersive(0), k, true);
    CHECK(k0.schur.is_diagonal());
    const auto& basis = enumerate_partitions(k);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(k0.schur(i, i) == ExactPoly(k) - ExactPoly(make_rat(1, 24)) + V0().pow(2) * make_rat(1, 2));
    }
  }
  // Off-diagonal part of K_1 on weight 2 is proportional to sigma.
  auto k1 = scale(store().dispersive(1), 2, false);
  CHECK(!k1.schur(0, 1).is_zero());
  CHECK(k1.schur(0, 1).coefficient(Var::sigma, 1) * sig() == k1.schur(0, 1));
  CHECK(k1.schur == k1.schur.transpose());
}

TEST_CASE("dispersionless eigenvalues and m*") {
  CHECK(dispersionless_eigen(-1, parse_partition("(2,1)")) == V0());
  CHECK(dispersionless_eigen(0, parse_partition("(1)")) == V0().pow(2) * make_rat(1, 2) + ExactPoly(make_rat(23, 24)));
  CHECK(dispersionless_eigen(1, parse_partition("()")) == V0().pow(3) * make_rat(1, 6) - V0() * make_rat(1, 24));
  // Brute-force oracle: smallest m for which the eigenvalue polynomials are distinct.
  for (int k = 0; k <= 8; ++k) {
    const auto& basis = enumerate_partitions(k);
    int expected = 0;
    for (;; ++expected) {
      bool ok = true;
      for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
          if (dispersionless_eigen(expected, basis[a]) == dispersionless_eigen(expected, basis[b])) ok = false;
        }
      }
      if (ok) break;
    }
    CHECK(mstar_search(k) == expected);
  }
  CHECK(mstar_search(0) == 0);
  for (int k = 2; k <= 5; ++k) CHECK(mstar_search(k) == 1);
  CHECK(mstar_search(6) == 2);
  CHECK(p_function(2, parse_partition("(4,1,1)")) == p_function(2, parse_partition("(3,3)")));
  CHECK(p_function(3, parse_partition("(4,1,1)")) == make_rat(117, 2));
  CHECK(p_function(3, parse_partition("(3,3)")) == make_rat(45, 2));
  auto cube_sum = [](const std::string& l) {
    long s = 0;
    for (int c : contents(parse_partition(l))) s += static_cast<long>(c) * c * c;
    return s;
  };
  CHECK(cube_sum("(4,1,1)") == 27);
  CHECK(cube_sum("(3,3)") == 9);
}

TEST_CASE("deformed Schur: printed series") {
  auto k2 = deformed_schur(store(), 2, 8);
  CHECK(r_entry(k2, "(2)", "(1,1)") == series({{1, make_rat(-1, 8)},
                                                {3, make_rat(1, 512)},
                                                {5, make_rat(-1, 16384)},
                                                {7, make_rat(5, 2097152)}}));
  // The s_(1,1) coefficient c of r_(2) solves b c^2 + (a - d) c - b = 0 for
  // the symmetric 2x2 matrix [[a, b], [b, d]] of K_1 at V0 = 0.
  {
    auto k1 = scale(store().dispersive(1), 2, false).schur;
    ExactSeries c = k2.vectors[0].coefficient(1);
    ExactSeries a = ExactSeries::from_poly(k1(0, 0), Var::sigma, 8);
    ExactSeries b = ExactSeries::from_poly(k1(0, 1), Var::sigma, 8);
    ExactSeries d = ExactSeries::from_poly(k1(1, 1), Var::sigma, 8);
    CHECK((b * c * c + (a - d) * c - b).to_poly().is_zero());
  }

  auto k3 = deformed_schur(store(), 3, 5);
  CHECK(r_entry(k3, "(3)", "(2,1)") ==
        series({{1, make_rat(-2, 9)}, {2, make_rat(1, 324)}, {3, make_rat(43, 5832)}, {4, make_rat(193, 559872)}}));
  CHECK(r_entry(k3, "(3)", "(1,1,1)") ==
        series({{1, make_rat(5, 72)}, {2, make_rat(2, 81)}, {3, make_rat(-893, 373248)}, {4, make_rat(-115, 69984)}}));
  CHECK(r_entry(k3, "(2,1)", "(3)") ==
        series({{1, make_rat(2, 9)}, {2, make_rat(1, 81)}, {3, make_rat(-2, 729)}, {4, make_rat(-1, 729)}}));
  CHECK(r_entry(k3, "(2,1)", "(1,1,1)") ==
        series({{1, make_rat(-2, 9)}, {2, make_rat(1, 81)}, {3, make_rat(2, 729)}, {4, make_rat(-1, 729)}}));

  auto k4 = deformed_schur(store(), 4, 4);
  CHECK(r_entry(k4, "(4)", "(3,1)") == series({{1, make_rat(-5, 16)}, {2, make_rat(1, 192)}, {3, make_rat(6055, 331776)}}));
  CHECK(r_entry(k4, "(4)", "(2,2)") == series({{1, make_rat(-5, 72)}, {2, make_rat(59, 2592)}, {3, make_rat(4715, 1492992)}}));
  CHECK(r_entry(k4, "(4)", "(2,1,1)") == series({{1, make_rat(1, 8)}, {2, make_rat(37, 768)}, {3, make_rat(-727, 82944)}}));
  CHECK(r_entry(k4, "(4)", "(1,1,1,1)") ==
        series({{1, make_rat(-7, 144)}, {2, make_rat(-95, 2592)}, {3, make_rat(-9119, 2985984)}}));
  CHECK(r_entry(k4, "(3,1)", "(4)") == series({{1, make_rat(5, 16)}, {2, make_rat(1, 32)}, {3, make_rat(-7, 4096)}}));
  CHECK(r_entry(k4, "(3,1)", "(2,2)") == series({{1, make_rat(-1, 8)}, {2, make_rat(-1, 32)}, {3, make_rat(-13, 2048)}}));
  CHECK(r_entry(k4, "(3,1)", "(2,1,1)") == series({{1, make_rat(-5, 16)}, {2, make_rat(3, 64)}, {3, make_rat(35, 4096)}}));
  CHECK(r_entry(k4, "(3,1)", "(1,1,1,1)") == series({{1, make_rat(1, 8)}, {2, make_rat(11, 256)}, {3, make_rat(-7, 1024)}}));
  CHECK(r_entry(k4, "(2,2)", "(4)") == series({{1, make_rat(5, 72)}, {2, make_rat(37, 1296)}, {3, make_rat(-133, 46656)}}));
  CHECK(r_entry(k4, "(2,2)", "(3,1)") == series({{1, make_rat(1, 8)}, {2, make_rat(-1, 48)}, {3, make_rat(-31, 5184)}}));
  CHECK(r_entry(k4, "(2,2)", "(2,1,1)") == series({{1, make_rat(-1, 8)}, {2, make_rat(-1, 48)}, {3, make_rat(31, 5184)}}));
  CHECK(r_entry(k4, "(2,2)", "(1,1,1,1)") ==
        series({{1, make_rat(-5, 72)}, {2, make_rat(37, 1296)}, {3, make_rat(133, 46656)}}));
}

TEST_CASE("deformed Schur: invariants") {
  for (int k = 1; k <= 5; ++k) {
    auto set = deformed_schur(store(), k, 5, {-1, 0, 1, 2, 3});
    const std::size_t dim = set.basis.size();
    for (std::size_t l = 0; l < dim; ++l) {
      const auto& r = set.vectors[l];
      CHECK(r.coefficient(l).to_poly() == ExactPoly(1));
      for (int m = -1; m <= 3; ++m) {
        CHECK(!eigen_residual(scale(store().dispersive(m), k, true), r).has_value());
        CHECK(r.eigen.at(m)[0] == dispersionless_eigen(m, r.lambda));
        if (m >= 0) {
          for (int n = 0; n < r.order; ++n) CHECK(r.eigen.at(m)[n].derivative(Var::V0) == r.eigen.at(m - 1)[n]);
        }
      }
      // Orthogonality.
      for (std::size_t mu = l + 1; mu < dim; ++mu) {
        ExactSeries acc(Var::sigma, r.order);
        for (std::size_t nu = 0; nu < dim; ++nu) acc = acc + r.coefficient(nu) * set.vectors[mu].coefficient(nu);
        CHECK(acc.to_poly().is_zero());
      }
      // Conjugation: r_{l', n'}(sigma) = r_{l n}(-sigma).
      const auto lc = partition_index(conjugate(r.lambda));
      for (std::size_t nu = 0; nu < dim; ++nu) {
        const auto nc = partition_index(conjugate(set.basis[nu]));
        CHECK(set.vectors[lc].coefficient(nc).to_poly() ==
              r.coefficient(nu).to_poly().substitute(Var::sigma, -sig()));
      }
    }
  }
}

TEST_CASE("spectral curves") {
  const ExactPoly rho = ExactPoly::variable(Var::rho);
  CHECK(spectral_curve(store(), 1, 1).poly == rho - sig() * make_rat(241, 2880));
  CHECK(spectral_curve(store(), 0, 1).poly == rho - sig() * make_rat(1, 2880));
  auto c2 = spectral_curve(store(), 2, 1).poly;
  CHECK(c2.degree(Var::rho) == 2);
  // rho-discriminant is a constant multiple of 16 + sigma^2.
  ExactPoly a = c2.coefficient(Var::rho, 2), b = c2.coefficient(Var::rho, 1), c = c2.coefficient(Var::rho, 0);
  ExactPoly disc = b * b - ExactPoly(4) * a * c;
  auto q = disc.divide_exact(ExactPoly(16) + sig().pow(2));
  REQUIRE(q.has_value());
  CHECK(q->is_constant());
  // At sigma = 0 the roots are the dispersionless eigenvalues at V0 = 0.
  for (int k = 0; k <= 5; ++k) {
    auto curve = spectral_curve(store(), k, 1).poly.evaluate(Var::sigma, 0);
    ExactPoly product(1);
    for (const auto& l : enumerate_partitions(k)) product *= rho - dispersionless_eigen(1, l).evaluate(Var::V0, 0);
    CHECK(curve == product);
  }
}

TEST_CASE("genus right-hand side") {
  const long table[] = {0, 0, 0, 1, 4, 9, 21, 37, 69, 113, 187};
  for (int k = 1; k <= 10; ++k) CHECK(conjecture_rhs(k) == table[k]);
}

TEST_CASE("sigma to infinity") {
  for (int k = 0; k <= 6; ++k) {
    auto rep = sigma_infinity_diag(store(), k, 1);
    CHECK(rep.leading_power == 1);
    CHECK(rep.affine);
    for (std::size_t i = 0; i < rep.diagonal.size(); ++i) {
      CHECK(rep.diagonal[i] == make_rat(1, 12) * Rat(rep.reference[i]) + make_rat(1, 2880));
    }
  }
  CHECK(sigma_infinity_diag(store(), 3, 0).sigma_independent);
}
