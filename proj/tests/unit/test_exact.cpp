#include <doctest.h>

#include <random>

#include "qkdv/exact/json.h"
#include "qkdv/exact/linear.h"
#include "qkdv/exact/series.h"

using namespace qkdv;

namespace {

ExactPoly var(Var v, int k = 1) { return ExactPoly::variable(v, k); }

ExactPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), ex(0, 2), co(-5, 5);
  ExactPoly p;
  for (int t = nterms(rng); t > 0; --t) {
    Exponents e{};
    e[0] = static_cast<std::int16_t>(ex(rng));
    e[1] = static_cast<std::int16_t>(ex(rng));
    e[3] = static_cast<std::int16_t>(ex(rng));
    p += ExactPoly::monomial(e, make_rat(co(rng), 1 + ex(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  Rat a = make_rat(6, -4);
  CHECK(a.get_num() == -3);
  CHECK(a.get_den() == 2);
  CHECK(parse_rat("10/4") == make_rat(5, 2));
  CHECK(to_string(make_rat(-7, 5760)) == "-7/5760");
  CHECK(pow(make_rat(2, 3), -2) == make_rat(9, 4));
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK(binomial(6, 3) == 20);
  CHECK(factorial(5) == 120);
}

TEST_CASE("polynomial arithmetic") {
  CHECK(var(Var::sigma) * var(Var::sigma) == var(Var::sigma, 2));
  ExactPoly p = var(Var::eps2) * var(Var::h, 2);
  ExactPoly q = p.substitute(Var::eps2, -var(Var::sigma) * var(Var::h));
  CHECK(q == -var(Var::sigma) * var(Var::h, 3));
  ExactPoly s = ExactPoly(1) - make_rat(1, 24) * var(Var::z, 2);
  CHECK(s.evaluate(Var::z, 0) == ExactPoly(1));
  CHECK_THROWS_WITH(p.substitute("hbar", ExactPoly(1)), "unknown variable: hbar");
  CHECK((var(Var::h) - var(Var::h)).is_zero());
  CHECK(var(Var::h, -2).substitute(Var::h, 2 * var(Var::U0)) == make_rat(1, 4) * var(Var::U0, -2));
  CHECK(s.to_string() == "1 - 1/24*z^2");
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    ExactPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b - b == a);
  }
}

TEST_CASE("exact division") {
  ExactPoly a = var(Var::V0) + 2 * var(Var::sigma);
  ExactPoly b = var(Var::V0, 2) - 3 * var(Var::h);
  auto q = (a * b).divide_exact(a);
  REQUIRE(q);
  CHECK(*q == b);
  CHECK_FALSE((a * b + 1).divide_exact(a).has_value());
}

TEST_CASE("series reciprocal of sinh(z/2)/(z/2)") {
  // S(z) = sum z^(2n) / (4^n (2n+1)!)
  ExactSeries s(Var::z, 8);
  for (int n = 0; 2 * n < 8; ++n) {
    s.coeff(2 * n) = ExactPoly(Rat(1) / Rat(pow(make_rat(4), n) * Rat(factorial(static_cast<unsigned>(2 * n + 1)))));
  }
  ExactSeries r = s.reciprocal();
  CHECK(r[0] == ExactPoly(1));
  CHECK(r[2] == ExactPoly(make_rat(-1, 24)));
  CHECK(r[4] == ExactPoly(make_rat(7, 5760)));
  CHECK(r[6] == ExactPoly(make_rat(-31, 967680)));
  ExactSeries one(Var::z, 8);
  one.coeff(0) = ExactPoly(1);
  CHECK(r * s == one);
  CHECK(one.reciprocal() == one);
  ExactSeries bad(Var::z, 3);
  bad.coeff(1) = ExactPoly(1);
  CHECK_THROWS_WITH(bad.reciprocal(), "series not invertible");
}

TEST_CASE("series product and composition") {
  ExactSeries a(Var::z, {ExactPoly(1), ExactPoly(1)});
  ExactSeries b(Var::z, {ExactPoly(1), ExactPoly(-1)});
  ExactSeries p = a * b;
  CHECK(p[0] == ExactPoly(1));
  CHECK(p[1].is_zero());
  // exp(2z) = exp(z)^2
  ExactSeries e = ExactSeries::exp_series(Var::z, 6);
  ExactSeries two_z(Var::z, {ExactPoly(), ExactPoly(2), ExactPoly(), ExactPoly(), ExactPoly(), ExactPoly()});
  CHECK(e.compose(two_z) == e * e);
}

TEST_CASE("characteristic polynomial") {
  ExactMatrix swap(2, 2);
  swap(0, 1) = ExactPoly(1);
  swap(1, 0) = ExactPoly(1);
  CHECK(charpoly(swap) == var(Var::rho, 2) - 1);
  ExactMatrix one(1, 1);
  one(0, 0) = var(Var::sigma);
  CHECK(charpoly(one) == var(Var::rho) - var(Var::sigma));
  CHECK_THROWS_AS(charpoly(ExactMatrix(2, 3)), Error);

  // Oracle: cofactor expansion on a random 4x4 integer matrix.
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  ExactMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = ExactPoly(d(rng)) + (i == j ? var(Var::sigma) : ExactPoly());
  ExactMatrix shifted = var(Var::rho) * ExactMatrix::identity(4) - m;
  auto det = [](auto&& self, const ExactMatrix& a) -> ExactPoly {
    if (a.rows() == 1) return a(0, 0);
    ExactPoly out;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      ExactMatrix minor(a.rows() - 1, a.cols() - 1);
      for (std::size_t i = 1; i < a.rows(); ++i)
        for (std::size_t j = 0, k = 0; j < a.cols(); ++j)
          if (j != c) minor(i - 1, k++) = a(i, j);
      ExactPoly term = a(0, c) * self(self, minor);
      if (c % 2 == 0) out += term; else out -= term;
    }
    return out;
  };
  CHECK(charpoly(m) == det(det, shifted));

  // Vanishes at the eigenvalues of a diagonal matrix.
  ExactMatrix diag = ExactMatrix::diagonal({ExactPoly(3), var(Var::sigma), ExactPoly(make_rat(-1, 2))});
  ExactPoly cp = charpoly(diag);
  CHECK(cp.evaluate(Var::rho, 3).is_zero());
  CHECK(cp.substitute(Var::rho, var(Var::sigma)).is_zero());
}

TEST_CASE("linear solving") {
  ExactMatrix a(1, 1);
  a(0, 0) = ExactPoly(2);
  auto x = solve_linear(a, {var(Var::sigma)});
  CHECK(x[0].as_poly() == make_rat(1, 2) * var(Var::sigma));

  ExactMatrix id = ExactMatrix::identity(3);
  std::vector<ExactPoly> b{var(Var::h), ExactPoly(5), var(Var::V0, 2)};
  auto y = solve_linear(id, b);
  for (std::size_t i = 0; i < 3; ++i) CHECK(y[i].as_poly() == b[i]);

  // Overdetermined but consistent, with polynomial entries.
  ExactMatrix o(3, 2);
  o(0, 0) = var(Var::V0);
  o(0, 1) = ExactPoly(1);
  o(1, 0) = ExactPoly(1);
  o(1, 1) = ExactPoly(-1);
  o(2, 0) = ExactPoly(2);
  o(2, 1) = var(Var::V0);
  ExactPoly x0 = var(Var::sigma), x1 = ExactPoly(3);
  std::vector<ExactPoly> rhs{o(0, 0) * x0 + o(0, 1) * x1, o(1, 0) * x0 + o(1, 1) * x1, o(2, 0) * x0 + o(2, 1) * x1};
  auto z = solve_linear(o, rhs);
  for (std::size_t r = 0; r < 3; ++r) CHECK(RatFunc(o(r, 0)) * z[0] + RatFunc(o(r, 1)) * z[1] == RatFunc(rhs[r]));
  rhs[2] += 1;
  try {
    solve_linear(o, rhs);
    FAIL("expected inconsistency");
  } catch (const InconsistentSystem& e) {
    CHECK(e.row() == 2);
  }

  // Genuine rational-function solution: V0 x = 1.
  ExactMatrix v(1, 1);
  v(0, 0) = var(Var::V0) + 1;
  auto w = solve_linear(v, {ExactPoly(1)});
  CHECK_FALSE(w[0].as_poly().has_value());
  CHECK(w[0] * RatFunc(var(Var::V0) + 1) == RatFunc(ExactPoly(1)));
}

TEST_CASE("sparse rational system") {
  RationalSystem sys(2);
  sys.add({{0, 1}, {1, 1}}, 3);
  sys.add({{0, 1}, {1, -1}}, 1);
  sys.add({{0, 2}}, 4);
  auto x = sys.solve();
  CHECK(x[0] == 2);
  CHECK(x[1] == 1);
  CHECK_THROWS_AS(sys.add({{1, 3}}, 4), InconsistentSystem);

  RationalSystem under(3);
  under.add({{0, 1}, {2, 1}}, 1);
  try {
    under.solve();
    FAIL("expected rank deficiency");
  } catch (const RankDeficient& e) {
    CHECK(e.free_columns() == std::vector<std::size_t>{1, 2});
  }
}

TEST_CASE("canonical json round trip") {
  ExactPoly p = make_rat(-1, 8) * var(Var::sigma) + make_rat(1, 512) * var(Var::sigma, 3) + var(Var::h, -1);
  auto j = poly_to_json(p);
  CHECK(j["vars"].size() == kVarCount);
  CHECK(poly_from_json(j) == p);
  CHECK(poly_to_json(poly_from_json(j)).dump() == j.dump());
  ExactMatrix m(1, 2);
  m(0, 1) = p;
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
}
