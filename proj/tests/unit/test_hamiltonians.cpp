#include <doctest.h>

#include "qkdv/exact/linear.h"
#include "qkdv/fock/fock.h"
#include "qkdv/hamiltonians/br.h"
#include "qkdv/hamiltonians/densities.h"
#include "qkdv/hamiltonians/record.h"

using namespace qkdv;

namespace {

ExactPoly hb() { return ExactPoly::variable(Var::h, 2); }
ExactPoly e2() { return ExactPoly::variable(Var::eps2); }

}  // namespace

TEST_CASE("explicit densities") {
  CHECK(explicit_density(-1) == Density::u());
  CHECK(explicit_density(1).partial(0) == explicit_density(0));
  CHECK(explicit_density(0).partial(0) == explicit_density(-1));
  CHECK_THROWS_AS(explicit_density(2), Error);
  // p = 0 block of h_1 at weight 1: -(eps2 hbar/12) - eps2 hbar/2880 - hbar U0/24 + hbar U0 + U0^3/6
  auto b = quantize(explicit_density(1), 0, 1);
  const ExactPoly U0 = ExactPoly::variable(Var::U0);
  CHECK(b.matrix(0, 0) == -(e2() * hb()) * make_rat(241, 2880) - hb() * U0 * make_rat(1, 24) + hb() * U0 +
                              U0.pow(3) * make_rat(1, 6));
}

TEST_CASE("dispersionless densities") {
  CHECK(eliashberg_density(-1) == Density::u());
  CHECK(eliashberg_density(0) == make_rat(1, 2) * (Density::u() * Density::u()) - Density(hb() * make_rat(1, 24)));
  CHECK(eliashberg_density(1) == make_rat(1, 6) * (Density::u() * Density::u() * Density::u()) -
                                     (hb() * make_rat(1, 24)) * Density::u() -
                                     (hb() * make_rat(1, 24)) * Density::u(2));
  // vacuum constant hbar^{(m+2)/2} beta_{m+2}
  CHECK(eliashberg_density(2).constant() == ExactPoly(make_rat(7, 5760)) * hb().pow(2));
  // Mode-0 operators agree with the dispersive ones at eps = 0.
  for (int m = -1; m <= 1; ++m)
    for (int k = 0; k <= 5; ++k) {
      auto a = quantize(eliashberg_density(m), 0, k).matrix;
      auto b = quantize(explicit_density(m), 0, k).matrix.map([](const ExactPoly& e) { return e.evaluate(Var::eps2, 0); });
      CHECK(a == b);
    }
}

TEST_CASE("Lenard-Magri") {
  const Density u = Density::u();
  CHECK(lenard_magri(-1) == u);
  CHECK(lenard_magri(0) == make_rat(1, 2) * (u * u) + (e2() * make_rat(1, 12)) * Density::u(2));
  CHECK(lenard_magri(1) == make_rat(1, 6) * (u * u * u) +
                               (e2() * make_rat(1, 24)) * (Density::u(1) * Density::u(1)) +
                               (e2() * make_rat(1, 12)) * (u * Density::u(2)) +
                               (e2().pow(2) * make_rat(1, 240)) * Density::u(4));
}

TEST_CASE("recursion from u") {
  // The recursion fixes densities exactly, total derivatives included.
  auto h0 = br_next(Density::u(), -1, explicit_density(1)).density;
  CHECK(h0 == explicit_density(0).without_constant());
  auto h1 = br_next(h0, 0, explicit_density(1)).density;
  CHECK(h1.partial(0) == explicit_density(0));  // recovers the -hbar/24 vacuum term
  const Density extra = h1 - explicit_density(1).without_constant();
  CHECK(extra == (-(hb() * make_rat(1, 24))) * Density::u(2) + (e2().pow(2) * make_rat(1, 1152)) * Density::u(4));
  CHECK(extra.euler().is_zero());
  // Blocks of the step itself match direct quantization of the result.
  FitWindow w{3, 5};
  auto blocks = br_step(h0, 0, explicit_density(1), w);
  CHECK(blocks.size() == 12);
  for (const auto& [key, m] : blocks) CHECK(m == quantize(h1, key.first, key.second).matrix);
  auto h2 = br_next(h1, 1, explicit_density(1)).density;
  CHECK(h2.partial(0).without_constant() == h1);
  CHECK(h2.partial(0).constant() == -(hb() * e2()) * make_rat(1, 2880));
}

TEST_CASE("density reconstruction round trips") {
  for (int m = 0; m <= 1; ++m) {
    ModeBlocks blocks;
    for (int p = 1; p <= m + 3; ++p)
      for (int d = 0; d + p <= m + 4; ++d) blocks.emplace(std::make_pair(p, d), quantize(explicit_density(m), p, d).matrix);
    CHECK(density_reconstruct(blocks, m) == explicit_density(m).without_constant());
  }
  ModeBlocks bad;
  auto good = quantize(explicit_density(1), 1, 1).matrix;
  good(0, 0) += ExactPoly::variable(Var::U0, 7);
  bad.emplace(std::make_pair(1, 1), good);
  CHECK_THROWS_AS(density_reconstruct(bad, 1), InconsistentSystem);
}

TEST_CASE("store: dispersive records") {
  HamiltonianStore store;
  const auto& h2 = store.dispersive(2);
  CHECK(h2.provenance == "br-recursion");
  CHECK(h2.constant_convention == "string-equation");
  // epsilon-free part of the vacuum constant matches the dispersionless tower
  CHECK(h2.density.constant().evaluate(Var::eps2, 0) == eliashberg_density(2).constant());
  for (int m = 0; m <= 3; ++m) CHECK(store.dispersive(m).density.partial(0) == store.dispersive(m - 1).density);
  // mode-0 operators of the recursion agree with the printed ones
  for (int m = 0; m <= 1; ++m)
    for (int k = 0; k <= 5; ++k) CHECK(store.dispersive(m).block0(k) == store.explicit_record(m).block0(k));
  for (int k = 0; k <= 5; ++k) {
    CHECK(commute_check(store.dispersive(1), store.dispersive(2), k).zero);
    CHECK(commute_check(store.dispersive(2), store.dispersive(3), k).zero);
  }
  CHECK_THROWS_AS(store.dispersive(4), Error);
}

TEST_CASE("store: cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "qkdv-unit-cache";
  std::filesystem::remove_all(dir);
  StoreOptions opts;
  opts.cache_dir = dir;
  opts.max_dispersive_m = 2;
  opts.cache_weight = 3;
  std::string first;
  {
    HamiltonianStore store(opts);
    first = density_to_json(store.dispersive(2).density).dump();
    store.dispersionless(4);
    CHECK(store.cache_hits() == 0);
  }
  opts.verify_cache = true;
  HamiltonianStore again(opts);
  CHECK(density_to_json(again.dispersive(2).density).dump() == first);
  again.dispersionless(4);
  CHECK(again.cache_hits() == 4);
  std::filesystem::remove_all(dir);
}
