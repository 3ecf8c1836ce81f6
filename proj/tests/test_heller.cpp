#include "doctest.h"
#include "dadelab/heller.hpp"
#include "dadelab/structure.hpp"

using namespace dadelab;

namespace {

struct Setup {
  GroupPtr P;
  RingPtr O;
  RingPtr k;
};

Setup setup(const std::string& spec, int N = 16) {
  auto P = catalog::build_group(spec);
  return {P, coefficient_ring(*P, true, N), coefficient_ring(*P, false, N)};
}

}  // namespace

TEST_CASE("projective covers") {
  auto c4 = setup("C4");
  auto triv = trivial_module(c4.k, c4.P);
  auto pc = projective_cover(triv);
  CHECK(pc.rank == 1);
  CHECK(pc.kernel.dim() == 3);
  auto pr = projective_cover(regular_module(c4.k, c4.P));
  CHECK(pr.rank == 1);
  CHECK(pr.kernel.dim() == 0);
  auto po = projective_cover(pc.kernel);
  CHECK(po.rank == 1);
  CHECK(po.kernel.dim() == 1);
}

TEST_CASE("cover exactness and minimality") {
  for (const auto& spec : catalog::standard_specs()) {
    for (bool over_O : {false, true}) {
      auto s = setup(spec);
      RingPtr R = over_O ? s.O : s.k;
      RPModule M = trivial_module(R, s.P);
      for (int step = 0; step < 2; ++step) {
        auto pc = projective_cover(M);
        CHECK(pc.kernel.dim() + M.dim() == pc.rank * s.P->order());
        CHECK(linalg::is_zero(*R, linalg::mul(*R, pc.surjection, pc.kernel_basis)));
        CHECK_NOTHROW(pc.kernel.validate());
        CHECK(strip_free(pc.kernel).free_rank == 0);
        M = pc.kernel;
      }
      CHECK(syzygy(trivial_module(R, s.P)).dim() == s.P->order() - 1);
    }
  }
}

TEST_CASE("syzygy examples") {
  auto c2 = setup("C2");
  auto om = syzygy(trivial_module(c2.O, c2.P));
  REQUIRE(om.dim() == 1);
  CHECK(om.generator_matrix(0)(0, 0) == c2.O->from_int(-1));
  CHECK(is_isomorphic(omega_power(c2.k, c2.P, 1), trivial_module(c2.k, c2.P)));

  auto c4 = setup("C4");
  auto triv = trivial_module(c4.k, c4.P);
  CHECK(is_isomorphic(cosyzygy(syzygy(triv)), triv));
  CHECK(is_isomorphic(omega_power(c4.k, c4.P, 2), triv));
  CHECK(omega_power(c4.O, c4.P, 0) == trivial_module(c4.O, c4.P));
  CHECK_THROWS_AS(omega_power(c4.k, c4.P, 5), BoundExceeded);
}

TEST_CASE("relative syzygies") {
  auto c4 = setup("C4");
  CHECK(relative_syzygy(c4.k, c4.P, c4.P->whole_group_class()).dim() == 0);
  CHECK(relative_syzygy(c4.k, c4.P, c4.P->subgroup_classes()[1]).dim() == 1);
  auto c2 = setup("C2");
  auto rel = relative_syzygy(c2.O, c2.P, c2.P->trivial_class());
  auto minus = character_module(make_character(c2.O, c2.P, {1}));
  CHECK(is_isomorphic(rel, minus));
}

TEST_CASE("duality and lifting compatibility") {
  for (const char* spec : {"C4", "C2xC2", "Q8", "C3"}) {
    auto s = setup(spec);
    for (int m = 1; m <= 2; ++m) {
      auto pos = omega_power(s.k, s.P, m);
      auto neg = omega_power(s.k, s.P, -m);
      CHECK_MESSAGE(is_isomorphic(neg, dual(pos)), spec);
      auto lat = omega_power(s.O, s.P, m);
      CHECK_MESSAGE(is_isomorphic(reduce_mod_p(lat), pos), spec);
    }
  }
}
