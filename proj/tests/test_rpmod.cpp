#include <random>

#include "doctest.h"
#include "dadelab/heller.hpp"
#include "dadelab/rpmod.hpp"
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

Element det(const RPModule& L, std::size_t g) {
  return linalg::determinant(*L.ring(), L.element_matrix(g));
}

}  // namespace

TEST_CASE("permutation modules") {
  auto s = setup("C4");
  auto reg = permutation_module(s.k, s.P, s.P->trivial_class());
  CHECK(reg.dim() == 4);
  CHECK_NOTHROW(reg.validate());
  CHECK(permutation_module(s.O, s.P, s.P->whole_group_class()).dim() == 1);
  auto q = setup("Q8");
  for (const auto& Q : q.P->subgroup_classes()) {
    if (Q.order() == 4) CHECK(permutation_module(q.O, q.P, Q).dim() == 2);
  }
}

TEST_CASE("validation rejects a broken relation") {
  auto s = setup("C2xC2");
  auto M = permutation_module(s.k, s.P, s.P->trivial_class());
  auto action = M.action();
  // Swap in a non-commuting involution for the second generator.
  Matrix B(4, 4);
  B(1, 0).c[0] = 1;
  B(0, 1).c[0] = 1;
  B(2, 2).c[0] = 1;
  B(3, 3).c[0] = 1;
  Matrix C(4, 4);
  C(2, 0).c[0] = 1;
  C(0, 2).c[0] = 1;
  C(1, 1).c[0] = 1;
  C(3, 3).c[0] = 1;
  CHECK_THROWS_AS(RPModule(s.k, s.P, {B, C}), ValidationError);
  CHECK_NOTHROW(RPModule(s.k, s.P, action));
}

TEST_CASE("dual, tensor, restriction") {
  auto s = setup("C4");
  auto triv = trivial_module(s.O, s.P);
  CHECK(dual(triv) == triv);
  auto reg = regular_module(s.O, s.P);
  auto om = syzygy(triv);
  CHECK(tensor(reg, om).dim() == 12);
  CHECK_NOTHROW(tensor(reg, om).validate());
  const std::size_t g = s.P->generators()[0];
  CHECK(det(dual(reg), g) == s.O->inverse(det(reg, g)));
  auto sub = restrict(reg, s.P->subgroup_classes()[1]);
  CHECK(sub.group()->order() == 2);
  CHECK(sub.dim() == 4);
  CHECK_NOTHROW(sub.validate());
  auto trivial_sub = restrict(reg, s.P->trivial_class());
  CHECK(trivial_sub.dim() == 4);
}

TEST_CASE("reduce_mod_p") {
  auto s = setup("C2");
  auto minus = character_module(make_character(s.O, s.P, {1}));
  CHECK(s.O->match_root_of_unity(minus.generator_matrix(0)(0, 0)) == 1);
  auto red = reduce_mod_p(minus);
  CHECK(red == trivial_module(s.k, s.P));
  auto q = setup("Q8");
  for (const auto& Q : q.P->subgroup_classes()) {
    CHECK(reduce_mod_p(permutation_module(q.O, q.P, Q)) == permutation_module(q.k, q.P, Q));
  }
}

TEST_CASE("determinant characters") {
  auto c2 = setup("C2");
  auto d = determinant_character(regular_module(c2.O, c2.P));
  CHECK(d.exponents == std::vector<std::uint64_t>{1});
  auto q8 = setup("Q8");
  auto dq = determinant_character(regular_module(q8.O, q8.P));
  CHECK(dq.is_trivial());
  CHECK(determinant_character(trivial_module(q8.O, q8.P)).is_trivial());
  CHECK_THROWS_AS(determinant_character(trivial_module(q8.k, q8.P)), InvalidArgument);
}

TEST_CASE("twist") {
  auto s = setup("C4");
  auto L = syzygy(trivial_module(s.O, s.P));
  auto chi = make_character(s.O, s.P, {1});
  CHECK(twist(L, trivial_character(s.O, s.P)) == L);
  CHECK(twist(twist(L, chi), inverse(chi)) == L);
  auto dt = determinant_character(twist(L, chi));
  auto expected = power(chi, static_cast<std::int64_t>(L.dim())) * determinant_character(L);
  CHECK(dt == expected);
  CHECK_THROWS_AS(make_character(s.O, s.P, {1, 2}), InvalidArgument);
  auto q = setup("Q8");
  CHECK_THROWS_AS(make_character(q.O, q.P, {1, 0}), ValidationError);
}

TEST_CASE("determinant identities on random lattices") {
  std::mt19937_64 rng(17);
  for (const char* spec : {"C4", "C2xC2", "Q8", "C3"}) {
    auto s = setup(spec, 8);
    std::vector<RPModule> pool{trivial_module(s.O, s.P), regular_module(s.O, s.P), syzygy(trivial_module(s.O, s.P))};
    for (const auto& Q : s.P->subgroup_classes()) pool.push_back(permutation_module(s.O, s.P, Q));
    for (int t = 0; t < 10; ++t) {
      const auto& L = pool[rng() % pool.size()];
      const auto& N = pool[rng() % pool.size()];
      auto B = linalg::random_invertible(*s.O, L.dim(), rng);
      auto Lc = conjugate(L, B);
      for (std::size_t g = 0; g < s.P->order(); ++g) {
        const Ring& R = *s.O;
        CHECK(det(tensor(Lc, N), g) == R.mul(R.pow(det(Lc, g), N.dim()), R.pow(det(N, g), Lc.dim())));
        CHECK(R.is_one(R.mul(det(dual(Lc), g), det(Lc, g))));
        CHECK(det(direct_sum(Lc, N), g) == R.mul(det(Lc, g), det(N, g)));
      }
    }
  }
}
