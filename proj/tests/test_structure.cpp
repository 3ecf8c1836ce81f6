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

// Conjugating by the basis change must give block diagonal form.
void check_block_diagonal(const RPModule& M, const Decomposition& dec) {
  const Ring& R = *M.ring();
  auto C = conjugate(M, dec.basis_change);
  std::vector<std::size_t> block_of;
  for (std::size_t b = 0; b < dec.block_summand.size(); ++b) {
    for (std::size_t i = 0; i < dec.summands[dec.block_summand[b]].module.dim(); ++i) block_of.push_back(b);
  }
  REQUIRE(block_of.size() == M.dim());
  for (const auto& A : C.action()) {
    for (std::size_t i = 0; i < M.dim(); ++i) {
      for (std::size_t j = 0; j < M.dim(); ++j) {
        if (block_of[i] != block_of[j]) CHECK(R.is_zero(A(i, j)));
      }
    }
  }
}

std::size_t total_dim(const Decomposition& dec) {
  std::size_t d = 0;
  for (const auto& s : dec.summands) d += s.multiplicity * s.module.dim();
  return d;
}

}  // namespace

TEST_CASE("hom dimensions") {
  for (const auto& spec : catalog::standard_specs()) {
    auto s = setup(spec);
    auto triv = trivial_module(s.k, s.P);
    auto reg = regular_module(s.k, s.P);
    CHECK(hom_basis(triv, reg).size() == 1);
    CHECK(hom_basis(reg, reg).size() == s.P->order());
    CHECK(hom_basis(reg, reg).size() == s.P->order());
  }
  auto c4 = setup("C4");
  CHECK(hom_basis(trivial_module(c4.k, c4.P), syzygy(trivial_module(c4.k, c4.P))).size() == 1);
  auto T = hom_basis(trivial_module(c4.O, c4.P), regular_module(c4.O, c4.P));
  REQUIRE(T.size() == 1);
}

TEST_CASE("decompose examples") {
  auto c2 = setup("C2");
  auto reg = regular_module(c2.k, c2.P);
  auto dec = decompose(tensor(reg, reg));
  REQUIRE(dec.summands.size() == 1);
  CHECK(dec.summands[0].multiplicity == 2);
  CHECK(dec.summands[0].module.dim() == 2);

  auto c4 = setup("C4");
  auto perm = permutation_module(c4.k, c4.P, c4.P->subgroup_classes()[1]);
  auto d2 = decompose(perm);
  REQUIRE(d2.summands.size() == 1);
  CHECK(d2.summands[0].module.dim() == 2);

  auto v4 = setup("C2xC2");
  auto om = syzygy(trivial_module(v4.k, v4.P));
  auto endo = tensor(om, dual(om));
  auto d3 = decompose(endo);
  CHECK(total_dim(d3) == 9);
  check_block_diagonal(endo, d3);
  std::size_t trivial_count = 0, free_count = 0;
  for (const auto& sm : d3.summands) {
    if (sm.module.dim() == 1) trivial_count += sm.multiplicity;
    if (sm.module.dim() == 4) free_count += sm.multiplicity;
  }
  CHECK(trivial_count == 1);
  CHECK(free_count == 2);
}

TEST_CASE("decompose is exhaustive and stable") {
  for (const char* spec : {"C4", "C2xC2", "D8", "Q8", "C3xC3"}) {
    for (bool over_O : {false, true}) {
      auto s = setup(spec);
      RingPtr R = over_O ? s.O : s.k;
      std::vector<RPModule> parts;
      for (const auto& Q : s.P->subgroup_classes()) parts.push_back(permutation_module(R, s.P, Q));
      parts.push_back(syzygy(trivial_module(R, s.P)));
      auto M = direct_sum(parts);
      auto dec = decompose(M);
      CHECK_MESSAGE(total_dim(dec) == M.dim(), spec);
      check_block_diagonal(M, dec);
      std::size_t count = 0;
      for (const auto& sm : dec.summands) {
        count += sm.multiplicity;
        auto again = decompose(sm.module);
        CHECK(again.summands.size() == 1);
        CHECK(again.summands[0].multiplicity == 1);
      }
      CHECK_MESSAGE(count == parts.size(), spec);
    }
  }
}

TEST_CASE("isomorphism tests") {
  auto c4 = setup("C4");
  auto triv = trivial_module(c4.k, c4.P);
  auto reg = regular_module(c4.k, c4.P);
  CHECK(is_isomorphic(reg, reg));
  CHECK_FALSE(is_isomorphic(triv, reg));
  auto om2 = syzygy(syzygy(triv));
  CHECK(om2.dim() == 1);
  CHECK(is_isomorphic(om2, triv));
  auto w = find_isomorphism(om2, triv);
  REQUIRE(w.has_value());

  std::mt19937_64 rng(4);
  auto q8 = setup("Q8");
  auto om = syzygy(trivial_module(q8.O, q8.P));
  auto B = linalg::random_invertible(*q8.O, om.dim(), rng);
  auto omc = conjugate(om, B);
  auto T = find_isomorphism(om, omc);
  REQUIRE(T.has_value());
  for (std::size_t i = 0; i < om.action().size(); ++i) {
    CHECK(linalg::mul(*q8.O, *T, om.action()[i]) == linalg::mul(*q8.O, omc.action()[i], *T));
  }
  auto big = direct_sum(om, regular_module(q8.O, q8.P));
  auto bigc = conjugate(big, linalg::random_invertible(*q8.O, big.dim(), rng));
  auto T2 = find_isomorphism(big, bigc);
  REQUIRE(T2.has_value());
  CHECK(linalg::is_invertible(*q8.O, *T2));
  for (std::size_t i = 0; i < big.action().size(); ++i) {
    CHECK(linalg::mul(*q8.O, *T2, big.action()[i]) == linalg::mul(*q8.O, bigc.action()[i], *T2));
  }
}

TEST_CASE("vertices") {
  auto c4 = setup("C4");
  CHECK(vertex(trivial_module(c4.k, c4.P)).id == c4.P->whole_group_class().id);
  CHECK(vertex(regular_module(c4.k, c4.P)).id == c4.P->trivial_class().id);
  for (const auto& Q : c4.P->subgroup_classes()) {
    CHECK(vertex(permutation_module(c4.k, c4.P, Q)).id == Q.id);
    CHECK(vertex(permutation_module(c4.O, c4.P, Q)).id == Q.id);
  }
  CHECK_THROWS_AS(vertex(direct_sum(trivial_module(c4.k, c4.P), trivial_module(c4.k, c4.P))), NotIndecomposable);
}

TEST_CASE("caps and predicates") {
  auto c4 = setup("C4");
  auto triv = trivial_module(c4.k, c4.P);
  auto reg = regular_module(c4.k, c4.P);
  auto c = cap(direct_sum(triv, reg));
  CHECK(c.module.dim() == 1);
  CHECK(c.multiplicity == 1);
  CHECK_THROWS_AS(cap(reg), NotCapped);
  for (const auto& Q : c4.P->subgroup_classes()) CHECK(is_permutation_module(permutation_module(c4.k, c4.P, Q)));

  auto v4 = setup("C2xC2");
  CHECK(is_endo_permutation(syzygy(trivial_module(v4.k, v4.P))));

  auto q8 = setup("Q8");
  auto om = syzygy(trivial_module(q8.k, q8.P));
  CHECK(om.dim() == 7);
  CHECK(is_endotrivial(om));
  CHECK(is_strongly_capped(om));
  auto cq = cap(tensor(om, dual(om)));
  CHECK(cq.module.dim() == 1);
  CHECK(is_isomorphic(cq.module, trivial_module(q8.k, q8.P)));
}
