#include <random>

#include "doctest.h"
#include "dadelab/coeffring.hpp"

using namespace dadelab;

namespace {

Element random_element(const Ring& R, std::mt19937_64& rng) {
  Element e;
  for (int i = 0; i < R.degree(); ++i) e.c[i] = rng() % R.modulus();
  return e;
}

}  // namespace

TEST_CASE("build_ring examples") {
  auto r1 = build_ring(2, 1, 8);
  CHECK(r1->degree() == 1);
  CHECK(r1->modulus() == 256);
  CHECK(r1->zeta() == r1->from_int(-1));
  CHECK(r1->mul(r1->from_int(-1), r1->from_int(-1)) == r1->one());
  CHECK_THROWS_AS(r1->inverse(r1->from_int(2)), NonUnit);

  auto r2 = build_ring(2, 2, 8);
  CHECK(r2->degree() == 2);
  CHECK(r2->mul(r2->zeta(), r2->zeta()) == r2->from_int(-1));
  CHECK(r2->match_root_of_unity(r2->from_int(-1)) == 2);
  CHECK(r2->match_root_of_unity(r2->one()) == 0);
  CHECK_FALSE(r2->match_root_of_unity(r2->from_int(2)).has_value());

  auto r3 = build_ring(3, 1, 8);
  auto z = r3->zeta();
  CHECK(r3->is_zero(r3->add(r3->add(r3->mul(z, z), z), r3->one())));

  auto r0 = build_ring(5, 0, 3);
  CHECK(r0->degree() == 1);
  CHECK(r0->zeta() == r0->one());
  CHECK(r0->modulus() == 125);
}

TEST_CASE("build_ring errors") {
  CHECK_THROWS_AS(build_ring(4, 1, 8), InvalidArgument);
  CHECK_THROWS_AS(build_ring(2, 1, 0), InvalidArgument);
}

TEST_CASE("reduce_residue") {
  auto R = build_ring(2, 2, 8);
  RingValue zeta{R, R->zeta()};
  CHECK(reduce_residue(zeta).value == R->residue_field()->one());
  CHECK(R->residue_field()->is_zero(reduce_residue({R, R->from_int(2)}).value));
  Element x = R->add(R->one(), R->mul(R->from_int(4), R->zeta()));
  CHECK(reduce_residue({R, x}).value == R->residue_field()->one());
}

TEST_CASE("ring mismatch") {
  auto a = build_ring(2, 2, 8);
  auto b = build_ring(2, 2, 9);
  CHECK_THROWS_AS(RingValue({a, a->one()}) + RingValue({b, b->one()}), RingMismatch);
}

TEST_CASE("residue map is a homomorphism and units are detected by residue") {
  std::mt19937_64 rng(7);
  for (auto [p, n, N] : {std::tuple{2, 1, 6}, {2, 2, 5}, {2, 3, 4}, {3, 1, 4}, {3, 2, 3}}) {
    auto R = build_ring(p, n, N);
    for (int i = 0; i < 200; ++i) {
      auto x = random_element(*R, rng), y = random_element(*R, rng);
      CHECK((R->residue_value(R->mul(x, y))) == (R->residue_value(x) * R->residue_value(y)) % p);
      CHECK((R->residue_value(R->add(x, y))) == (R->residue_value(x) + R->residue_value(y)) % p);
      if (R->residue_value(x) != 0) {
        CHECK(R->is_one(R->mul(x, R->inverse(x))));
      } else {
        CHECK_THROWS_AS(R->inverse(x), NonUnit);
      }
    }
  }
}

TEST_CASE("roots of unity are distinct and zeta has exact order") {
  for (auto [p, n] : {std::pair{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    for (int N : {1, 2, 8}) {
      if (p == 2 && N == 1) continue;
      auto R = build_ring(p, n, N);
      CHECK(R->is_one(R->pow(R->zeta(), R->root_order())));
      for (std::uint64_t a = 0; a < R->root_order(); ++a) {
        for (std::uint64_t b = a + 1; b < R->root_order(); ++b) CHECK(R->zeta_pow(a) != R->zeta_pow(b));
        CHECK(R->match_root_of_unity(R->zeta_pow(a)) == a);
      }
    }
  }
}

TEST_CASE("mod 2 the roots of unity collapse") {
  // -1 == 1 in Z/2, so zeta^{2^{n-1}} = -1 coincides with 1.
  auto R = build_ring(2, 3, 1);
  CHECK(R->is_one(R->zeta_pow(4)));
  CHECK(R->match_root_of_unity(R->zeta_pow(5)) == 1);
}

TEST_CASE("valuation and division by the uniformizer") {
  std::mt19937_64 rng(11);
  for (auto [p, n, N] : {std::tuple{2, 2, 6}, {2, 3, 4}, {3, 2, 3}, {2, 0, 8}}) {
    auto R = build_ring(p, n, N);
    auto pi = R->uniformizer();
    CHECK(R->valuation(pi) == 1);
    CHECK(R->valuation(R->from_int(p)) == (n == 0 ? 1 : R->degree()));
    for (int i = 0; i < 100; ++i) {
      auto x = random_element(*R, rng);
      int v = R->valuation(x);
      if (v > 0 && v < R->precision()) {
        auto y = R->divide_by_uniformizer(x);
        CHECK(R->mul(pi, y) == x);
        CHECK(R->valuation(y) == v - 1);
      }
      auto u = random_element(*R, rng);
      if (R->is_unit(u)) CHECK(R->valuation(R->mul(u, x)) == v);
    }
  }
}

TEST_CASE("textual forms round trip") {
  auto R = build_ring(2, 2, 16);
  CHECK(R->header() == "R O p=2 n=2 N=16");
  CHECK(Ring::parse_header(R->header())->same_as(*R));
  auto k = Ring::prime_field(3);
  CHECK(k->header() == "R k p=3");
  Element x = R->add(R->from_int(5), R->mul(R->from_int(-3), R->zeta()));
  CHECK(R->parse_element(R->to_string(x)) == x);
  CHECK_THROWS_AS(R->parse_element("1,x"), ParseError);
  CHECK_THROWS_AS(Ring::parse_header("R Z p=2"), ParseError);
}
