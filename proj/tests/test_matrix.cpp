#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "dadelab/matrix.hpp"

using namespace dadelab;

namespace {

Matrix random_matrix(const Ring& R, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix A(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      for (int d = 0; d < R.degree(); ++d) A(i, j).c[d] = rng() % R.modulus();
  return A;
}

// Leibniz expansion over all permutations.
Element leibniz(const Ring& R, const Matrix& A) {
  std::vector<std::size_t> perm(A.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Element det = R.zero();
  do {
    Element term = R.one();
    for (std::size_t i = 0; i < perm.size(); ++i) term = R.mul(term, A(i, perm[i]));
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    det = inversions % 2 ? R.sub(det, term) : R.add(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Forces non-unit entries so elimination has to pivot on valuations.
Matrix scaled_by_uniformizer(const Ring& R, Matrix A, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (rng() % 2) A(i, j) = R.mul(A(i, j), R.uniformizer());
  return A;
}

}  // namespace

TEST_CASE("determinant agrees with Leibniz expansion") {
  std::mt19937_64 rng(3);
  for (auto [p, n, N] : {std::tuple{2, 2, 6}, {2, 1, 8}, {3, 1, 4}, {2, 3, 3}}) {
    auto R = build_ring(p, n, N);
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t d = 1 + trial % 5;
      auto A = scaled_by_uniformizer(*R, random_matrix(*R, d, d, rng), rng);
      CHECK(linalg::determinant(*R, A) == leibniz(*R, A));
    }
  }
  auto k = Ring::prime_field(2);
  for (int trial = 0; trial < 30; ++trial) {
    auto A = random_matrix(*k, 4, 4, rng);
    CHECK(linalg::determinant(*k, A) == leibniz(*k, A));
  }
}

TEST_CASE("inverse and products") {
  std::mt19937_64 rng(5);
  auto R = build_ring(2, 2, 10);
  for (int trial = 0; trial < 10; ++trial) {
    auto A = linalg::random_invertible(*R, 6, rng);
    auto Ai = linalg::inverse(*R, A);
    CHECK(linalg::is_identity(*R, linalg::mul(*R, A, Ai)));
    CHECK(linalg::is_identity(*R, linalg::mul(*R, Ai, A)));
  }
  Matrix S(2, 2);
  S(0, 0) = R->from_int(2);
  S(1, 1) = R->one();
  CHECK_THROWS_AS(linalg::inverse(*R, S), NonUnit);
  auto k = Ring::prime_field(3);
  auto B = linalg::random_invertible(*k, 5, rng);
  CHECK(linalg::is_identity(*k, linalg::mul(*k, B, linalg::inverse(*k, B))));
}

TEST_CASE("kron and block_diag") {
  auto k = Ring::prime_field(5);
  std::mt19937_64 rng(1);
  auto A = random_matrix(*k, 2, 2, rng), B = random_matrix(*k, 3, 3, rng);
  auto C = random_matrix(*k, 2, 2, rng), D = random_matrix(*k, 3, 3, rng);
  // Mixed-product property.
  CHECK(linalg::mul(*k, linalg::kron(*k, A, B), linalg::kron(*k, C, D)) ==
        linalg::kron(*k, linalg::mul(*k, A, C), linalg::mul(*k, B, D)));
  auto E = linalg::block_diag(A, B);
  CHECK(E.rows() == 5);
  CHECK(E(3, 4) == B(1, 2));
  CHECK(k->is_zero(E(0, 4)));
}

TEST_CASE("kernel and solve over chain rings") {
  std::mt19937_64 rng(9);
  for (auto [p, n, N] : {std::tuple{2, 2, 8}, {3, 1, 5}, {2, 0, 10}}) {
    auto R = build_ring(p, n, N);
    for (int trial = 0; trial < 20; ++trial) {
      // A = B * C with inner dimension 3 has a free kernel of rank >= cols - 3.
      auto B = random_matrix(*R, 5, 3, rng), C = random_matrix(*R, 3, 6, rng);
      auto A = linalg::mul(*R, B, C);
      auto K = linalg::kernel(*R, A);
      CHECK(linalg::is_zero(*R, linalg::mul(*R, A, K)));
      CHECK(K.cols() >= 3);
      CHECK(linalg::residue_rank(*R, K) == K.cols());
      auto x = random_matrix(*R, 6, 1, rng);
      auto b = linalg::mul(*R, A, x);
      auto y = linalg::solve(*R, A, b);
      REQUIRE(y.has_value());
      CHECK(linalg::mul(*R, A, *y) == b);
    }
    Matrix Z(1, 1);
    Z(0, 0) = R->uniformizer();
    Matrix one(1, 1);
    one(0, 0) = R->one();
    CHECK_FALSE(linalg::solve(*R, Z, one).has_value());
  }
}

TEST_CASE("surjection kernel") {
  std::mt19937_64 rng(13);
  auto R = build_ring(2, 2, 8);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix S = random_matrix(*R, 3, 7, rng);
    if (linalg::residue_rank(*R, S) < 3) continue;
    auto K = linalg::surjection_kernel(*R, S);
    CHECK(K.basis.cols() == 4);
    CHECK(linalg::is_zero(*R, linalg::mul(*R, S, K.basis)));
    auto coords = linalg::kernel_coordinates(K, K.basis);
    CHECK(linalg::is_identity(*R, coords));
  }
}

TEST_CASE("independent columns") {
  auto k = Ring::prime_field(2);
  Matrix A(2, 3);
  A(0, 0).c[0] = 1;
  A(0, 1).c[0] = 1;
  A(1, 2).c[0] = 1;
  CHECK(linalg::independent_columns(*k, A) == std::vector<std::size_t>{0, 2});
}
