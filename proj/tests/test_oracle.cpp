#include <algorithm>

#include "doctest.h"
#include "dadelab/oracle.hpp"

using namespace dadelab;
using oracle::Mat2;

namespace {

// Upper unitriangular Jordan blocks of the given sizes on the diagonal.
Mat2 jordan(const std::vector<std::size_t>& sizes) {
  std::size_t d = 0;
  for (auto s : sizes) d += s;
  Mat2 A(d, std::vector<int>(d, 0));
  std::size_t off = 0;
  for (auto s : sizes) {
    for (std::size_t i = 0; i < s; ++i) {
      A[off + i][off + i] = 1;
      if (i + 1 < s) A[off + i][off + i + 1] = 1;
    }
    off += s;
  }
  return A;
}

}  // namespace

TEST_CASE("jordan types") {
  CHECK(oracle::jordan_type(jordan({3})) == std::vector<std::size_t>{3});
  CHECK(oracle::jordan_type(jordan({1, 4, 2, 2})) == std::vector<std::size_t>{4, 2, 2, 1});
  CHECK_THROWS_AS(oracle::jordan_type(Mat2{{0, 1}, {1, 1}}), InvalidArgument);
}

TEST_CASE("commutants and idempotent splitting") {
  // A single block has the polynomial algebra as commutant.
  CHECK(oracle::commutant_basis({jordan({4})}).size() == 4);
  CHECK(oracle::commutant_basis({jordan({1, 1})}).size() == 4);
  CHECK(oracle::split_by_idempotents({jordan({4})}).size() == 1);

  auto pieces = oracle::split_by_idempotents({jordan({2, 1, 3})});
  std::vector<std::size_t> dims;
  for (const auto& piece : pieces) dims.push_back(piece[0].size());
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{1, 2, 3});
  for (const auto& piece : pieces) CHECK(oracle::jordan_type(piece[0]).size() == 1);

  CHECK(oracle::split_by_idempotents({jordan({1, 1, 1, 1, 1, 1})}).size() == 6);
}
