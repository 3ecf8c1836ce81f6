#include "dadelab/oracle.hpp"

#include <algorithm>
#include <bit>

namespace dadelab::oracle {

namespace {

Mat2 zeros(std::size_t r, std::size_t c) { return Mat2(r, std::vector<int>(c, 0)); }

Mat2 eye(std::size_t n) {
  Mat2 I = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

Mat2 mul(const Mat2& A, const Mat2& B) {
  const std::size_t r = A.size(), m = B.size(), c = B.empty() ? 0 : B[0].size();
  Mat2 C = zeros(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      if (!A[i][k]) continue;
      for (std::size_t j = 0; j < c; ++j) C[i][j] ^= B[k][j];
    }
  }
  return C;
}

Mat2 add(const Mat2& A, const Mat2& B) {
  Mat2 C = A;
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = 0; j < A[i].size(); ++j) C[i][j] ^= B[i][j];
  }
  return C;
}

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> rref(Mat2& A) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && !A[piv][c]) ++piv;
    if (piv == rows) continue;
    std::swap(A[r], A[piv]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && A[i][c]) {
        for (std::size_t j = 0; j < cols; ++j) A[i][j] ^= A[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Mat2 A) { return rref(A).size(); }

// Columns of A forming a basis of its column space.
Mat2 column_basis(const Mat2& A) {
  Mat2 R = A;
  const auto piv = rref(R);
  Mat2 B = zeros(A.size(), piv.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = 0; j < piv.size(); ++j) B[i][j] = A[i][piv[j]];
  }
  return B;
}

// Solves B X = Y for X, B of full column rank and Y in its column space.
Mat2 solve(const Mat2& B, const Mat2& Y) {
  const std::size_t n = B.size(), k = B.empty() ? 0 : B[0].size(), m = Y.empty() ? 0 : Y[0].size();
  Mat2 aug = zeros(n, k + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = B[i][j];
    for (std::size_t j = 0; j < m; ++j) aug[i][k + j] = Y[i][j];
  }
  rref(aug);
  Mat2 X = zeros(k, m);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m; ++j) X[i][j] = aug[i][k + j];
  }
  return X;
}

std::vector<Mat2> restrict_to(const std::vector<Mat2>& action, const Mat2& B) {
  std::vector<Mat2> out;
  for (const auto& A : action) out.push_back(solve(B, mul(A, B)));
  return out;
}

}  // namespace

std::vector<Mat2> to_gf2(const RPModule& M) {
  const Ring& R = *M.ring();
  std::vector<Mat2> out;
  for (const auto& A : M.action()) {
    Mat2 B = zeros(M.dim(), M.dim());
    for (std::size_t i = 0; i < M.dim(); ++i) {
      for (std::size_t j = 0; j < M.dim(); ++j) B[i][j] = static_cast<int>(R.residue_value(A(i, j)) & 1u);
    }
    out.push_back(std::move(B));
  }
  return out;
}

std::vector<std::size_t> jordan_type(const Mat2& A) {
  const std::size_t d = A.size();
  const Mat2 N = add(A, eye(d));
  std::vector<std::size_t> ranks{d};
  Mat2 P = eye(d);
  while (ranks.back() > 0) {
    P = mul(P, N);
    const std::size_t r = rank(P);
    if (r == ranks.back()) throw InvalidArgument("jordan_type: A - I is not nilpotent");
    ranks.push_back(r);
  }
  // at_least[i] = number of blocks of size >= i + 1.
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i + 1 < ranks.size(); ++i) {
    const std::size_t at_least = ranks[i] - ranks[i + 1];
    const std::size_t longer = i + 2 < ranks.size() ? ranks[i + 1] - ranks[i + 2] : 0;
    for (std::size_t c = 0; c < at_least - longer; ++c) sizes.push_back(i + 1);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

std::vector<Mat2> commutant_basis(const std::vector<Mat2>& action) {
  const std::size_t d = action.empty() ? 0 : action[0].size();
  const std::size_t unknowns = d * d;
  // One equation per entry (r, c) of X A - A X; unknown X[a][b] sits in column a*d + b.
  Mat2 eqs;
  for (const auto& A : action) {
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        std::vector<int> row(unknowns, 0);
        for (std::size_t b = 0; b < d; ++b) row[r * d + b] ^= A[b][c];
        for (std::size_t a = 0; a < d; ++a) row[a * d + c] ^= A[r][a];
        eqs.push_back(std::move(row));
      }
    }
  }
  std::vector<std::size_t> pivots = eqs.empty() ? std::vector<std::size_t>{} : rref(eqs);
  std::vector<bool> is_pivot(unknowns, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Mat2> basis;
  for (std::size_t f = 0; f < unknowns; ++f) {
    if (is_pivot[f]) continue;
    std::vector<int> x(unknowns, 0);
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = eqs[i][f];
    Mat2 X = zeros(d, d);
    for (std::size_t u = 0; u < unknowns; ++u) X[u / d][u % d] = x[u];
    basis.push_back(std::move(X));
  }
  return basis;
}

std::vector<std::vector<Mat2>> split_by_idempotents(const std::vector<Mat2>& action, std::size_t max_dim) {
  const std::size_t d = action.empty() ? 0 : action[0].size();
  if (d == 0) return {};
  const auto basis = commutant_basis(action);
  const Mat2 I = eye(d);
  const Mat2 Z = zeros(d, d);
  // Gray code walk over all 2^dim elements of the commutant.
  Mat2 X = Z;
  const std::uint64_t total = std::uint64_t{1} << std::min(basis.size(), max_dim);
  for (std::uint64_t step = 1; step < total; ++step) {
    X = add(X, basis[static_cast<std::size_t>(std::countr_zero(step))]);
    if (X == I || mul(X, X) != X) continue;
    auto first = split_by_idempotents(restrict_to(action, column_basis(X)), max_dim);
    auto second = split_by_idempotents(restrict_to(action, column_basis(add(I, X))), max_dim);
    first.insert(first.end(), second.begin(), second.end());
    return first;
  }
  if (basis.size() > max_dim) {
    throw InvalidArgument("split_by_idempotents: no idempotent among the first 2^" + std::to_string(max_dim) +
                          " commutant elements of dimension " + std::to_string(basis.size()));
  }
  return {action};
}

}  // namespace dadelab::oracle
