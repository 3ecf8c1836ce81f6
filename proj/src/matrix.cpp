#include "dadelab/matrix.hpp"

#include <utility>

namespace dadelab::linalg {

namespace {

void check_mul_shapes(const Matrix& A, const Matrix& B) {
  if (A.cols() != B.rows()) throw InvalidArgument("matrix product: shape mismatch");
}

void check_same_shape(const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) throw InvalidArgument("matrix: shape mismatch");
}

// row_dst[from..) -= f * row_src[from..)
void subtract_row_multiple(const Ring& R, std::span<Element> dst, std::span<const Element> src, const Element& f,
                           std::size_t from) {
  const Element nf = R.neg(f);
  for (std::size_t j = from; j < dst.size(); ++j) {
    if (R.is_zero(src[j])) continue;
    dst[j] = R.mul_add(dst[j], nf, src[j]);
  }
}

// Quotient a / pivot for entries known to be divisible by the pivot.
class PivotDivider {
 public:
  PivotDivider(const Ring& R, const Element& pivot) : R_(R), pivot_(pivot), unit_(R.is_unit(pivot)) {
    if (unit_) inv_ = R.inverse(pivot);
  }
  Element operator()(const Element& a) const { return unit_ ? R_.mul(a, inv_) : R_.divide(a, pivot_); }

 private:
  const Ring& R_;
  Element pivot_;
  bool unit_;
  Element inv_;
};

struct Reduction {
  Matrix C;
  Matrix V;
  Matrix rhs;
  std::vector<Element> pivots;
  std::size_t rank = 0;
};

// Diagonalizes C with row and column operations, pivoting on entries of
// minimal valuation. Column operations are accumulated in V; row operations
// are applied to rhs when it is non-empty.
Reduction smith_reduce(const Ring& R, Matrix C, Matrix rhs) {
  const std::size_t m = C.rows();
  const std::size_t n = C.cols();
  Reduction out;
  out.V = identity(R, n);
  std::size_t t = 0;
  while (t < m && t < n) {
    std::size_t pi = m, pj = n;
    // Units first; valuations only when no unit remains.
    for (std::size_t i = t; i < m && pi == m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (R.is_unit(C(i, j))) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == m) {
      int best = R.precision();
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (R.is_zero(C(i, j))) continue;
          int v = R.valuation(C(i, j));
          if (v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == m) break;
    }
    if (pi != t) {
      for (std::size_t j = 0; j < n; ++j) std::swap(C(pi, j), C(t, j));
      if (!rhs.empty()) {
        for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(pi, j), rhs(t, j));
      }
    }
    if (pj != t) {
      for (std::size_t i = 0; i < m; ++i) std::swap(C(i, pj), C(i, t));
      for (std::size_t i = 0; i < n; ++i) std::swap(out.V(i, pj), out.V(i, t));
    }
    const Element pivot = C(t, t);
    PivotDivider div(R, pivot);
    for (std::size_t i = t + 1; i < m; ++i) {
      if (R.is_zero(C(i, t))) continue;
      Element f = div(C(i, t));
      subtract_row_multiple(R, C.row(i), C.row(t), f, t);
      if (!rhs.empty()) subtract_row_multiple(R, rhs.row(i), rhs.row(t), f, 0);
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (R.is_zero(C(t, j))) continue;
      Element f = div(C(t, j));
      C(t, j) = R.zero();
      const Element nf = R.neg(f);
      for (std::size_t i = 0; i < n; ++i) {
        if (R.is_zero(out.V(i, t))) continue;
        out.V(i, j) = R.mul_add(out.V(i, j), nf, out.V(i, t));
      }
    }
    out.pivots.push_back(pivot);
    ++t;
  }
  out.rank = t;
  out.C = std::move(C);
  out.rhs = std::move(rhs);
  return out;
}

}  // namespace

Matrix identity(const Ring& R, std::size_t n) {
  Matrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = R.one();
  return I;
}

Matrix mul(const Ring& R, const Matrix& A, const Matrix& B) {
  check_mul_shapes(A, B);
  const std::size_t m = A.rows(), l = A.cols(), n = B.cols();
  Matrix C(m, n);
  if (R.degree() == 1 && R.modulus() < (std::uint64_t{1} << 32)) {
    // Lazy reduction: every product is reduced below 2^32, so 2^31 terms fit.
    const std::uint64_t q = R.modulus();
    std::vector<std::uint64_t> acc(n);
    for (std::size_t i = 0; i < m; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < l; ++k) {
        const std::uint64_t a = A(i, k).c[0];
        if (a == 0) continue;
        auto brow = B.row(k);
        for (std::size_t j = 0; j < n; ++j) acc[j] += (a * brow[j].c[0]) % q;
      }
      for (std::size_t j = 0; j < n; ++j) C(i, j).c[0] = acc[j] % q;
    }
    return C;
  }
  for (std::size_t i = 0; i < m; ++i) {
    auto crow = C.row(i);
    for (std::size_t k = 0; k < l; ++k) {
      const Element& a = A(i, k);
      if (R.is_zero(a)) continue;
      auto brow = B.row(k);
      for (std::size_t j = 0; j < n; ++j) {
        if (R.is_zero(brow[j])) continue;
        crow[j] = R.mul_add(crow[j], a, brow[j]);
      }
    }
  }
  return C;
}

Matrix add(const Ring& R, const Matrix& A, const Matrix& B) {
  check_same_shape(A, B);
  Matrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = R.add(A(i, j), B(i, j));
  }
  return C;
}

Matrix sub(const Ring& R, const Matrix& A, const Matrix& B) {
  check_same_shape(A, B);
  Matrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = R.sub(A(i, j), B(i, j));
  }
  return C;
}

Matrix scale(const Ring& R, const Element& s, const Matrix& A) {
  Matrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = R.mul(s, A(i, j));
  }
  return C;
}

Matrix transpose(const Matrix& A) {
  Matrix T(A.cols(), A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) T(j, i) = A(i, j);
  }
  return T;
}

Matrix kron(const Ring& R, const Matrix& A, const Matrix& B) {
  Matrix K(A.rows() * B.rows(), A.cols() * B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      const Element& a = A(i, j);
      if (R.is_zero(a)) continue;
      for (std::size_t k = 0; k < B.rows(); ++k) {
        for (std::size_t l = 0; l < B.cols(); ++l) {
          K(i * B.rows() + k, j * B.cols() + l) = R.mul(a, B(k, l));
        }
      }
    }
  }
  return K;
}

Matrix block_diag(const Matrix& A, const Matrix& B) {
  Matrix D(A.rows() + B.rows(), A.cols() + B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) D(i, j) = A(i, j);
  }
  for (std::size_t i = 0; i < B.rows(); ++i) {
    for (std::size_t j = 0; j < B.cols(); ++j) D(A.rows() + i, A.cols() + j) = B(i, j);
  }
  return D;
}

Matrix columns(const Matrix& A, std::span<const std::size_t> idx) {
  Matrix C(A.rows(), idx.size());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) C(i, j) = A(i, idx[j]);
  }
  return C;
}

Matrix column_range(const Matrix& A, std::size_t first, std::size_t count) {
  Matrix C(A.rows(), count);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < count; ++j) C(i, j) = A(i, first + j);
  }
  return C;
}

Matrix row_range(const Matrix& A, std::size_t first, std::size_t count) {
  Matrix C(count, A.cols());
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = A(first + i, j);
  }
  return C;
}

Matrix hconcat(const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows()) throw InvalidArgument("hconcat: row mismatch");
  Matrix C(A.rows(), A.cols() + B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = A(i, j);
    for (std::size_t j = 0; j < B.cols(); ++j) C(i, A.cols() + j) = B(i, j);
  }
  return C;
}

Matrix vconcat(const Matrix& A, const Matrix& B) {
  if (A.cols() != B.cols()) throw InvalidArgument("vconcat: column mismatch");
  Matrix C(A.rows() + B.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = A(i, j);
  }
  for (std::size_t i = 0; i < B.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) C(A.rows() + i, j) = B(i, j);
  }
  return C;
}

Matrix pow(const Ring& R, const Matrix& A, std::uint64_t e) {
  Matrix result = identity(R, A.rows());
  Matrix base = A;
  while (e > 0) {
    if (e & 1) result = mul(R, result, base);
    e >>= 1;
    if (e > 0) base = mul(R, base, base);
  }
  return result;
}

bool is_zero(const Ring& R, const Matrix& A) {
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (const auto& x : A.row(i)) {
      if (!R.is_zero(x)) return false;
    }
  }
  return true;
}

bool is_identity(const Ring& R, const Matrix& A) {
  if (A.rows() != A.cols()) return false;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (A(i, j) != (i == j ? R.one() : R.zero())) return false;
    }
  }
  return true;
}

Matrix residue(const Ring& R, const Matrix& A) {
  Matrix B(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) B(i, j).c[0] = R.residue_value(A(i, j));
  }
  return B;
}

Matrix lift(const Ring& R, const Matrix& Abar) {
  Matrix B(Abar.rows(), Abar.cols());
  for (std::size_t i = 0; i < Abar.rows(); ++i) {
    for (std::size_t j = 0; j < Abar.cols(); ++j) B(i, j) = R.from_int(static_cast<std::int64_t>(Abar(i, j).c[0]));
  }
  return B;
}

Matrix inverse(const Ring& R, const Matrix& A) {
  if (A.rows() != A.cols()) throw InvalidArgument("inverse: matrix not square");
  const std::size_t n = A.rows();
  Matrix M = A;
  Matrix I = identity(R, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t r = c; r < n; ++r) {
      if (R.is_unit(M(r, c))) {
        piv = r;
        break;
      }
    }
    if (piv == n) throw NonUnit("inverse: matrix is singular modulo the maximal ideal");
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(M(piv, j), M(c, j));
        std::swap(I(piv, j), I(c, j));
      }
    }
    const Element inv = R.inverse(M(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      M(c, j) = R.mul(M(c, j), inv);
      I(c, j) = R.mul(I(c, j), inv);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || R.is_zero(M(r, c))) continue;
      const Element f = M(r, c);
      subtract_row_multiple(R, M.row(r), M.row(c), f, 0);
      subtract_row_multiple(R, I.row(r), I.row(c), f, 0);
    }
  }
  return I;
}

bool is_invertible(const Ring& R, const Matrix& A) {
  return A.rows() == A.cols() && residue_rank(R, A) == A.rows();
}

Element determinant(const Ring& R, const Matrix& A) {
  if (A.rows() != A.cols()) throw InvalidArgument("determinant: matrix not square");
  const std::size_t n = A.rows();
  Matrix M = A;
  Element det = R.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    int best = R.precision();
    for (std::size_t r = c; r < n; ++r) {
      if (R.is_unit(M(r, c))) {
        piv = r;
        best = 0;
        break;
      }
      if (R.is_zero(M(r, c))) continue;
      int v = R.valuation(M(r, c));
      if (v < best) {
        best = v;
        piv = r;
      }
    }
    if (piv == n) return R.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(M(piv, j), M(c, j));
      det = R.neg(det);
    }
    PivotDivider div(R, M(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      if (R.is_zero(M(r, c))) continue;
      subtract_row_multiple(R, M.row(r), M.row(c), div(M(r, c)), c);
    }
    det = R.mul(det, M(c, c));
  }
  return det;
}

ResidueEchelon::ResidueEchelon(std::uint64_t p, std::size_t length) : p_(p), length_(length) {}

bool ResidueEchelon::insert(std::vector<std::uint64_t> v) {
  for (std::size_t b = 0; b < rows_.size(); ++b) {
    std::uint64_t f = v[pivots_[b]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < length_; ++j) v[j] = (v[j] + (p_ - f) * rows_[b][j]) % p_;
  }
  std::size_t piv = length_;
  for (std::size_t j = 0; j < length_; ++j) {
    if (v[j] != 0) {
      piv = j;
      break;
    }
  }
  if (piv == length_) return false;
  std::uint64_t inv = 1;
  while ((inv * v[piv]) % p_ != 1) ++inv;
  for (auto& x : v) x = (x * inv) % p_;
  // Keep existing rows reduced at the new pivot.
  for (auto& row : rows_) {
    std::uint64_t f = row[piv];
    if (f == 0) continue;
    for (std::size_t j = 0; j < length_; ++j) row[j] = (row[j] + (p_ - f) * v[j]) % p_;
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool ResidueEchelon::insert_column(const Ring& R, const Matrix& A, std::size_t col) {
  std::vector<std::uint64_t> v(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) v[i] = R.residue_value(A(i, col));
  return insert(std::move(v));
}

std::vector<std::size_t> independent_columns(const Ring& R, const Matrix& A) {
  ResidueEchelon ech(static_cast<std::uint64_t>(R.p()), A.rows());
  std::vector<std::size_t> out;
  std::vector<std::uint64_t> v(A.rows());
  for (std::size_t j = 0; j < A.cols(); ++j) {
    if (ech.rank() == A.rows()) break;
    for (std::size_t i = 0; i < A.rows(); ++i) v[i] = R.residue_value(A(i, j));
    if (ech.insert(v)) out.push_back(j);
  }
  return out;
}

std::size_t residue_rank(const Ring& R, const Matrix& A) { return independent_columns(R, A).size(); }

Matrix kernel(const Ring& R, const Matrix& A) {
  Reduction red = smith_reduce(R, A, Matrix());
  return column_range(red.V, red.rank, A.cols() - red.rank);
}

std::optional<Matrix> solve(const Ring& R, const Matrix& A, const Matrix& b) {
  if (b.rows() != A.rows() || b.cols() != 1) throw InvalidArgument("solve: right-hand side shape");
  Reduction red = smith_reduce(R, A, b);
  for (std::size_t i = red.rank; i < A.rows(); ++i) {
    if (!R.is_zero(red.rhs(i, 0))) return std::nullopt;
  }
  Matrix y(A.cols(), 1);
  for (std::size_t t = 0; t < red.rank; ++t) {
    const Element& c = red.rhs(t, 0);
    if (R.is_zero(c)) continue;
    if (R.valuation(c) < R.valuation(red.pivots[t])) return std::nullopt;
    y(t, 0) = R.divide(c, red.pivots[t]);
  }
  return mul(R, red.V, y);
}

SurjectionKernel surjection_kernel(const Ring& R, const Matrix& S) {
  const std::size_t m = S.rows();
  const std::size_t n = S.cols();
  Matrix C = S;
  std::vector<std::size_t> pivot_col(m, n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < m; ++r) {
    std::size_t pc = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_pivot[j] && R.is_unit(C(r, j))) {
        pc = j;
        break;
      }
    }
    if (pc == n) throw InvalidArgument("surjection_kernel: matrix is not surjective modulo the maximal ideal");
    const Element inv = R.inverse(C(r, pc));
    for (std::size_t j = 0; j < n; ++j) C(r, j) = R.mul(C(r, j), inv);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || R.is_zero(C(i, pc))) continue;
      subtract_row_multiple(R, C.row(i), C.row(r), C(i, pc), 0);
    }
    pivot_col[r] = pc;
    is_pivot[pc] = true;
  }
  SurjectionKernel out;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) out.free_rows.push_back(j);
  }
  out.basis = Matrix(n, out.free_rows.size());
  for (std::size_t f = 0; f < out.free_rows.size(); ++f) {
    const std::size_t col = out.free_rows[f];
    out.basis(col, f) = R.one();
    for (std::size_t r = 0; r < m; ++r) out.basis(pivot_col[r], f) = R.neg(C(r, col));
  }
  return out;
}

Matrix kernel_coordinates(const SurjectionKernel& K, const Matrix& X) {
  Matrix out(K.free_rows.size(), X.cols());
  for (std::size_t f = 0; f < K.free_rows.size(); ++f) {
    for (std::size_t j = 0; j < X.cols(); ++j) out(f, j) = X(K.free_rows[f], j);
  }
  return out;
}

Matrix random_invertible(const Ring& R, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, R.modulus() - 1);
  for (;;) {
    Matrix A(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (int d = 0; d < R.degree(); ++d) A(i, j).c[d] = dist(rng);
      }
    }
    if (is_invertible(R, A)) return A;
  }
}

}  // namespace dadelab::linalg
