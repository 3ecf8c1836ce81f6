#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "dadelab/coeffring.hpp"

namespace dadelab {

/// Dense row-major matrix of ring elements. The ring is supplied to every
/// arithmetic routine instead of being stored.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

namespace linalg {

Matrix identity(const Ring& R, std::size_t n);
Matrix mul(const Ring& R, const Matrix& A, const Matrix& B);
Matrix add(const Ring& R, const Matrix& A, const Matrix& B);
Matrix sub(const Ring& R, const Matrix& A, const Matrix& B);
Matrix scale(const Ring& R, const Element& s, const Matrix& A);
Matrix transpose(const Matrix& A);
/// Kronecker product; row index of the result is i * B.rows() + k.
Matrix kron(const Ring& R, const Matrix& A, const Matrix& B);
Matrix block_diag(const Matrix& A, const Matrix& B);
Matrix columns(const Matrix& A, std::span<const std::size_t> idx);
Matrix column_range(const Matrix& A, std::size_t first, std::size_t count);
Matrix row_range(const Matrix& A, std::size_t first, std::size_t count);
Matrix hconcat(const Matrix& A, const Matrix& B);
Matrix vconcat(const Matrix& A, const Matrix& B);
Matrix pow(const Ring& R, const Matrix& A, std::uint64_t e);

bool is_zero(const Ring& R, const Matrix& A);
bool is_identity(const Ring& R, const Matrix& A);

/// Entrywise residue map into the residue field GF(p) of R.
Matrix residue(const Ring& R, const Matrix& A);
/// Entrywise lift of a residue-field matrix to R using representatives in [0, p).
Matrix lift(const Ring& R, const Matrix& Abar);

/// Inverse by unit-pivot Gauss-Jordan; throws NonUnit when A is singular mod
/// the maximal ideal.
Matrix inverse(const Ring& R, const Matrix& A);
bool is_invertible(const Ring& R, const Matrix& A);
/// Determinant by elimination that divides only by pivots of minimal valuation.
Element determinant(const Ring& R, const Matrix& A);

/// Incremental echelon basis over the residue field, for greedy
/// independence tests.
class ResidueEchelon {
 public:
  ResidueEchelon(std::uint64_t p, std::size_t length);
  /// Reduces v (residues) against the basis; inserts and returns true when
  /// independent.
  bool insert(std::vector<std::uint64_t> v);
  bool insert_column(const Ring& R, const Matrix& A, std::size_t col);
  std::size_t rank() const { return rows_.size(); }

 private:
  std::uint64_t p_;
  std::size_t length_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Greedy left-to-right choice of columns whose residues are linearly
/// independent over the residue field.
std::vector<std::size_t> independent_columns(const Ring& R, const Matrix& A);
/// Rank of the residue of A.
std::size_t residue_rank(const Ring& R, const Matrix& A);

/// Generators of the free part of {x : A x = 0}, as columns. Kernel vectors
/// that exist only because of truncation (multiples of high powers of the
/// uniformizer) are omitted.
Matrix kernel(const Ring& R, const Matrix& A);
/// Some x with A x = b (b a single column), or nullopt.
std::optional<Matrix> solve(const Ring& R, const Matrix& A, const Matrix& b);

/// Kernel of a matrix whose residue has full row rank. The returned basis K
/// has an identity block on the rows listed in `free_rows`, so coordinates
/// of a kernel vector are read off those rows.
struct SurjectionKernel {
  Matrix basis;
  std::vector<std::size_t> free_rows;
};
SurjectionKernel surjection_kernel(const Ring& R, const Matrix& S);

/// Coordinates of the columns of X in the basis K returned by
/// surjection_kernel (reads the free rows).
Matrix kernel_coordinates(const SurjectionKernel& K, const Matrix& X);

Matrix random_invertible(const Ring& R, std::size_t n, std::mt19937_64& rng);

}  // namespace linalg
}  // namespace dadelab
