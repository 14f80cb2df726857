#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "svar/field.hpp"

namespace svar {

using Vec = std::vector<Elem>;

/// Dense row-major matrix of residues. The modulus lives with the caller.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t cols = 0);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Elem* row(std::size_t r) { return a_.data() + r * cols_; }
  const Elem* row(std::size_t r) const { return a_.data() + r * cols_; }
  std::span<const Elem> row_span(std::size_t r) const { return {row(r), cols_}; }

  Vec column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Elem> v);

  const std::vector<Elem>& data() const { return a_; }
  bool is_zero() const;

  bool operator==(const Matrix& o) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> a_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivot choice is the first nonzero entry in the
/// leftmost available column, so results are reproducible bit-for-bit.
RrefResult rref(const PrimeField& F, Matrix A);

/// In-place reduction that only looks for pivots among the first
/// `pivot_cols` columns; row operations act on the full width.
std::vector<std::size_t> rref_in_place(const PrimeField& F, Matrix& A, std::size_t pivot_cols);

std::size_t rank(const PrimeField& F, const Matrix& A);

/// Columns form a basis of {v : A v = 0}. Each basis vector has a 1 in one
/// free coordinate and zeros in all other free coordinates.
Matrix kernel_basis(const PrimeField& F, const Matrix& A, std::vector<std::size_t>* free_out = nullptr);

/// Some x with A x = b (zeros in non-pivot coordinates), or nullopt when the
/// system is inconsistent. Throws UsageError on dimension mismatch.
std::optional<Vec> solve(const PrimeField& F, const Matrix& A, std::span<const Elem> b);

/// Column-wise solve of A X = B; nullopt if any column is inconsistent.
std::optional<Matrix> solve_many(const PrimeField& F, const Matrix& A, const Matrix& B);

/// Precomputed elimination for repeated solves against one matrix.
class LinearSolver {
 public:
  LinearSolver() = default;
  LinearSolver(const PrimeField& F, const Matrix& A);

  std::size_t rank() const { return pivots_.size(); }
  std::optional<Vec> solve(std::span<const Elem> b) const;

 private:
  PrimeField F_{2};
  std::size_t m_ = 0, n_ = 0;
  Matrix transform_;  // E with E*A = rref(A)
  std::vector<std::size_t> pivots_;
};

Matrix mul(const PrimeField& F, const Matrix& A, const Matrix& B);
Vec mul_vec(const PrimeField& F, const Matrix& A, std::span<const Elem> x);
Matrix add(const PrimeField& F, const Matrix& A, const Matrix& B);
Matrix sub(const PrimeField& F, const Matrix& A, const Matrix& B);
Matrix scaled(const PrimeField& F, const Matrix& A, Elem c);
Matrix transpose(const Matrix& A);
Matrix hcat(const Matrix& A, const Matrix& B);
Matrix vcat(const Matrix& A, const Matrix& B);
Matrix kron(const PrimeField& F, const Matrix& A, const Matrix& B);
/// Copies B into A with its top-left corner at (r0, c0).
void set_block(Matrix& A, std::size_t r0, std::size_t c0, const Matrix& B);
Matrix block(const Matrix& A, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols);
Matrix select_rows(const Matrix& A, std::span<const std::size_t> idx);
Matrix select_columns(const Matrix& A, std::span<const std::size_t> idx);
void axpy_vec(const PrimeField& F, Vec& dst, std::span<const Elem> src, Elem c);
bool is_zero_vec(std::span<const Elem> v);

/// Indices of a maximal set of linearly independent columns (greedy, left to right).
std::vector<std::size_t> independent_columns(const PrimeField& F, const Matrix& A);

/// Basis (as columns) of the column space of A, chosen among A's columns.
Matrix column_basis(const PrimeField& F, const Matrix& A);

/// Incrementally grown subspace of F_p^n kept in reduced echelon form.
class SpanBasis {
 public:
  SpanBasis(const PrimeField& F, std::size_t n) : F_(F), n_(n) {}
  /// Adds v; returns false when v already lies in the span.
  bool add(std::span<const Elem> v);
  bool contains(std::span<const Elem> v) const;
  std::size_t size() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  /// Remainder of v after reduction against the basis.
  Vec reduce(std::span<const Elem> v) const;

 private:
  PrimeField F_;
  std::size_t n_;
  std::vector<Vec> rows_;  // monic at pivots_[i]
  std::vector<std::size_t> pivots_;
};

}  // namespace svar
