#include "svar/matrix.hpp"

#include <sstream>

#include "svar/error.hpp"
#include "svar/kernels.hpp"

namespace svar {

Matrix Matrix::identity(std::size_t n) {
  Matrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix M(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw UsageError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) M(r, c) = rows[r][c];
  }
  return M;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix M(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) M.set_column(c, cols[c]);
  return M;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, std::span<const Elem> v) {
  if (v.size() != rows_) throw UsageError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const {
  for (Elem e : a_)
    if (e) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<std::size_t> rref_in_place(const PrimeField& F, Matrix& A, std::size_t pivot_cols) {
  const std::uint32_t p = F.p();
  const std::size_t m = A.rows(), n = A.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && A(piv, c) == 0) ++piv;
    if (piv == m) continue;
    if (piv != r)
      for (std::size_t j = c; j < n; ++j) std::swap(A(piv, j), A(r, j));
    kernels::scale(A.row(r) + c, F.inv(A(r, c)), n - c, p);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      Elem f = A(i, c);
      if (f) kernels::axpy(A.row(i) + c, A.row(r) + c, p - f, n - c, p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RrefResult rref(const PrimeField& F, Matrix A) {
  auto piv = rref_in_place(F, A, A.cols());
  return {std::move(A), std::move(piv)};
}

std::size_t rank(const PrimeField& F, const Matrix& A) {
  Matrix B = A;
  return rref_in_place(F, B, B.cols()).size();
}

Matrix kernel_basis(const PrimeField& F, const Matrix& A, std::vector<std::size_t>* free_out) {
  auto [R, piv] = rref(F, A);
  const std::size_t n = A.cols();
  std::vector<char> is_piv(n, 0);
  for (auto c : piv) is_piv[c] = 1;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_piv[c]) free.push_back(c);
  Matrix K(n, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    K(free[k], k) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) K(piv[i], k) = F.neg(R(i, free[k]));
  }
  if (free_out) *free_out = std::move(free);
  return K;
}

std::optional<Matrix> solve_many(const PrimeField& F, const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows()) throw UsageError("solve: dimension mismatch");
  const std::size_t n = A.cols(), k = B.cols();
  Matrix Aug = hcat(A, B);
  auto piv = rref_in_place(F, Aug, n);
  for (std::size_t r = piv.size(); r < Aug.rows(); ++r)
    for (std::size_t j = 0; j < k; ++j)
      if (Aug(r, n + j)) return std::nullopt;
  Matrix X(n, k);
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) X(piv[i], j) = Aug(i, n + j);
  return X;
}

std::optional<Vec> solve(const PrimeField& F, const Matrix& A, std::span<const Elem> b) {
  if (A.rows() != b.size()) throw UsageError("solve: right-hand side has wrong length");
  Matrix B(b.size(), 1);
  B.set_column(0, b);
  auto X = solve_many(F, A, B);
  if (!X) return std::nullopt;
  return X->column(0);
}

LinearSolver::LinearSolver(const PrimeField& F, const Matrix& A) : F_(F), m_(A.rows()), n_(A.cols()) {
  Matrix Aug = hcat(A, Matrix::identity(m_));
  pivots_ = rref_in_place(F, Aug, n_);
  transform_ = Matrix(m_, m_);
  for (std::size_t r = 0; r < m_; ++r)
    for (std::size_t c = 0; c < m_; ++c) transform_(r, c) = Aug(r, n_ + c);
}

std::optional<Vec> LinearSolver::solve(std::span<const Elem> b) const {
  if (b.size() != m_) throw UsageError("LinearSolver: right-hand side has wrong length");
  Vec y = mul_vec(F_, transform_, b);
  for (std::size_t r = pivots_.size(); r < m_; ++r)
    if (y[r]) return std::nullopt;
  Vec x(n_, 0);
  for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = y[i];
  return x;
}

Matrix mul(const PrimeField& F, const Matrix& A, const Matrix& B) {
  if (A.cols() != B.rows()) throw UsageError("mul: inner dimensions differ");
  Matrix C(A.rows(), B.cols());
  const std::uint32_t p = F.p();
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k) {
      Elem a = A(i, k);
      if (a) kernels::axpy(C.row(i), B.row(k), a, B.cols(), p);
    }
  return C;
}

Vec mul_vec(const PrimeField& F, const Matrix& A, std::span<const Elem> x) {
  if (A.cols() != x.size()) throw UsageError("mul_vec: dimension mismatch");
  Vec y(A.rows(), 0);
  const std::uint64_t p = F.p();
  for (std::size_t i = 0; i < A.rows(); ++i) {
    const Elem* r = A.row(i);
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      acc += static_cast<std::uint64_t>(r[k]) * x[k];
      if ((k & 7) == 7) acc %= p;
    }
    y[i] = static_cast<Elem>(acc % p);
  }
  return y;
}

Matrix add(const PrimeField& F, const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) throw UsageError("add: shape mismatch");
  Matrix C = A;
  for (std::size_t i = 0; i < A.rows(); ++i) kernels::axpy(C.row(i), B.row(i), 1, A.cols(), F.p());
  return C;
}

Matrix sub(const PrimeField& F, const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) throw UsageError("sub: shape mismatch");
  Matrix C = A;
  for (std::size_t i = 0; i < A.rows(); ++i) kernels::axpy(C.row(i), B.row(i), F.p() - 1, A.cols(), F.p());
  return C;
}

Matrix scaled(const PrimeField& F, const Matrix& A, Elem c) {
  Matrix C = A;
  if (c == 0) return Matrix(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) kernels::scale(C.row(i), c, A.cols(), F.p());
  return C;
}

Matrix transpose(const Matrix& A) {
  Matrix T(A.cols(), A.rows());
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t c = 0; c < A.cols(); ++c) T(c, r) = A(r, c);
  return T;
}

Matrix hcat(const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows()) throw UsageError("hcat: row counts differ");
  Matrix C(A.rows(), A.cols() + B.cols());
  for (std::size_t r = 0; r < A.rows(); ++r) {
    std::copy(A.row(r), A.row(r) + A.cols(), C.row(r));
    std::copy(B.row(r), B.row(r) + B.cols(), C.row(r) + A.cols());
  }
  return C;
}

Matrix vcat(const Matrix& A, const Matrix& B) {
  if (A.cols() != B.cols()) throw UsageError("vcat: column counts differ");
  Matrix C(A.rows() + B.rows(), A.cols());
  for (std::size_t r = 0; r < A.rows(); ++r) std::copy(A.row(r), A.row(r) + A.cols(), C.row(r));
  for (std::size_t r = 0; r < B.rows(); ++r) std::copy(B.row(r), B.row(r) + B.cols(), C.row(A.rows() + r));
  return C;
}

Matrix kron(const PrimeField& F, const Matrix& A, const Matrix& B) {
  Matrix C(A.rows() * B.rows(), A.cols() * B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      Elem a = A(i, j);
      if (!a) continue;
      for (std::size_t k = 0; k < B.rows(); ++k)
        for (std::size_t l = 0; l < B.cols(); ++l)
          C(i * B.rows() + k, j * B.cols() + l) = F.mul(a, B(k, l));
    }
  return C;
}

Matrix select_rows(const Matrix& A, std::span<const std::size_t> idx) {
  Matrix C(idx.size(), A.cols());
  for (std::size_t r = 0; r < idx.size(); ++r) std::copy(A.row(idx[r]), A.row(idx[r]) + A.cols(), C.row(r));
  return C;
}

Matrix select_columns(const Matrix& A, std::span<const std::size_t> idx) {
  Matrix C(A.rows(), idx.size());
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) C(r, c) = A(r, idx[c]);
  return C;
}

void axpy_vec(const PrimeField& F, Vec& dst, std::span<const Elem> src, Elem c) {
  if (dst.size() != src.size()) throw UsageError("axpy_vec: length mismatch");
  kernels::axpy(dst.data(), src.data(), c, dst.size(), F.p());
}

bool is_zero_vec(std::span<const Elem> v) {
  for (Elem e : v)
    if (e) return false;
  return true;
}

std::vector<std::size_t> independent_columns(const PrimeField& F, const Matrix& A) {
  return rref(F, A).pivots;
}

Matrix column_basis(const PrimeField& F, const Matrix& A) {
  auto idx = independent_columns(F, A);
  return select_columns(A, idx);
}

void set_block(Matrix& A, std::size_t r0, std::size_t c0, const Matrix& B) {
  if (r0 + B.rows() > A.rows() || c0 + B.cols() > A.cols()) throw UsageError("set_block: block out of range");
  for (std::size_t r = 0; r < B.rows(); ++r)
    for (std::size_t c = 0; c < B.cols(); ++c) A(r0 + r, c0 + c) = B(r, c);
}

Matrix block(const Matrix& A, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
  if (r0 + rows > A.rows() || c0 + cols > A.cols()) throw UsageError("block: out of range");
  Matrix B(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) B(r, c) = A(r0 + r, c0 + c);
  return B;
}

Vec SpanBasis::reduce(std::span<const Elem> v) const {
  if (v.size() != n_) throw UsageError("span: vector has the wrong length");
  Vec r(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem c = r[pivots_[i]];
    if (c) kernels::axpy(r.data(), rows_[i].data(), F_.neg(c), n_, F_.p());
  }
  return r;
}

bool SpanBasis::contains(std::span<const Elem> v) const { return is_zero_vec(reduce(v)); }

bool SpanBasis::add(std::span<const Elem> v) {
  Vec r = reduce(v);
  std::size_t piv = 0;
  while (piv < n_ && r[piv] == 0) ++piv;
  if (piv == n_) return false;
  kernels::scale(r.data(), F_.inv(r[piv]), n_, F_.p());
  for (auto& row : rows_) {
    const Elem c = row[piv];
    if (c) kernels::axpy(row.data(), r.data(), F_.neg(c), n_, F_.p());
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

}  // namespace svar
