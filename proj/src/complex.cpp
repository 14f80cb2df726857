#include "svar/complex.hpp"
#include "svar/error.hpp"

namespace svar {

BoundedComplex::BoundedComplex(AlgebraPtr A, int lo, std::vector<Representation> terms, std::vector<Matrix> diffs)
    : A_(std::move(A)), lo_(lo), terms_(std::move(terms)), diffs_(std::move(diffs)), zero_(zero_module(A_)) {
  const std::size_t want = terms_.empty() ? 0 : terms_.size() - 1;
  if (diffs_.size() != want) throw UsageError("complex: expected " + std::to_string(want) + " differentials");
  for (const auto& T : terms_)
    if (T.algebra() != A_) throw UsageError("complex: term over a different algebra");
  const auto& F = A_->field();
  for (std::size_t j = 0; j < diffs_.size(); ++j) {
    const int i = lo_ + static_cast<int>(j);
    if (!is_homomorphism(terms_[j], terms_[j + 1], diffs_[j]))
      throw UsageError("complex: d^" + std::to_string(i) + " is not a module homomorphism of the right shape");
    if (j + 1 < diffs_.size() && !mul(F, diffs_[j + 1], diffs_[j]).is_zero())
      throw NotAChainMap("complex: d^" + std::to_string(i + 1) + " d^" + std::to_string(i) + " != 0");
  }
}

BoundedComplex BoundedComplex::stalk(const Representation& M, int degree) {
  return BoundedComplex(M.algebra(), degree, {M}, {});
}

BoundedComplex BoundedComplex::zero(AlgebraPtr A) { return BoundedComplex(std::move(A), 0, {}, {}); }

const Representation& BoundedComplex::term(int i) const {
  if (i < lo_ || i > hi()) return zero_;
  return terms_[static_cast<std::size_t>(i - lo_)];
}

Matrix BoundedComplex::diff(int i) const {
  if (i < lo_ || i >= hi()) return Matrix(dim(i + 1), dim(i));
  return diffs_[static_cast<std::size_t>(i - lo_)];
}

std::size_t BoundedComplex::total_dim() const {
  std::size_t n = 0;
  for (const auto& T : terms_) n += T.dim();
  return n;
}

BoundedComplex BoundedComplex::trimmed() const {
  int a = lo_, b = hi();
  while (a <= b && dim(a) == 0) ++a;
  while (b >= a && dim(b) == 0) --b;
  if (a > b) return zero(A_);
  std::vector<Representation> t;
  std::vector<Matrix> d;
  for (int i = a; i <= b; ++i) {
    t.push_back(term(i));
    if (i < b) d.push_back(diff(i));
  }
  return BoundedComplex(A_, a, std::move(t), std::move(d));
}

bool BoundedComplex::operator==(const BoundedComplex& o) const {
  return A_ == o.A_ && lo_ == o.lo_ && terms_ == o.terms_ && diffs_ == o.diffs_;
}

Matrix ChainMap::at(int i, std::size_t rows, std::size_t cols) const {
  auto it = comps.find(i);
  if (it == comps.end()) return Matrix(rows, cols);
  if (it->second.rows() != rows || it->second.cols() != cols)
    throw UsageError("chain map: component " + std::to_string(i) + " has the wrong shape");
  return it->second;
}

bool is_chain_map(const BoundedComplex& X, const BoundedComplex& Y, const ChainMap& f) {
  const auto& F = X.algebra()->field();
  const int a = std::min(X.lo(), Y.lo()) - 1, b = std::max(X.hi(), Y.hi());
  for (int i = a; i <= b; ++i) {
    Matrix fi = f.at(i, Y.dim(i), X.dim(i));
    if (!is_homomorphism(X.term(i), Y.term(i), fi)) return false;
    Matrix fi1 = f.at(i + 1, Y.dim(i + 1), X.dim(i + 1));
    if (mul(F, Y.diff(i), fi) != mul(F, fi1, X.diff(i))) return false;
  }
  return true;
}

ChainMap identity_map(const BoundedComplex& X) {
  ChainMap f;
  for (int i = X.lo(); i <= X.hi(); ++i) f.comps[i] = Matrix::identity(X.dim(i));
  return f;
}

BoundedComplex shift(const BoundedComplex& X, int p) {
  if (X.empty()) return X;
  const auto& F = X.algebra()->field();
  std::vector<Representation> t;
  std::vector<Matrix> d;
  for (int i = X.lo(); i <= X.hi(); ++i) {
    t.push_back(X.term(i));
    if (i < X.hi()) d.push_back(scaled(F, X.diff(i), F.sign(p)));
  }
  return BoundedComplex(X.algebra(), X.lo() - p, std::move(t), std::move(d));
}

BoundedComplex cone(const BoundedComplex& X, const BoundedComplex& Y, const ChainMap& f) {
  if (X.algebra() != Y.algebra()) throw UsageError("cone: complexes over different algebras");
  if (!is_chain_map(X, Y, f)) throw NotAChainMap("cone: the given map is not a chain map");
  const auto& F = X.algebra()->field();
  if (X.empty() && Y.empty()) return BoundedComplex::zero(X.algebra());
  const int lo = X.empty() ? Y.lo() : (Y.empty() ? X.lo() - 1 : std::min(X.lo() - 1, Y.lo()));
  const int hi = X.empty() ? Y.hi() : (Y.empty() ? X.hi() - 1 : std::max(X.hi() - 1, Y.hi()));
  std::vector<Representation> t;
  std::vector<Matrix> d;
  for (int n = lo; n <= hi; ++n) t.push_back(direct_sum(X.term(n + 1), Y.term(n)));
  for (int n = lo; n < hi; ++n) {
    const std::size_t x0 = X.dim(n + 1), y0 = Y.dim(n), x1 = X.dim(n + 2), y1 = Y.dim(n + 1);
    Matrix D(x1 + y1, x0 + y0);
    set_block(D, 0, 0, scaled(F, X.diff(n + 1), F.neg(1)));
    set_block(D, x1, 0, f.at(n + 1, y1, x0));
    set_block(D, x1, x0, Y.diff(n));
    d.push_back(std::move(D));
  }
  return BoundedComplex(X.algebra(), lo, std::move(t), std::move(d));
}

BoundedComplex direct_sum(const BoundedComplex& X, const BoundedComplex& Y) {
  if (X.empty()) return Y;
  if (Y.empty()) return X;
  const int lo = std::min(X.lo(), Y.lo()), hi = std::max(X.hi(), Y.hi());
  std::vector<Representation> t;
  std::vector<Matrix> d;
  for (int n = lo; n <= hi; ++n) t.push_back(direct_sum(X.term(n), Y.term(n)));
  for (int n = lo; n < hi; ++n) {
    Matrix D(X.dim(n + 1) + Y.dim(n + 1), X.dim(n) + Y.dim(n));
    set_block(D, 0, 0, X.diff(n));
    set_block(D, X.dim(n + 1), X.dim(n), Y.diff(n));
    d.push_back(std::move(D));
  }
  return BoundedComplex(X.algebra(), lo, std::move(t), std::move(d));
}

Representation homology(const BoundedComplex& X, int i) {
  const auto& F = X.algebra()->field();
  const auto& T = X.term(i);
  auto Z = kernel_subspace(F, T.vertices(), X.term(i + 1).vertices(), X.diff(i));
  auto Zmod = submodule(T, Z);
  Matrix im = X.diff(i - 1);
  Matrix coords(Z.dim(), im.cols());
  for (std::size_t c = 0; c < im.cols(); ++c) coords.set_column(c, Z.coords(im.column(c)));
  auto B = make_subspace(F, Zmod.rep.vertices(), coords);
  return quotient(Zmod.rep, B).rep;
}

std::vector<std::size_t> homology_dims(const BoundedComplex& X, int lo, int hi) {
  std::vector<std::size_t> out;
  for (int i = lo; i <= hi; ++i) out.push_back(homology(X, i).dim());
  return out;
}

bool is_acyclic(const BoundedComplex& X) {
  for (int i = X.lo(); i <= X.hi(); ++i)
    if (homology(X, i).dim()) return false;
  return true;
}

BoundedComplex tensor(const BoundedComplex& B, const BoundedComplex& X) {
  const auto& A = X.algebra();
  const auto& info = B.algebra()->enveloping_info();
  if (!info || info->base != A) throw UsageError("tensor: first argument must be a complex of bimodules over the algebra");
  if (B.empty() || X.empty()) return BoundedComplex::zero(A);
  const auto& F = A->field();
  // products[p][q] = B^p ⊗ X^q
  std::map<std::pair<int, int>, TensorProduct> prod;
  for (int p = B.lo(); p <= B.hi(); ++p)
    for (int q = X.lo(); q <= X.hi(); ++q) prod.emplace(std::make_pair(p, q), tensor_over_algebra(B.term(p), X.term(q)));
  const int lo = B.lo() + X.lo(), hi = B.hi() + X.hi();
  std::vector<Representation> t;
  std::vector<std::map<int, std::size_t>> offsets;  // per total degree: p -> offset
  for (int m = lo; m <= hi; ++m) {
    Representation T = zero_module(A);
    std::map<int, std::size_t> off;
    for (int p = B.lo(); p <= B.hi(); ++p) {
      const int q = m - p;
      if (q < X.lo() || q > X.hi()) continue;
      off[p] = T.dim();
      T = direct_sum(T, prod.at({p, q}).rep);
    }
    t.push_back(std::move(T));
    offsets.push_back(std::move(off));
  }
  std::vector<Matrix> d;
  for (int m = lo; m < hi; ++m) {
    const auto& off0 = offsets[static_cast<std::size_t>(m - lo)];
    const auto& off1 = offsets[static_cast<std::size_t>(m + 1 - lo)];
    Matrix D(t[static_cast<std::size_t>(m + 1 - lo)].dim(), t[static_cast<std::size_t>(m - lo)].dim());
    for (const auto& [p, o0] : off0) {
      const int q = m - p;
      const auto& src = prod.at({p, q});
      if (auto it = off1.find(p + 1); it != off1.end()) {
        const auto& dst = prod.at({p + 1, q});
        set_block(D, it->second, o0, tensor_map(F, src, dst, B.diff(p), Matrix::identity(X.dim(q))));
      }
      if (auto it = off1.find(p); it != off1.end()) {
        const auto& dst = prod.at({p, q + 1});
        Matrix g = scaled(F, X.diff(q), F.sign(p));
        set_block(D, it->second, o0, tensor_map(F, src, dst, Matrix::identity(B.dim(p)), g));
      }
    }
    d.push_back(std::move(D));
  }
  return BoundedComplex(A, lo, std::move(t), std::move(d));
}

BoundedComplex tensor(const Representation& B, const BoundedComplex& X) { return tensor(BoundedComplex::stalk(B), X); }

}  // namespace svar
