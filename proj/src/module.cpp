#include "svar/module.hpp"

#include <algorithm>
#include <numeric>

#include "svar/error.hpp"
#include "svar/kernels.hpp"

namespace svar {

namespace {

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& pos) {
  std::vector<char> used(n, 0);
  for (auto p : pos) used[p] = 1;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) out.push_back(i);
  return out;
}

Matrix unit_columns(std::size_t n, const std::vector<std::size_t>& idx) {
  Matrix S(n, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) S(idx[j], j) = 1;
  return S;
}

}  // namespace

// --- Representation -----------------------------------------------------------

Representation::Representation(AlgebraPtr alg, std::vector<int> vertex_of, std::vector<Matrix> gens)
    : alg_(std::move(alg)), vertex_(std::move(vertex_of)), gens_(std::move(gens)) {
  const auto& G = alg_->generators();
  if (gens_.size() != G.size()) throw UsageError("module: expected one matrix per algebra generator");
  const std::size_t n = vertex_.size();
  for (int v : vertex_)
    if (v < 0 || v >= alg_->num_vertices()) throw UsageError("module: vertex label out of range");
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    const Matrix& X = gens_[g];
    if (X.rows() != n || X.cols() != n) throw UsageError("module: generator matrix has wrong size");
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (X(r, c) && (vertex_[c] != G[g].source || vertex_[r] != G[g].target))
          throw UsageError("module: generator '" + G[g].name + "' does not respect vertices");
  }
}

Representation Representation::from_blocks(AlgebraPtr alg, const std::vector<std::size_t>& dims,
                                           const std::vector<Matrix>& blocks) {
  const int nv = alg->num_vertices();
  if (dims.size() != static_cast<std::size_t>(nv)) throw UsageError("module: one dimension per vertex expected");
  std::vector<std::size_t> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + dims[v];
  std::vector<int> vert;
  for (int v = 0; v < nv; ++v) vert.insert(vert.end(), dims[v], v);
  const auto& G = alg->generators();
  if (blocks.size() != G.size()) throw UsageError("module: one block per generator expected");
  std::vector<Matrix> gens;
  for (std::size_t g = 0; g < G.size(); ++g) {
    const int s = G[g].source, t = G[g].target;
    const Matrix& B = blocks[g];
    if (B.rows() != dims[t] || B.cols() != dims[s])
      throw UsageError("module: block for '" + G[g].name + "' must be " + std::to_string(dims[t]) + "x" +
                       std::to_string(dims[s]));
    Matrix X(off[nv], off[nv]);
    for (std::size_t r = 0; r < B.rows(); ++r)
      for (std::size_t c = 0; c < B.cols(); ++c) X(off[t] + r, off[s] + c) = B(r, c) % alg->field().p();
    gens.push_back(std::move(X));
  }
  return Representation(std::move(alg), std::move(vert), std::move(gens));
}

std::vector<std::size_t> Representation::dims_by_vertex() const {
  std::vector<std::size_t> d(alg_->num_vertices(), 0);
  for (int v : vertex_) ++d[v];
  return d;
}

std::vector<std::size_t> Representation::indices_at(int v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vertex_.size(); ++i)
    if (vertex_[i] == v) out.push_back(i);
  return out;
}

Vec Representation::act(std::size_t b, std::span<const Elem> x) const {
  const auto& be = alg_->basis(b);
  Vec y(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (vertex_[i] == be.start_vertex) y[i] = x[i];
  for (int g : be.word) y = mul_vec(field(), gens_[g], y);
  return y;
}

const Matrix& Representation::action_matrix(std::size_t b) const {
  std::call_once(cache_->once, [this] {
    const std::size_t n = dim();
    cache_->actions.resize(alg_->dim());
    for (std::size_t k = 0; k < alg_->dim(); ++k) {
      const auto& be = alg_->basis(k);
      Matrix A(n, n);
      for (std::size_t i = 0; i < n; ++i)
        if (vertex_[i] == be.start_vertex) A(i, i) = 1;
      for (int g : be.word) A = mul(field(), gens_[g], A);
      cache_->actions[k] = std::move(A);
    }
  });
  return cache_->actions[b];
}

Matrix Representation::element_matrix(std::span<const Elem> a) const {
  Matrix out(dim(), dim());
  for (std::size_t b = 0; b < a.size(); ++b) {
    if (!a[b]) continue;
    const Matrix& A = action_matrix(b);
    for (std::size_t r = 0; r < dim(); ++r)
      kernels::axpy(out.row(r), A.row(r), a[b], dim(), field().p());
  }
  return out;
}

bool Representation::satisfies_relations() const {
  const auto& F = field();
  const std::size_t d = alg_->dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Matrix lhs = mul(F, action_matrix(i), action_matrix(j));
      Matrix rhs(dim(), dim());
      for (auto [k, c] : alg_->product(i, j)) {
        const Matrix& A = action_matrix(k);
        for (std::size_t r = 0; r < dim(); ++r) kernels::axpy(rhs.row(r), A.row(r), c, dim(), F.p());
      }
      if (!(lhs == rhs)) return false;
    }
  return true;
}

// --- subspaces ----------------------------------------------------------------

Vec Subspace::coords(std::span<const Elem> y) const {
  Vec c(pos.size());
  for (std::size_t j = 0; j < pos.size(); ++j) c[j] = y[pos[j]];
  return c;
}

bool Subspace::contains(const PrimeField& F, std::span<const Elem> y) const {
  Vec r(y.begin(), y.end());
  for (std::size_t j = 0; j < pos.size(); ++j) {
    const Elem c = y[pos[j]];
    if (!c) continue;
    for (std::size_t i = 0; i < ambient; ++i) r[i] = F.sub(r[i], F.mul(c, basis(i, j)));
  }
  return is_zero_vec(r);
}

Subspace make_subspace(const PrimeField& F, const std::vector<int>& vertex_of, const Matrix& spanning) {
  Subspace U;
  U.ambient = vertex_of.size();
  const int nv = vertex_of.empty() ? 0 : *std::max_element(vertex_of.begin(), vertex_of.end()) + 1;
  std::vector<Vec> cols;
  for (int v = 0; v < nv; ++v) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < vertex_of.size(); ++i)
      if (vertex_of[i] == v) idx.push_back(i);
    if (idx.empty() || spanning.cols() == 0) continue;
    auto [R, piv] = rref(F, transpose(select_rows(spanning, idx)));
    for (std::size_t r = 0; r < piv.size(); ++r) {
      Vec col(U.ambient, 0);
      for (std::size_t k = 0; k < idx.size(); ++k) col[idx[k]] = R(r, k);
      cols.push_back(std::move(col));
      U.pos.push_back(idx[piv[r]]);
      U.vertex.push_back(v);
    }
  }
  U.basis = Matrix::from_columns(cols, U.ambient);
  return U;
}

Subspace kernel_subspace(const PrimeField& F, const std::vector<int>& src_vertex,
                         const std::vector<int>& dst_vertex, const Matrix& f) {
  Subspace U;
  U.ambient = src_vertex.size();
  int nv = 0;
  for (int v : src_vertex) nv = std::max(nv, v + 1);
  for (int v : dst_vertex) nv = std::max(nv, v + 1);
  std::vector<Vec> cols;
  for (int v = 0; v < nv; ++v) {
    std::vector<std::size_t> ci, ri;
    for (std::size_t i = 0; i < src_vertex.size(); ++i)
      if (src_vertex[i] == v) ci.push_back(i);
    for (std::size_t i = 0; i < dst_vertex.size(); ++i)
      if (dst_vertex[i] == v) ri.push_back(i);
    if (ci.empty()) continue;
    Matrix sub = select_columns(select_rows(f, ri), ci);
    std::vector<std::size_t> free;
    Matrix K = kernel_basis(F, sub, &free);
    for (std::size_t k = 0; k < K.cols(); ++k) {
      Vec col(U.ambient, 0);
      for (std::size_t j = 0; j < ci.size(); ++j) col[ci[j]] = K(j, k);
      cols.push_back(std::move(col));
      U.pos.push_back(ci[free[k]]);
      U.vertex.push_back(v);
    }
  }
  U.basis = Matrix::from_columns(cols, U.ambient);
  return U;
}

// --- simple constructions -------------------------------------------------------

Representation zero_module(const AlgebraPtr& A) {
  return Representation(A, {}, std::vector<Matrix>(A->generators().size(), Matrix(0, 0)));
}

Representation simple_module(const AlgebraPtr& A, int v) {
  if (v < 0 || v >= A->num_vertices()) throw UsageError("simple module: vertex out of range");
  return Representation(A, {v}, std::vector<Matrix>(A->generators().size(), Matrix(1, 1)));
}

Representation semisimple_top(const AlgebraPtr& A) {
  std::vector<int> vs(A->num_vertices());
  std::iota(vs.begin(), vs.end(), 0);
  const std::size_t n = vs.size();
  return Representation(A, vs, std::vector<Matrix>(A->generators().size(), Matrix(n, n)));
}

Representation regular_module(const AlgebraPtr& A) {
  std::vector<int> vs;
  for (const auto& b : A->basis()) vs.push_back(b.left);
  std::vector<Matrix> gens;
  for (const auto& g : A->generators()) gens.push_back(A->left_mult_matrix(A->basis_vector(g.element)));
  return Representation(A, std::move(vs), std::move(gens));
}

Representation direct_sum(const Representation& M, const Representation& N) {
  if (M.algebra() != N.algebra()) throw UsageError("direct sum: modules over different algebras");
  std::vector<int> vs = M.vertices();
  vs.insert(vs.end(), N.vertices().begin(), N.vertices().end());
  const std::size_t m = M.dim(), n = N.dim();
  std::vector<Matrix> gens;
  for (std::size_t g = 0; g < M.gens().size(); ++g) {
    Matrix X(m + n, m + n);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) X(r, c) = M.gen(g)(r, c);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) X(m + r, m + c) = N.gen(g)(r, c);
    gens.push_back(std::move(X));
  }
  return Representation(M.algebra(), std::move(vs), std::move(gens));
}

Representation change_basis(const Representation& M, const Matrix& S, const Matrix& S_inv) {
  const auto& F = M.field();
  std::vector<Matrix> gens;
  for (const auto& X : M.gens()) gens.push_back(mul(F, mul(F, S, X), S_inv));
  // labels follow the images of the old basis vectors; S must be vertex-respecting
  std::vector<int> vs(M.dim(), 0);
  for (std::size_t c = 0; c < M.dim(); ++c)
    for (std::size_t r = 0; r < M.dim(); ++r)
      if (S(r, c)) vs[r] = M.vertex(c);
  return Representation(M.algebra(), std::move(vs), std::move(gens));
}

SubmoduleData submodule(const Representation& M, const Subspace& U) {
  const auto& F = M.field();
  std::vector<Matrix> gens;
  for (const auto& X : M.gens()) gens.push_back(select_rows(mul(F, X, U.basis), U.pos));
  return {Representation(M.algebra(), U.vertex, std::move(gens)), U};
}

QuotientData quotient(const Representation& M, const Subspace& U) {
  const auto& F = M.field();
  const std::size_t n = M.dim();
  auto rest = complement(n, U.pos);
  Matrix Q(rest.size(), n);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    Q(i, rest[i]) = 1;
    for (std::size_t j = 0; j < U.pos.size(); ++j) Q(i, U.pos[j]) = F.neg(U.basis(rest[i], j));
  }
  Matrix S = unit_columns(n, rest);
  std::vector<int> vs;
  for (auto i : rest) vs.push_back(M.vertex(i));
  std::vector<Matrix> gens;
  for (const auto& X : M.gens()) gens.push_back(mul(F, Q, mul(F, X, S)));
  return {Representation(M.algebra(), std::move(vs), std::move(gens)), std::move(Q), std::move(S)};
}

Subspace radical(const Representation& M) {
  Matrix span(M.dim(), 0);
  for (const auto& X : M.gens()) span = hcat(span, X);
  return make_subspace(M.field(), M.vertices(), span);
}

QuotientData top(const Representation& M) { return quotient(M, radical(M)); }

bool is_homomorphism(const Representation& M, const Representation& N, const Matrix& f) {
  if (f.rows() != N.dim() || f.cols() != M.dim()) return false;
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c)
      if (f(r, c) && N.vertex(r) != M.vertex(c)) return false;
  const auto& F = M.field();
  for (std::size_t g = 0; g < M.gens().size(); ++g)
    if (!(mul(F, N.gen(g), f) == mul(F, f, M.gen(g)))) return false;
  return true;
}

std::vector<Matrix> hom_basis(const Representation& M, const Representation& N) {
  const auto& F = M.field();
  const std::size_t m = M.dim(), n = N.dim();
  std::vector<long> var(n * m, -1);
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c)
      if (N.vertex(r) == M.vertex(c)) {
        var[r * m + c] = static_cast<long>(unknowns.size());
        unknowns.push_back({r, c});
      }
  if (unknowns.empty()) return {};
  const auto& G = M.algebra()->generators();
  std::vector<Vec> rows;
  for (std::size_t g = 0; g < G.size(); ++g) {
    const int s = G[g].source, t = G[g].target;
    const Matrix &XN = N.gen(g), &XM = M.gen(g);
    for (std::size_t r = 0; r < n; ++r) {
      if (N.vertex(r) != t) continue;
      for (std::size_t c = 0; c < m; ++c) {
        if (M.vertex(c) != s) continue;
        Vec eq(unknowns.size(), 0);
        bool any = false;
        for (std::size_t k = 0; k < n; ++k)
          if (XN(r, k) && var[k * m + c] >= 0) {
            eq[var[k * m + c]] = F.add(eq[var[k * m + c]], XN(r, k));
            any = true;
          }
        for (std::size_t k = 0; k < m; ++k)
          if (XM(k, c) && var[r * m + k] >= 0) {
            eq[var[r * m + k]] = F.sub(eq[var[r * m + k]], XM(k, c));
            any = true;
          }
        if (any) rows.push_back(std::move(eq));
      }
    }
  }
  Matrix A = Matrix::from_rows(rows, unknowns.size());
  Matrix K = kernel_basis(F, A);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < K.cols(); ++k) {
    Matrix f(n, m);
    for (std::size_t u = 0; u < unknowns.size(); ++u) f(unknowns[u].first, unknowns[u].second) = K(u, k);
    out.push_back(std::move(f));
  }
  return out;
}

std::optional<Matrix> module_iso(const Representation& M, const Representation& N, std::uint64_t budget) {
  if (M.dim() != N.dim() || M.dims_by_vertex() != N.dims_by_vertex()) return std::nullopt;
  if (M.dim() == 0) return Matrix(0, 0);
  const auto& F = M.field();
  auto H = hom_basis(M, N);
  if (H.empty()) return std::nullopt;
  auto invertible = [&](const Matrix& f) { return rank(F, f) == M.dim(); };
  for (const auto& f : H)
    if (invertible(f)) return f;
  // size of the full scan, saturating
  const std::uint64_t p = F.p();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < H.size(); ++i) {
    if (total > budget / p + 1) {
      total = budget + 1;
      break;
    }
    total *= p;
  }
  if (total > budget)
    throw SearchBudgetExceeded("isomorphism search: " + std::to_string(H.size()) + "-dimensional Hom over F_" +
                               std::to_string(p) + " exceeds the candidate budget");
  std::vector<Elem> digits(H.size(), 0);
  for (std::uint64_t it = 1; it < total; ++it) {
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
    Matrix f(N.dim(), M.dim());
    for (std::size_t i = 0; i < H.size(); ++i)
      if (digits[i])
        for (std::size_t r = 0; r < f.rows(); ++r)
          kernels::axpy(f.row(r), H[i].row(r), digits[i], f.cols(), F.p());
    if (invertible(f)) return f;
  }
  return std::nullopt;
}

}  // namespace svar
