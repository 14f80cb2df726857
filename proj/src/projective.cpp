// Projective modules, covers and bimodule constructions.
#include <algorithm>
#include <map>

#include "svar/error.hpp"
#include "svar/kernels.hpp"
#include "svar/module.hpp"

namespace svar {

ProjectiveModule::ProjectiveModule(AlgebraPtr alg, std::vector<int> tops) : alg_(std::move(alg)), tops_(std::move(tops)) {
  const int nv = alg_->num_vertices();
  elements_.resize(nv);
  local_index_.assign(nv, std::vector<long>(alg_->dim(), -1));
  for (int v = 0; v < nv; ++v) {
    elements_[v] = alg_->right_ideal_basis(v);
    for (std::size_t j = 0; j < elements_[v].size(); ++j) local_index_[v][elements_[v][j]] = static_cast<long>(j);
  }
  for (int t : tops_) {
    if (t < 0 || t >= nv) throw UsageError("projective: vertex out of range");
    offsets_.push_back(dim_);
    for (auto b : elements_[t]) vertex_.push_back(alg_->basis(b).left);
    dim_ += elements_[t].size();
  }
}

const std::vector<std::size_t>& ProjectiveModule::summand_elements(std::size_t k) const { return elements_[tops_[k]]; }

std::size_t ProjectiveModule::generator_index(std::size_t k) const {
  return index_of(k, alg_->idempotent(tops_[k]));
}

std::size_t ProjectiveModule::index_of(std::size_t k, std::size_t b) const {
  const long j = local_index_[tops_[k]][b];
  return j < 0 ? npos : offsets_[k] + static_cast<std::size_t>(j);
}

std::vector<std::size_t> ProjectiveModule::indices_at(int v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vertex_.size(); ++i)
    if (vertex_[i] == v) out.push_back(i);
  return out;
}

Vec ProjectiveModule::act(std::size_t b, std::span<const Elem> x) const {
  const auto& F = alg_->field();
  Vec out(dim_, 0);
  for (std::size_t k = 0; k < rank(); ++k) {
    const auto& els = summand_elements(k);
    for (std::size_t j = 0; j < els.size(); ++j) {
      const Elem c = x[offsets_[k] + j];
      if (!c) continue;
      for (auto [d, e] : alg_->product(b, els[j])) {
        const std::size_t i = index_of(k, d);
        out[i] = F.add(out[i], F.mul(c, e));
      }
    }
  }
  return out;
}

Representation ProjectiveModule::rep() const {
  std::vector<Matrix> gens;
  for (const auto& g : alg_->generators()) {
    Matrix X(dim_, dim_);
    Vec unit(dim_, 0);
    for (std::size_t c = 0; c < dim_; ++c) {
      unit[c] = 1;
      X.set_column(c, act(g.element, unit));
      unit[c] = 0;
    }
    gens.push_back(std::move(X));
  }
  return Representation(alg_, vertex_, std::move(gens));
}

ProjectiveCover projective_cover(const Representation& M) {
  Subspace rad = radical(M);
  std::vector<char> in_rad(M.dim(), 0);
  for (auto p : rad.pos) in_rad[p] = 1;
  std::vector<int> tops;
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < M.dim(); ++i) {
    if (in_rad[i]) continue;
    tops.push_back(M.vertex(i));
    Vec u(M.dim(), 0);
    u[i] = 1;
    gens.push_back(std::move(u));
  }
  ProjectiveCover C;
  C.P = ProjectiveModule(M.algebra(), tops);
  C.gen_images = Matrix::from_columns(gens, M.dim());
  C.full = expand_from_projective(C.P, C.gen_images, M);
  return C;
}

bool is_projective(const Representation& M) {
  Subspace rad = radical(M);
  std::size_t expected = 0;
  std::vector<char> in_rad(M.dim(), 0);
  for (auto p : rad.pos) in_rad[p] = 1;
  for (std::size_t i = 0; i < M.dim(); ++i)
    if (!in_rad[i]) expected += M.algebra()->right_ideal_basis(M.vertex(i)).size();
  return expected == M.dim();
}

// --- bimodules ----------------------------------------------------------------

namespace {

const EnvelopingInfo& env_of(const Representation& B) {
  const auto& info = B.algebra()->enveloping_info();
  if (!info) throw UsageError("bimodule expected: module is not over an enveloping algebra");
  return *info;
}

}  // namespace

Representation restrict_left(const Representation& B) {
  const auto& info = env_of(B);
  const auto& A = info.base;
  const auto& F = B.field();
  std::vector<int> vs;
  for (int v : B.vertices()) vs.push_back(info.unvertex(v).first);
  std::vector<Matrix> gens;
  for (std::size_t a = 0; a < A->generators().size(); ++a) {
    Matrix X(B.dim(), B.dim());
    for (int j = 0; j < A->num_vertices(); ++j) X = add(F, X, B.gen(info.left_generator(static_cast<int>(a), j)));
    gens.push_back(std::move(X));
  }
  return Representation(A, std::move(vs), std::move(gens));
}

bool is_left_projective(const Representation& B) { return is_projective(restrict_left(B)); }

bool is_right_projective(const Representation& B) {
  const auto& info = env_of(B);
  const auto& A = info.base;
  std::vector<int> rv;
  for (int v : B.vertices()) rv.push_back(info.unvertex(v).second);
  Matrix span(B.dim(), 0);
  for (std::size_t a = 0; a < A->generators().size(); ++a) {
    Matrix X(B.dim(), B.dim());
    for (int i = 0; i < A->num_vertices(); ++i)
      X = add(B.field(), X, B.gen(info.right_generator(i, static_cast<int>(a))));
    span = hcat(span, X);
  }
  Subspace rad = make_subspace(B.field(), rv, span);
  std::vector<char> in_rad(B.dim(), 0);
  for (auto p : rad.pos) in_rad[p] = 1;
  std::vector<std::size_t> left_count(A->num_vertices(), 0);
  for (const auto& b : A->basis()) ++left_count[b.left];
  std::size_t expected = 0;
  for (std::size_t i = 0; i < B.dim(); ++i)
    if (!in_rad[i]) expected += left_count[rv[i]];
  return expected == B.dim();
}

Representation regular_bimodule(const AlgebraPtr& env) {
  const auto& info = env->enveloping_info();
  if (!info) throw UsageError("regular bimodule: algebra is not an enveloping algebra");
  const auto& A = info->base;
  const auto& F = A->field();
  std::vector<int> vs;
  for (const auto& b : A->basis()) vs.push_back(info->vertex_pair(b.left, b.right));
  std::vector<Matrix> gens(env->generators().size());
  std::vector<Matrix> EL, ER;
  for (int v = 0; v < A->num_vertices(); ++v) {
    EL.push_back(A->left_mult_matrix(A->basis_vector(A->idempotent(v))));
    ER.push_back(A->right_mult_matrix(A->basis_vector(A->idempotent(v))));
  }
  for (std::size_t a = 0; a < A->generators().size(); ++a) {
    const auto ge = A->basis_vector(A->generators()[a].element);
    Matrix La = A->left_mult_matrix(ge), Ra = A->right_mult_matrix(ge);
    for (int j = 0; j < A->num_vertices(); ++j) gens[info->left_generator(static_cast<int>(a), j)] = mul(F, La, ER[j]);
    for (int i = 0; i < A->num_vertices(); ++i) gens[info->right_generator(i, static_cast<int>(a))] = mul(F, EL[i], Ra);
  }
  return Representation(env, std::move(vs), std::move(gens));
}

Matrix right_action(const Representation& B, std::span<const Elem> lambda) {
  const auto& info = env_of(B);
  const auto& A = info.base;
  Vec z(B.algebra()->dim(), 0);
  for (std::size_t b = 0; b < lambda.size(); ++b)
    if (lambda[b])
      for (int i = 0; i < A->num_vertices(); ++i) z[info.pair(A->idempotent(i), b)] = lambda[b];
  return B.element_matrix(z);
}

Matrix left_action(const Representation& B, std::span<const Elem> lambda) {
  const auto& info = env_of(B);
  const auto& A = info.base;
  Vec z(B.algebra()->dim(), 0);
  for (std::size_t b = 0; b < lambda.size(); ++b)
    if (lambda[b])
      for (int j = 0; j < A->num_vertices(); ++j) z[info.pair(b, A->idempotent(j))] = lambda[b];
  return B.element_matrix(z);
}

TensorProduct tensor_over_algebra(const Representation& B, const Representation& M) {
  const auto& info = env_of(B);
  const auto& A = info.base;
  if (M.algebra() != A) throw UsageError("tensor product: module is over a different algebra");
  const auto& F = M.field();
  const std::size_t b = B.dim(), m = M.dim();
  const Matrix Ib = Matrix::identity(b), Im = Matrix::identity(m);
  Matrix rel(b * m, 0);
  auto add_relation = [&](const Vec& lambda) {
    Matrix R = right_action(B, lambda);
    Matrix L = M.element_matrix(lambda);
    rel = hcat(rel, sub(F, kron(F, R, Im), kron(F, Ib, L)));
  };
  for (const auto& g : A->generators()) add_relation(A->basis_vector(g.element));
  for (int v = 0; v < A->num_vertices(); ++v) add_relation(A->basis_vector(A->idempotent(v)));
  std::vector<int> labels(b * m);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < m; ++j) labels[i * m + j] = info.unvertex(B.vertex(i)).first;
  Subspace U = make_subspace(F, labels, rel);
  std::vector<char> used(b * m, 0);
  for (auto p : U.pos) used[p] = 1;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < b * m; ++i)
    if (!used[i]) rest.push_back(i);
  Matrix Q(rest.size(), b * m), S(b * m, rest.size());
  std::vector<int> vs;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    Q(i, rest[i]) = 1;
    S(rest[i], i) = 1;
    for (std::size_t j = 0; j < U.pos.size(); ++j) Q(i, U.pos[j]) = F.neg(U.basis(rest[i], j));
    vs.push_back(labels[rest[i]]);
  }
  std::vector<Matrix> gens;
  for (std::size_t a = 0; a < A->generators().size(); ++a) {
    Matrix L(b, b);
    for (int j = 0; j < A->num_vertices(); ++j) L = add(F, L, B.gen(info.left_generator(static_cast<int>(a), j)));
    gens.push_back(mul(F, Q, mul(F, kron(F, L, Im), S)));
  }
  return {Representation(A, std::move(vs), std::move(gens)), std::move(Q), std::move(S)};
}

Matrix tensor_map(const PrimeField& F, const TensorProduct& src, const TensorProduct& dst, const Matrix& f,
                  const Matrix& g) {
  return mul(F, dst.projection, mul(F, kron(F, f, g), src.section));
}

HomModule hom_module(const Representation& B, const Representation& N) {
  const auto& info = env_of(B);
  const auto& A = info.base;
  if (N.algebra() != A) throw UsageError("hom module: module is over a different algebra");
  const auto& F = N.field();
  const std::size_t n = N.dim(), b = B.dim();
  Representation L = restrict_left(B);
  std::vector<int> rvert(b);
  for (std::size_t c = 0; c < b; ++c) rvert[c] = info.unvertex(B.vertex(c)).second;

  std::vector<Vec> basis_cols;
  std::vector<std::size_t> pos;
  std::vector<int> labels;
  for (int v = 0; v < A->num_vertices(); ++v) {
    // unknowns F(r, c) with c in B e_v and matching left vertices
    std::vector<long> var(n * b, -1);
    std::vector<std::size_t> flat;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < b; ++c)
        if (rvert[c] == v && N.vertex(r) == L.vertex(c)) {
          var[r * b + c] = static_cast<long>(flat.size());
          flat.push_back(r * b + c);
        }
    if (flat.empty()) continue;
    std::vector<Vec> rows;
    for (std::size_t a = 0; a < A->generators().size(); ++a) {
      const Matrix &XN = N.gen(a), &XL = L.gen(a);
      // (XN F - F XL)(r, c) over all r, c in B e_v
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < b; ++c) {
          if (rvert[c] != v) continue;
          Vec eq(flat.size(), 0);
          bool any = false;
          for (std::size_t k = 0; k < n; ++k)
            if (XN(r, k) && var[k * b + c] >= 0) {
              eq[var[k * b + c]] = F.add(eq[var[k * b + c]], XN(r, k));
              any = true;
            }
          for (std::size_t k = 0; k < b; ++k)
            if (XL(k, c) && var[r * b + k] >= 0) {
              eq[var[r * b + k]] = F.sub(eq[var[r * b + k]], XL(k, c));
              any = true;
            }
          if (any) rows.push_back(std::move(eq));
        }
    }
    std::vector<std::size_t> free;
    Matrix K = kernel_basis(F, Matrix::from_rows(rows, flat.size()), &free);
    for (std::size_t k = 0; k < K.cols(); ++k) {
      Vec col(n * b, 0);
      for (std::size_t u = 0; u < flat.size(); ++u) col[flat[u]] = K(u, k);
      basis_cols.push_back(std::move(col));
      pos.push_back(flat[free[k]]);
      labels.push_back(v);
    }
  }
  const std::size_t h = basis_cols.size();
  HomModule H;
  H.basis = Matrix::from_columns(basis_cols, n * b);
  std::vector<Matrix> gens;
  for (std::size_t a = 0; a < A->generators().size(); ++a) {
    Matrix R(b, b);
    for (int i = 0; i < A->num_vertices(); ++i) R = add(F, R, B.gen(info.right_generator(i, static_cast<int>(a))));
    Matrix X(h, h);
    for (std::size_t j = 0; j < h; ++j) {
      Matrix f(n, b);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < b; ++c) f(r, c) = basis_cols[j][r * b + c];
      Matrix g = mul(F, f, R);
      for (std::size_t i = 0; i < h; ++i) X(i, j) = g.data()[pos[i]];
    }
    gens.push_back(std::move(X));
  }
  H.rep = Representation(A, std::move(labels), std::move(gens));
  H.exactness_warning = !is_right_projective(B);
  return H;
}

Matrix expand_from_projective(const ProjectiveModule& P, const Matrix& gen_images, const Representation& X) {
  // generators with the same top share their path basis: act on all of
  // them at once, reusing the image of each path prefix
  const auto& F = X.field();
  const auto& A = *X.algebra();
  Matrix full(X.dim(), P.dim());
  for (int v = 0; v < A.num_vertices(); ++v) {
    std::vector<std::size_t> ks;
    for (std::size_t k = 0; k < P.rank(); ++k)
      if (P.tops()[k] == v) ks.push_back(k);
    if (ks.empty()) continue;
    Matrix G = select_columns(gen_images, ks);
    for (std::size_t i = 0; i < X.dim(); ++i)
      if (X.vertex(i) != v)
        for (std::size_t c = 0; c < G.cols(); ++c) G(i, c) = 0;
    std::map<std::vector<int>, Matrix> by_word;
    by_word.emplace(std::vector<int>{}, std::move(G));
    auto image = [&](auto&& self, const std::vector<int>& w) -> const Matrix& {
      if (auto it = by_word.find(w); it != by_word.end()) return it->second;
      std::vector<int> prefix(w.begin(), w.end() - 1);
      Matrix M = mul(F, X.gen(static_cast<std::size_t>(w.back())), self(self, prefix));
      return by_word.emplace(w, std::move(M)).first->second;
    };
    const auto& els = P.summand_elements(ks.front());
    for (std::size_t j = 0; j < els.size(); ++j) {
      const Matrix& M = image(image, A.basis(els[j]).word);
      for (std::size_t t = 0; t < ks.size(); ++t)
        for (std::size_t i = 0; i < X.dim(); ++i) full(i, P.offset(ks[t]) + j) = M(i, t);
    }
  }
  return full;
}

}  // namespace svar
