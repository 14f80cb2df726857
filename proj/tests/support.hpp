#pragma once
// Shared fixtures for the test binaries.

#include <random>

#include "svar/algebra.hpp"
#include "svar/module.hpp"

namespace svar::testing {

inline AlgebraPtr dual_numbers() { return build_algebra(truncated_polynomial(2, {2})); }
inline AlgebraPtr klein_four() { return build_algebra(truncated_polynomial(2, {2, 2})); }
inline AlgebraPtr cyclic3() { return build_algebra(truncated_polynomial(3, {3})); }

/// F_2<x,y>/(x^2, y^2, xy, yx).
inline AlgebraPtr radical_square_zero() {
  QuiverPresentation Q;
  Q.p = 2;
  Q.vertices = {"1"};
  Q.arrows = {{"x", 0, 0}, {"y", 0, 0}};
  Q.relations = {{PathTerm{1, {0, 0}}}, {PathTerm{1, {1, 1}}}, {PathTerm{1, {0, 1}}}, {PathTerm{1, {1, 0}}}};
  return build_algebra(Q);
}

/// 1 <-> 2 with both length-two paths zero, over F_3.
inline AlgebraPtr two_cycle() {
  QuiverPresentation Q;
  Q.p = 3;
  Q.vertices = {"1", "2"};
  Q.arrows = {{"a", 0, 1}, {"b", 1, 0}};
  Q.relations = {{PathTerm{1, {0, 1}}}, {PathTerm{1, {1, 0}}}};
  return build_algebra(Q);
}

/// Submodule of M generated by the given vectors.
inline Subspace generated_submodule(const Representation& M, const std::vector<Vec>& gens) {
  Matrix span(M.dim(), 0);
  for (const auto& v : gens) {
    Matrix cols(M.dim(), M.algebra()->dim());
    for (std::size_t b = 0; b < M.algebra()->dim(); ++b) cols.set_column(b, M.act(b, v));
    span = hcat(span, cols);
  }
  return make_subspace(M.field(), M.vertices(), span);
}

/// Quotient of a random free module by a random submodule, dim <= max_dim
/// when possible (returns the smallest candidate seen otherwise).
inline Representation random_module(const AlgebraPtr& A, std::mt19937& rng, std::size_t max_dim) {
  const auto& F = A->field();
  Representation best;
  bool have = false;
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<int> tops;
    const int r = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < r; ++i) tops.push_back(static_cast<int>(rng() % A->num_vertices()));
    ProjectiveModule P(A, tops);
    Representation R = P.rep();
    std::vector<Vec> gens;
    const int k = static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      Vec v(R.dim(), 0);
      for (auto& x : v) x = rng() % F.p();
      // keep the generator vertex-homogeneous
      const int vtx = R.vertex(rng() % R.dim());
      for (std::size_t j = 0; j < v.size(); ++j)
        if (R.vertex(j) != vtx) v[j] = 0;
      gens.push_back(std::move(v));
    }
    auto Q = quotient(R, generated_submodule(R, gens)).rep;
    if (Q.dim() <= max_dim && Q.dim() > 0) return Q;
    if (!have || Q.dim() < best.dim()) {
      best = Q;
      have = true;
    }
  }
  return best;
}

inline ModulePtr share(Representation M) { return std::make_shared<const Representation>(std::move(M)); }

/// 2-dim Klein-four module with x acting by aE and y by bE, E = e_21; its
/// variety is a line.
inline ModulePtr line_module(const AlgebraPtr& A, Elem a, Elem b) {
  Matrix E = Matrix::from_rows({{0, 0}, {1, 0}});
  Matrix X(2, 2), Y(2, 2);
  if (a) X = E;
  if (b) Y = E;
  return share(Representation::from_blocks(A, {2}, {X, Y}));
}

}  // namespace svar::testing
