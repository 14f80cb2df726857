#pragma once
// Finite dimensional modules given by vertex-labelled bases and generator
// matrices. Bimodules are modules over the enveloping algebra.

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "svar/algebra.hpp"
#include "svar/matrix.hpp"

namespace svar {

class Representation {
 public:
  Representation() = default;
  /// `vertex_of[i]` labels basis vector i; gens[g] is the full dim×dim matrix
  /// of algebra generator g. Throws UsageError if a generator matrix does
  /// not respect the vertex labels.
  Representation(AlgebraPtr alg, std::vector<int> vertex_of, std::vector<Matrix> gens);

  /// Block form: dims per vertex (basis ordered vertex by vertex) and one
  /// dims[target]×dims[source] block per generator.
  static Representation from_blocks(AlgebraPtr alg, const std::vector<std::size_t>& dims,
                                    const std::vector<Matrix>& blocks);

  const AlgebraPtr& algebra() const { return alg_; }
  const PrimeField& field() const { return alg_->field(); }
  std::size_t dim() const { return vertex_.size(); }
  const std::vector<int>& vertices() const { return vertex_; }
  int vertex(std::size_t i) const { return vertex_[i]; }
  std::vector<std::size_t> dims_by_vertex() const;
  std::vector<std::size_t> indices_at(int v) const;
  const Matrix& gen(std::size_t g) const { return gens_[g]; }
  const std::vector<Matrix>& gens() const { return gens_; }

  /// Basis element b of the algebra acting on x.
  Vec act(std::size_t b, std::span<const Elem> x) const;
  /// Action matrix of basis element b (cached).
  const Matrix& action_matrix(std::size_t b) const;
  Matrix element_matrix(std::span<const Elem> a) const;

  /// Checks that the generator matrices define an algebra action, i.e. the
  /// relation ideal acts by zero.
  bool satisfies_relations() const;

  bool operator==(const Representation& o) const {
    return alg_ == o.alg_ && vertex_ == o.vertex_ && gens_ == o.gens_;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Matrix> actions;
  };
  AlgebraPtr alg_;
  std::vector<int> vertex_;
  std::vector<Matrix> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

using ModulePtr = std::shared_ptr<const Representation>;

/// Vertex-homogeneous subspace stored in echelon form: basis(pos[j], i) = δ_ij.
struct Subspace {
  std::size_t ambient = 0;
  Matrix basis;
  std::vector<std::size_t> pos;
  std::vector<int> vertex;

  std::size_t dim() const { return basis.cols(); }
  /// Coordinates of y, assuming y lies in the span.
  Vec coords(std::span<const Elem> y) const;
  bool contains(const PrimeField& F, std::span<const Elem> y) const;
};

/// Span of the columns of `spanning`, split by vertex. The span must be
/// stable under the vertex idempotents (true for every submodule).
Subspace make_subspace(const PrimeField& F, const std::vector<int>& vertex_of, const Matrix& spanning);

/// Kernel of a vertex-respecting map f: M -> N given as a full matrix.
Subspace kernel_subspace(const PrimeField& F, const std::vector<int>& src_vertex,
                         const std::vector<int>& dst_vertex, const Matrix& f);

// --- simple constructions ---------------------------------------------------

Representation zero_module(const AlgebraPtr& A);
Representation simple_module(const AlgebraPtr& A, int v);
/// Λ/rad Λ: the direct sum of all simples.
Representation semisimple_top(const AlgebraPtr& A);
Representation regular_module(const AlgebraPtr& A);
Representation direct_sum(const Representation& M, const Representation& N);
/// Module over the same algebra obtained by the change of basis x -> S x.
Representation change_basis(const Representation& M, const Matrix& S, const Matrix& S_inv);

struct SubmoduleData {
  Representation rep;
  Subspace space;  // inside the ambient module
};

struct QuotientData {
  Representation rep;
  Matrix projection;  // quotient.dim × ambient.dim
  Matrix section;     // ambient.dim × quotient.dim (unit vectors)
};

SubmoduleData submodule(const Representation& M, const Subspace& U);
QuotientData quotient(const Representation& M, const Subspace& U);

/// rad M = Σ_g g·M.
Subspace radical(const Representation& M);
QuotientData top(const Representation& M);

bool is_homomorphism(const Representation& M, const Representation& N, const Matrix& f);
/// Basis of Hom_A(M, N).
std::vector<Matrix> hom_basis(const Representation& M, const Representation& N);

/// Invertible intertwiner M -> N, or nullopt. Throws SearchBudgetExceeded
/// when the candidate space exceeds `budget` (the answer is then unknown).
std::optional<Matrix> module_iso(const Representation& M, const Representation& N,
                                 std::uint64_t budget = (1ull << 20));

// --- projective modules -----------------------------------------------------

/// P = ⊕_k A e_{tops[k]}. Basis: summand by summand, the algebra basis
/// elements b with b e_v = b in increasing order.
class ProjectiveModule {
 public:
  ProjectiveModule() = default;
  ProjectiveModule(AlgebraPtr alg, std::vector<int> tops);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<int>& tops() const { return tops_; }
  std::size_t rank() const { return tops_.size(); }
  std::size_t dim() const { return dim_; }
  std::size_t offset(std::size_t k) const { return offsets_[k]; }
  /// Algebra basis elements spanning summand k, in basis order.
  const std::vector<std::size_t>& summand_elements(std::size_t k) const;
  /// Position of generator k (the idempotent e_{tops[k]}).
  std::size_t generator_index(std::size_t k) const;
  /// Position of b·g_k, or npos when b e_v != b.
  std::size_t index_of(std::size_t k, std::size_t b) const;
  const std::vector<int>& vertices() const { return vertex_; }
  std::vector<std::size_t> indices_at(int v) const;

  /// Basis element b acting on a vector of P.
  Vec act(std::size_t b, std::span<const Elem> x) const;
  Representation rep() const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  AlgebraPtr alg_;
  std::vector<int> tops_;
  std::vector<std::vector<std::size_t>> elements_;  // per vertex
  std::vector<std::vector<long>> local_index_;      // per vertex: basis element -> local position
  std::vector<std::size_t> offsets_;
  std::vector<int> vertex_;
  std::size_t dim_ = 0;
};

/// Full matrix of the map P -> X determined by the images of the generators
/// (columns of `gen_images`). Target must provide act(b, x) and dim().
Matrix expand_from_projective(const ProjectiveModule& P, const Matrix& gen_images, const Representation& X);

template <class Target>
Matrix expand_from_projective(const ProjectiveModule& P, const Matrix& gen_images, const Target& X) {
  Matrix full(X.dim(), P.dim());
  for (std::size_t k = 0; k < P.rank(); ++k) {
    Vec img = gen_images.column(k);
    const auto& els = P.summand_elements(k);
    for (std::size_t j = 0; j < els.size(); ++j) full.set_column(P.offset(k) + j, X.act(els[j], img));
  }
  return full;
}

struct ProjectiveCover {
  ProjectiveModule P;
  Matrix gen_images;  // M.dim × rank
  Matrix full;        // M.dim × P.dim
};

ProjectiveCover projective_cover(const Representation& M);
bool is_projective(const Representation& M);

// --- bimodules ----------------------------------------------------------------

/// Left Λ-module underlying a Λ^e-module.
Representation restrict_left(const Representation& B);
bool is_left_projective(const Representation& B);
bool is_right_projective(const Representation& B);

/// Λ as a Λ^e-module, (a⊗b°)·m = a m b.
Representation regular_bimodule(const AlgebraPtr& env);
/// Matrix of the right action of Λ-basis element b on a Λ^e-module.
Matrix right_action(const Representation& B, std::span<const Elem> lambda);
Matrix left_action(const Representation& B, std::span<const Elem> lambda);

struct TensorProduct {
  Representation rep;
  Matrix projection;  // rep.dim × (B.dim * M.dim)
  Matrix section;     // (B.dim * M.dim) × rep.dim
};

/// B ⊗_Λ M = (B ⊗_k M) / span{bλ⊗m - b⊗λm}, with the left action of B.
TensorProduct tensor_over_algebra(const Representation& B, const Representation& M);
/// Induced map f ⊗ g between tensor products (B⊗M -> B'⊗M').
Matrix tensor_map(const PrimeField& F, const TensorProduct& src, const TensorProduct& dst, const Matrix& f,
                  const Matrix& g);

struct HomModule {
  Representation rep;
  Matrix basis;  // columns: flattened (row-major) N.dim × B.dim matrices
  bool exactness_warning = false;
};

/// Hom_Λ(B, N) with (λ·f)(b) = f(bλ). Warns when B is not right projective.
HomModule hom_module(const Representation& B, const Representation& N);

}  // namespace svar
