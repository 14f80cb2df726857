#pragma once
// Finite dimensional basic algebras over F_p.
//
// Path convention: the word "a*b" traverses a, then b. In the algebra this
// is the composite b∘a, so a representation acts by matrix(b)*matrix(a),
// and a basis element b satisfies b = e_left * b * e_right with
// right = source vertex, left = target vertex.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svar/field.hpp"
#include "svar/matrix.hpp"

namespace svar {

using SparseVec = std::vector<std::pair<std::uint32_t, Elem>>;

struct PathTerm {
  long long coeff = 1;
  std::vector<int> arrows;  // traversal order
};

struct QuiverArrow {
  std::string name;
  int source = 0;
  int target = 0;
};

struct QuiverPresentation {
  std::uint32_t p = 2;
  std::vector<std::string> vertices;
  std::vector<QuiverArrow> arrows;
  std::vector<std::vector<PathTerm>> relations;
  int nilpotency_cap = 30;

  /// Throws MalformedPresentation on dangling endpoints, non-parallel
  /// relation terms or relation paths shorter than 2.
  void validate() const;
  int vertex_index(const std::string& name) const;  // -1 if absent
  int arrow_index(const std::string& name) const;
};

struct BasisElement {
  std::string label;
  int left = 0;
  int right = 0;
  int degree = 0;
  int start_vertex = 0;
  std::vector<int> word;  // generator indices in application order
};

struct AlgebraGenerator {
  std::string name;
  std::size_t element = 0;  // basis index
  int source = 0;
  int target = 0;
};

class FDAlgebra;
using AlgebraPtr = std::shared_ptr<const FDAlgebra>;

/// Decoding data attached to an enveloping algebra Λ ⊗ Λ^op.
struct EnvelopingInfo {
  AlgebraPtr base;
  std::size_t pair(std::size_t x, std::size_t y) const;
  std::pair<std::size_t, std::size_t> unpair(std::size_t z) const;
  int vertex_pair(int i, int j) const;
  std::pair<int, int> unvertex(int v) const;
  int left_generator(int arrow, int j) const;   // arrow ⊗ e_j°
  int right_generator(int i, int arrow) const;  // e_i ⊗ arrow°
};

class FDAlgebra {
 public:
  FDAlgebra(PrimeField F, std::vector<std::string> vertex_names, std::vector<BasisElement> basis,
            std::vector<AlgebraGenerator> gens, std::vector<SparseVec> mult, std::vector<std::size_t> idempotents);

  const PrimeField& field() const { return F_; }
  std::size_t dim() const { return basis_.size(); }
  int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const BasisElement& basis(std::size_t i) const { return basis_[i]; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::vector<AlgebraGenerator>& generators() const { return gens_; }
  std::size_t idempotent(int v) const { return idempotents_[v]; }

  /// b_i * b_j as a sparse combination of basis elements.
  const SparseVec& product(std::size_t i, std::size_t j) const { return mult_[i * dim() + j]; }
  Vec multiply(std::span<const Elem> a, std::span<const Elem> b) const;
  Vec unit() const;
  Vec basis_vector(std::size_t i) const;

  /// Basis elements b with b * e_v = b, i.e. a basis of the projective A e_v.
  std::vector<std::size_t> right_ideal_basis(int v) const;
  int max_degree() const;
  /// Smallest L with rad^L = 0.
  int loewy_length() const { return max_degree() + 1; }

  /// Matrix of left multiplication by the element a on the regular module.
  Matrix left_mult_matrix(std::span<const Elem> a) const;
  Matrix right_mult_matrix(std::span<const Elem> a) const;

  const std::optional<EnvelopingInfo>& enveloping_info() const { return env_; }
  void set_enveloping_info(EnvelopingInfo info) { env_ = std::move(info); }

  std::string describe_element(std::span<const Elem> a) const;

 private:
  PrimeField F_;
  std::vector<std::string> vertex_names_;
  std::vector<BasisElement> basis_;
  std::vector<AlgebraGenerator> gens_;
  std::vector<SparseVec> mult_;
  std::vector<std::size_t> idempotents_;
  std::optional<EnvelopingInfo> env_;
};

/// Quotient of the path algebra by the relation ideal, basis by degree-wise
/// reduction. Throws InfiniteDimensional past the nilpotency cap.
AlgebraPtr build_algebra(const QuiverPresentation& pres);

/// Presentation of F_p[G] for G = ∏ Z/orders[i] via t_i = g_i - 1.
QuiverPresentation group_algebra(std::uint32_t p, const std::vector<std::uint64_t>& cyclic_orders);

/// Truncated polynomial ring F_p[x_1..x_n]/(x_1^{a_1}, ..., x_n^{a_n}).
QuiverPresentation truncated_polynomial(std::uint32_t p, const std::vector<int>& exponents);

AlgebraPtr enveloping(const AlgebraPtr& A);

/// Exhaustive scan of (b_i b_j) b_k = b_i (b_j b_k).
bool is_associative(const FDAlgebra& A);

}  // namespace svar
