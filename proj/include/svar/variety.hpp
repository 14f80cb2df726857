#pragma once
// Support varieties: the commutative reduction H_red of the Hochschild
// ring, annihilator ideals as kernels of φ_M, and lattice operations.
//
// All comparisons between variety ideals are up to radical.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "svar/cohomology.hpp"
#include "svar/poly.hpp"

namespace svar {

/// H modulo nilpotents we can see: degree-0 generators are killed and,
/// in odd characteristic, so are odd-degree generators.
struct ReducedRing {
  PolyRingPtr ring;
  std::vector<std::size_t> generator_index;  // HH generator behind each variable
  std::vector<Poly> relations;               // images of the HH relations
  std::size_t relations_verified_to = 0;
};

ReducedRing commutative_reduction(const GradedRingPresentation& P);

struct VarietyIdeal {
  Ideal ideal;  // includes the relations of H_red
  std::size_t verified_to = 0;
  bool radicalized = false;  // false: the variety is V(ideal), radical implicit
  bool fg_warning = false;   // Fg is violated for the algebra; results are indicative only

  int dim() const { return ideal.krull_dim(); }
};

VarietyIdeal intersect(const VarietyIdeal& V, const VarietyIdeal& W);  // I + J
VarietyIdeal unite(const VarietyIdeal& V, const VarietyIdeal& W);      // I ∩ J
/// W ⊆ V as varieties.
Tri contains(const VarietyIdeal& V, const VarietyIdeal& W);
Tri equals(const VarietyIdeal& V, const VarietyIdeal& W);

/// Shared state for variety computations over one algebra up to degree D.
class VarietyContext {
 public:
  VarietyContext(AlgebraPtr A, std::size_t D = kDefaultDegreeBound, HochschildOptions opts = {},
                 unsigned gb_cap = kDefaultGroebnerDegreeCap);

  const AlgebraPtr& algebra() const { return A_; }
  const HochschildRing& hochschild() const { return *H_; }
  const ReducedRing& reduced() const { return red_; }
  const PolyRingPtr& ring() const { return red_.ring; }
  /// min(D, HH range).
  std::size_t degree_bound() const { return D_; }
  bool fg_warning() const { return fg_warning_; }
  unsigned groebner_cap() const { return gb_cap_; }
  const ModulePtr& simple_top() const { return k_; }

  /// φ_M up to the degree bound; cached per module pointer.
  const CharMap& char_map(const ModulePtr& M) const;
  /// HH coordinates of a polynomial homogeneous of degree n.
  Vec evaluate(const Poly& f, std::size_t n) const;
  std::vector<Monomial> monomials(std::size_t n) const;
  /// Image of an HH^n class in H_red; monomials through degree-0 or killed
  /// odd generators map to zero. Empty when the generator monomials do not
  /// span the class.
  std::optional<Poly> reduce_class(std::size_t n, std::span<const Elem> h) const;

  VarietyIdeal whole() const;       // Spec H_red
  VarietyIdeal irrelevant() const;  // V(H^+)
  VarietyIdeal ideal_of(const std::vector<Poly>& hs) const;

  /// ker φ_M per degree ≤ D.
  VarietyIdeal annihilator_ideal(const ModulePtr& M) const;
  VarietyIdeal variety(const ModulePtr& M) const { return annihilator_ideal(M); }
  /// Annihilator of Ext*(M, N) under both actions. Elements of degree
  /// n ≤ D/2 are tested against Ext^m(M, N) for m ≤ D - n.
  VarietyIdeal variety_pair(const ModulePtr& M, const ModulePtr& N) const;

  /// Ideal from per-degree kernels of monomial evaluation maps.
  /// `images(n, value)` returns the image of an HH^n class.
  VarietyIdeal kernel_ideal(std::size_t max_n, const std::function<Vec(std::size_t, const Vec&)>& images) const;

 private:
  AlgebraPtr A_;
  std::size_t D_;
  std::unique_ptr<HochschildRing> H_;
  ReducedRing red_;
  bool fg_warning_ = false;
  unsigned gb_cap_;
  ModulePtr k_;
  mutable std::mutex mutex_;
  mutable std::map<const Representation*, std::pair<ModulePtr, std::unique_ptr<CharMap>>> maps_;
};

}  // namespace svar
