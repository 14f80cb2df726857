#pragma once
// Ext groups with Yoneda products, Hochschild cohomology, the characteristic
// map HH*(Λ) -> Ext*(M, M) and the finite generation report.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "svar/resolution.hpp"

namespace svar {

/// Ext^n(M, N) as cocycles Hom(P_n, N) modulo coboundaries, P the minimal
/// resolution of M. Cocycles are generator images (N.dim × rank P_n).
class ExtSpace {
 public:
  ExtSpace(ModulePtr M, ModulePtr N);

  const ModulePtr& source() const { return M_; }
  const ModulePtr& target() const { return N_; }
  const Resolution& resolution() const { return *R_; }
  const PrimeField& field() const { return M_->field(); }

  std::size_t dim(std::size_t n) const;
  std::vector<std::size_t> dims(std::size_t nmax) const;

  /// Cocycle representing the class with the given coordinates.
  Matrix cocycle(std::size_t n, std::span<const Elem> coords) const;
  Matrix basis_cocycle(std::size_t n, std::size_t i) const;
  /// Coordinates of the class of a cocycle. Throws UsageError when the
  /// input is not a cocycle.
  Vec coords(std::size_t n, const Matrix& cocycle) const;
  bool is_cocycle(std::size_t n, const Matrix& f) const;
  /// Dimension of Hom(P_n, N) and of the coboundaries inside it.
  std::size_t hom_dim(std::size_t n) const;
  std::size_t coboundary_dim(std::size_t n) const;

  /// Lift of the class along the resolution of N to depth `depth`
  /// (maps P_{n+i} -> Q_i). Cached.
  const std::vector<Matrix>& lift(std::size_t n, std::span<const Elem> coords, std::size_t depth) const;

  /// Coordinates of the identity in Ext^0(M, M); requires M == N.
  Vec identity() const;

 private:
  struct Degree {
    std::vector<std::size_t> offsets;          // per generator of P_n into the flat hom vector
    std::vector<std::vector<std::size_t>> idx;  // per generator: indices of e_v N
    std::size_t hom_dim = 0;
    Matrix delta;       // Hom(P_n,N) -> Hom(P_{n+1},N)
    bool delta_built = false;
    Matrix boundaries;  // basis of im delta_{n-1}
    Matrix reps;        // representative cocycles
    std::unique_ptr<LinearSolver> solver;  // on [boundaries | reps]
  };
  const Degree& degree(std::size_t n) const;
  Degree& layout(std::size_t n) const;
  Vec flatten(const Degree& D, const Matrix& gens) const;
  Matrix unflatten(std::size_t n, const Degree& D, std::span<const Elem> flat) const;
  void build_delta(std::size_t n) const;

  ModulePtr M_, N_;
  ResolutionPtr R_, RN_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<std::size_t, std::unique_ptr<Degree>> degrees_;
  mutable std::map<std::pair<std::size_t, Vec>, std::vector<Matrix>> lifts_;
};

/// f·g = f ∘ lift(g) for f in Ext^m(N, L) (space NL) and g in Ext^n(M, N)
/// (space MN), returned as coordinates in Ext^{m+n}(M, L) (space ML).
Vec yoneda_product(const ExtSpace& NL, std::size_t m, std::span<const Elem> f, const ExtSpace& MN, std::size_t n,
                   std::span<const Elem> g, const ExtSpace& ML);

// --- Hochschild cohomology --------------------------------------------------------

using Exponents = std::vector<unsigned>;

struct RingGenerator {
  std::string name;
  std::size_t degree = 0;
  Vec coords;  // in HH^degree
};

struct RingRelation {
  std::size_t degree = 0;
  std::vector<std::pair<Exponents, Elem>> terms;
};

struct GradedRingPresentation {
  std::uint32_t p = 2;
  std::vector<RingGenerator> generators;
  std::vector<RingRelation> relations;
  std::size_t verified_to = 0;
  /// Relations are complete through this degree (may be lower than
  /// verified_to when the monomial budget runs out).
  std::size_t relations_verified_to = 0;

  std::string monomial_string(const Exponents& e) const;
  std::string relation_string(const RingRelation& r) const;
};

struct HochschildOptions {
  std::size_t max_degree = kDefaultDegreeBound;
  /// Degrees whose bimodule resolution term exceeds this dimension are
  /// not computed.
  std::size_t dim_budget = 1500;
  /// Relation search stops at the first degree with more monomials.
  std::size_t monomial_budget = 4000;
};

class HochschildRing {
 public:
  HochschildRing(AlgebraPtr A, HochschildOptions opts = {});

  const AlgebraPtr& algebra() const { return A_; }
  const AlgebraPtr& enveloping_algebra() const { return env_; }
  const ModulePtr& bimodule() const { return L_; }
  const ExtSpace& ext() const { return *E_; }
  const Resolution& resolution() const { return E_->resolution(); }
  const PrimeField& field() const { return A_->field(); }

  /// Highest degree computed within the dimension budget.
  std::size_t verified_to() const { return verified_to_; }
  std::size_t dim(std::size_t n) const { return E_->dim(n); }
  Vec one() const { return E_->identity(); }

  Vec product(std::size_t m, std::span<const Elem> a, std::size_t n, std::span<const Elem> b) const;

  const GradedRingPresentation& presentation() const;
  const std::vector<RingGenerator>& generators() const;
  /// Value of an ordered monomial in the generators (memoized).
  const Vec& evaluate(const Exponents& e) const;
  std::size_t degree_of(const Exponents& e) const;
  /// Monomials of degree n with the exponent bounds used for relations:
  /// odd generators square to zero in odd characteristic, degree-0
  /// generators are nilpotent.
  std::vector<Exponents> monomials(std::size_t n) const;

  /// Central element of Λ represented by an HH^0 class.
  Vec centre_element(std::span<const Elem> coords) const;

  /// Number of basis pairs (i, j) with |i| + |j| <= max_total where
  /// h_i h_j != (-1)^{|i||j|} h_j h_i.
  std::size_t commutativity_violations(std::size_t max_total) const;

 private:
  void extract_generators() const;
  void extract_relations() const;
  // the *_raw variants read pres_ directly and are safe during extraction
  const Vec& evaluate_raw(const Exponents& e) const;
  std::size_t degree_of_raw(const Exponents& e) const;
  std::vector<Exponents> monomials_raw(std::size_t n) const;

  AlgebraPtr A_, env_;
  ModulePtr L_;
  std::unique_ptr<ExtSpace> E_;
  HochschildOptions opts_;
  std::size_t verified_to_ = 0;
  std::size_t nil_bound_ = 1;
  mutable std::once_flag gens_once_, pres_once_;
  mutable GradedRingPresentation pres_;
  mutable std::recursive_mutex eval_mutex_;
  mutable std::map<Exponents, Vec> eval_cache_;
};

/// φ_M: HH*(Λ) -> Ext*(M, M), by tensoring the bimodule resolution with M
/// and comparing with the minimal resolution of M.
class CharMap {
 public:
  CharMap(const HochschildRing& H, ModulePtr M, std::size_t max_degree);

  const ExtSpace& ext() const { return *E_; }
  const ModulePtr& module() const { return M_; }
  std::size_t max_degree() const { return max_degree_; }

  /// Coordinates of φ_M(h) in Ext^n(M, M).
  Vec apply(std::size_t n, std::span<const Elem> h) const;
  /// Matrix of φ_M in degree n: Ext^n(M,M)-dim × HH^n-dim.
  Matrix matrix(std::size_t n) const;

 private:
  const HochschildRing& H_;
  ModulePtr M_;
  std::unique_ptr<ExtSpace> E_;
  std::size_t max_degree_;
  std::unique_ptr<StaticChain> T_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> tgens_;  // per degree: (P generator, M index)
  std::vector<Matrix> comparison_;
};

/// h·f = φ_N(h)·f and f·φ_M(h), for f in Ext^n(M, N).
struct HAction {
  Vec left;
  Vec right;
};
HAction h_action(const CharMap& phiM, const CharMap& phiN, const ExtSpace& MN, std::size_t hdeg,
                 std::span<const Elem> h, std::size_t n, std::span<const Elem> f);

// --- finite generation -------------------------------------------------------------

enum class Growth { Zero, Polynomial, Exponential };

struct GrowthFit {
  Growth kind = Growth::Zero;
  int degree = 0;  // polynomial degree (complexity - 1) when kind == Polynomial
};

/// Classifies a dimension sequence on the window [D/2, D].
GrowthFit classify_growth(const std::vector<std::size_t>& dims);

struct FgReport {
  std::vector<std::pair<std::string, std::size_t>> hh_generators;
  std::size_t hh_last_new_degree = 0;
  std::size_t hh_verified_to = 0;
  std::vector<std::size_t> module_generator_degrees;  // Ext*(Λ/r, Λ/r) over the φ-image
  std::size_t module_last_new_degree = 0;
  std::size_t module_verified_to = 0;
  std::vector<std::size_t> ext_dims;
  GrowthFit growth;
  std::string verdict;  // "fg-plausible to degree D" or "fg-violated (exponential growth)"
  bool violated = false;
};

FgReport fg_check(const AlgebraPtr& A, std::size_t D, const HochschildOptions& opts = {});

}  // namespace svar
