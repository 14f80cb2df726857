#pragma once
// Derived layer: projective models of bounded complexes, derived Hom,
// Koszul objects, perfection, complexity, periodicity and varieties of
// complexes.

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "svar/complex.hpp"
#include "svar/variety.hpp"

namespace svar {

/// Bounded-above cochain complex of projectives, extended downward on demand.
class CochainProjectives {
 public:
  virtual ~CochainProjectives() = default;
  virtual const AlgebraPtr& algebra() const = 0;
  virtual int top() const = 0;
  /// P^m; zero above top() and below the end of a finite complex.
  virtual const ProjectiveModule& term(int m) const = 0;
  /// d^m: P^m -> P^{m+1} as a full matrix.
  virtual Matrix diff(int m) const = 0;
};

/// The minimal resolution of a module, P^{-j} = P_j.
class ResolutionComplex : public CochainProjectives {
 public:
  explicit ResolutionComplex(ResolutionPtr R);
  const AlgebraPtr& algebra() const override { return R_->algebra(); }
  int top() const override { return 0; }
  const ProjectiveModule& term(int m) const override;
  Matrix diff(int m) const override;
  const Resolution& resolution() const { return *R_; }

 private:
  ResolutionPtr R_;
  ProjectiveModule zero_;
};

/// pX -> X built from the top degree down: P^n covers the kernel of the
/// cone differential modulo the image of X^{n-1}.
class ProjectiveModel : public CochainProjectives {
 public:
  explicit ProjectiveModel(BoundedComplex X);

  const BoundedComplex& complex() const { return X_; }
  const AlgebraPtr& algebra() const override { return X_.algebra(); }
  int top() const override { return X_.empty() ? 0 : X_.hi(); }
  const ProjectiveModule& term(int m) const override;
  Matrix diff(int m) const override;
  /// π^m: P^m -> X^m.
  Matrix to_complex(int m) const;
  /// Lowest nonzero degree if the model is known to stop at or above `floor`.
  /// Gives up once a term has dimension above `dim_budget`; `reached` is
  /// set to the lowest degree computed.
  std::optional<int> bottom(int floor, std::size_t dim_budget = SIZE_MAX, int* reached = nullptr) const;
  /// Brutal truncation P^{lo..top} as a complex.
  BoundedComplex truncation(int lo) const;

 private:
  void extend_to(int m) const;  // caller holds mutex_
  void step() const;

  BoundedComplex X_;
  mutable std::recursive_mutex mutex_;
  // index top - m
  mutable std::deque<ProjectiveModule> terms_;
  mutable std::deque<Matrix> diffs_;  // d^m into P^{m+1}
  mutable std::deque<Matrix> pis_;
  mutable bool finished_ = false;
  ProjectiveModule zero_;
};

/// Cohomology of Hom(P, Y) for P a bounded-above complex of projectives.
/// Classes of degree i are chain maps P -> Y[i] up to homotopy.
class HomComplex {
 public:
  using Components = std::map<int, Matrix>;  // m -> generator images of P^m -> Y^{m+i}

  HomComplex(const CochainProjectives& P, BoundedComplex Y);

  const CochainProjectives& source() const { return P_; }
  const BoundedComplex& target() const { return Y_; }
  std::size_t dim(int i) const;
  std::vector<std::size_t> dims(int lo, int hi) const;
  Components cocycle(int i, std::span<const Elem> coords) const;
  /// Throws UsageError when the input is not a cocycle.
  Vec coords(int i, const Components& f) const;
  /// Full matrix of a component.
  Matrix full(int m, int i, const Components& f) const;

 private:
  struct Block {
    int m;
    std::size_t k;
    std::vector<std::size_t> idx;
    std::size_t offset;
  };
  struct Degree {
    std::vector<Block> blocks;
    std::size_t dim = 0;
    Matrix delta;
    bool delta_built = false;
    Matrix boundaries, reps;
    std::unique_ptr<LinearSolver> solver;
  };
  Degree& layout(int i) const;
  void build_delta(int i) const;
  const Degree& degree(int i) const;
  Vec flatten(const Degree& D, const Components& f, int i) const;
  Components unflatten(const Degree& D, std::span<const Elem> v, int i) const;

  const CochainProjectives& P_;
  BoundedComplex Y_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<int, std::unique_ptr<Degree>> degrees_;
};

/// dim Hom_D(X, Y[i]) for i in [lo, hi].
std::vector<std::size_t> derived_hom(const BoundedComplex& X, const BoundedComplex& Y, int lo, int hi);

/// Action of a degree-n HH class on H^i Hom(P_B, Y) for a module B through
/// the lift of φ_B(h) to the minimal resolution of B: x ↦ x ∘ (h·1).
Vec act_on_hom(const CharMap& phiB, const HomComplex& hom, std::size_t n, std::span<const Elem> h, int i,
               std::span<const Elem> x);

/// Hom*(pX, Λ/r) with the action of HH through φ_{Λ/r}: x ↦ φ(h) ∘ x̃,
/// x̃ the lift of x along the resolution of Λ/r.
class TopAction {
 public:
  TopAction(const VarietyContext& ctx, const BoundedComplex& X);

  int lowest() const { return -model_.top(); }
  std::size_t dim(int i) const { return hom_.dim(i); }
  /// h in HH^n applied to a class of Hom^i(pX, Λ/r).
  Vec apply(std::size_t n, std::span<const Elem> h, int i, std::span<const Elem> x) const;
  /// Images of all basis classes with lowest() <= i, i + n <= lowest() + D.
  Vec images(std::size_t n, std::span<const Elem> h) const;

 private:
  const std::vector<Matrix>& lift(int i, std::span<const Elem> x, std::size_t depth) const;

  const VarietyContext& ctx_;
  ProjectiveModel model_;
  HomComplex hom_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, Vec>, std::vector<Matrix>> lifts_;
};

// --- Koszul objects -----------------------------------------------------------------

/// K_h = cone(Q -> Λ[n]) where Q = (Ω^n Λ -> B_{n-1} -> ... -> B_0) is the
/// truncated bimodule resolution; K_h ⊗_Λ X realizes X⧸h.
BoundedComplex koszul_bimodule_complex(const HochschildRing& H, std::size_t n, std::span<const Elem> h);
BoundedComplex koszul_object(const HochschildRing& H, const BoundedComplex& X, std::size_t n,
                             std::span<const Elem> h);
/// Pushout of Ω^n Λ -> B_{n-1} along h: 0 -> Λ -> M_h -> Ω^{n-1} Λ -> 0.
Representation bimodule_koszul(const HochschildRing& H, std::size_t n, std::span<const Elem> h);

// --- classification -----------------------------------------------------------------

enum class Verdict { Yes, No, Unknown };
const char* to_string(Verdict v);

struct PerfectReport {
  Verdict perfect = Verdict::Unknown;
  std::optional<BoundedComplex> witness;  // complex of projectives when perfect
  int checked_to = 0;                     // lowest degree examined
  bool budget_hit = false;                // a model term exceeded the dimension budget
  bool variety_certificate = false;       // V(X) ⊄ V(H^+) decided "no"
};

/// Syzygy stabilization on pX below the amplitude, up to `syzygy_bound`
/// further steps; the variety test (when ctx is given) upgrades unknown.
PerfectReport is_perfect(const BoundedComplex& X, std::size_t syzygy_bound = 20,
                         const VarietyContext* ctx = nullptr);

/// V(X) as the annihilator of Hom*(X, Λ/r) under the action through Λ/r.
VarietyIdeal complex_variety(const VarietyContext& ctx, const BoundedComplex& X);

struct ComplexityReport {
  int by_growth = 0;   // -1 for exponential growth
  int by_variety = 0;
  std::vector<std::size_t> dims;  // dim Hom(X, k[i]) from i = -top
  bool mismatch = false;
  std::string diagnostic;
};
ComplexityReport complexity(const VarietyContext& ctx, const BoundedComplex& X);

struct Periodicity {
  bool found = false;
  bool unknown = false;  // an isomorphism test ran out of budget
  std::size_t start = 0, period = 0, bound = 0;
};
/// Smallest s + p, then smallest s, with Ω^{s+p} M ≅ Ω^s M ≠ 0.
Periodicity periodicity(const ModulePtr& M, std::size_t bound);

struct Realization {
  BoundedComplex object;
  VarietyIdeal variety;
  VarietyIdeal expected;  // V(hs) ∩ V(M)
  Tri matches = Tri::Unknown;
};
Realization realize_subvariety(const VarietyContext& ctx, const BoundedComplex& M, const std::vector<Poly>& hs);

struct PerfectReduction {
  std::vector<Poly> classes;
  std::vector<Representation> bimodules;
  BoundedComplex result;
  PerfectReport witness;
  std::vector<int> dims;  // dim of the running intersection after each step
};
/// Greedy system of parameters for V(X); tensors the M_h onto X. Throws
/// ParameterSearchFailed when no class of degree <= D cuts the dimension.
PerfectReduction reduce_to_perfect(const VarietyContext& ctx, const BoundedComplex& X);

}  // namespace svar
