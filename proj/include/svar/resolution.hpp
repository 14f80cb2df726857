#pragma once
// Projective resolutions, syzygies and lifting of maps along resolutions.
//
// Homological indexing: term(i) = P_i, differential(i): P_i -> P_{i-1}
// for i >= 1, augmentation: P_0 -> M. Maps out of a projective are stored
// as generator images (one column per summand).

#include <cstddef>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "svar/module.hpp"

namespace svar {

inline constexpr std::size_t kDefaultDegreeBound = 10;

/// A chain of projectives with an augmentation into some module. Subclasses
/// decide whether terms are computed eagerly or on demand.
class ProjectiveChain {
 public:
  virtual ~ProjectiveChain() = default;
  virtual const AlgebraPtr& algebra() const = 0;
  virtual const ProjectiveModule& term(std::size_t i) const = 0;
  /// Generator images of d_i in P_{i-1}, i >= 1.
  virtual const Matrix& differential(std::size_t i) const = 0;
  virtual const Matrix& differential_full(std::size_t i) const = 0;
  virtual const Matrix& augmentation_full() const = 0;

  /// Solver for "find x in e_v P_i with d_i x = y" (i = 0 uses the
  /// augmentation). Cached per (i, v).
  const LinearSolver& solver(std::size_t i, int v) const;
  /// Some x in e_v P_i mapping to y, or nullopt.
  std::optional<Vec> preimage(std::size_t i, int v, std::span<const Elem> y) const;

 private:
  mutable std::mutex solver_mutex_;
  mutable std::map<std::pair<std::size_t, int>, std::unique_ptr<LinearSolver>> solvers_;
};

/// Explicitly stored finite chain, e.g. a tensored resolution or a
/// projective model of a complex.
class StaticChain : public ProjectiveChain {
 public:
  /// diffs[i] are generator images of d_i (diffs[0] is ignored); the
  /// augmentation is given as a full matrix.
  StaticChain(AlgebraPtr alg, std::vector<ProjectiveModule> terms, std::vector<Matrix> diffs,
              Matrix augmentation_full);

  const AlgebraPtr& algebra() const override { return alg_; }
  const ProjectiveModule& term(std::size_t i) const override;
  const Matrix& differential(std::size_t i) const override;
  const Matrix& differential_full(std::size_t i) const override;
  const Matrix& augmentation_full() const override { return aug_full_; }
  std::size_t length() const { return terms_.size(); }

 private:
  AlgebraPtr alg_;
  std::vector<ProjectiveModule> terms_;
  std::vector<Matrix> diffs_;  // diffs_[i] for i >= 1; diffs_[0] empty
  std::vector<Matrix> full_;
  Matrix aug_full_;
  ProjectiveModule zero_;
};

/// Minimal projective resolution, extended on demand. Safe to share across
/// threads; extension serializes on the tower.
class Resolution : public ProjectiveChain {
 public:
  explicit Resolution(ModulePtr M);

  const ModulePtr& module() const { return M_; }
  const AlgebraPtr& algebra() const override { return M_->algebra(); }

  void extend_to(std::size_t n) const;
  const ProjectiveModule& term(std::size_t i) const override;
  const Matrix& differential(std::size_t i) const override;
  const Matrix& differential_full(std::size_t i) const override;
  const Matrix& augmentation() const;
  const Matrix& augmentation_full() const override;

  /// Ω^n(M) as a submodule of P_{n-1}, n >= 1.
  const SubmoduleData& syzygy_data(std::size_t n) const;
  /// Ω^n(M); Ω^0(M) = M.
  Representation syzygy(std::size_t n) const;

  /// Ranks of P_0..P_n.
  std::vector<std::size_t> betti(std::size_t n) const;
  /// Multiplicity of the projective at vertex v in P_i.
  std::vector<std::size_t> betti_by_vertex(std::size_t i) const;

  /// im d_{i+1} = ker d_i (i = 0: kernel of the augmentation) and the
  /// augmentation is onto.
  bool check_exact(std::size_t i) const;
  /// im d_i ⊆ rad P_{i-1}.
  bool check_minimal(std::size_t i) const;

 private:
  void step() const;  // computes the next term; caller holds the lock

  ModulePtr M_;
  mutable std::recursive_mutex mutex_;
  mutable std::deque<ProjectiveModule> terms_;
  mutable std::deque<Matrix> diffs_;  // diffs_[0] = augmentation generator images
  mutable std::deque<Matrix> full_;   // full_[0] = augmentation
  mutable std::deque<SubmoduleData> syz_;  // syz_[n-1] = Ω^n
};

using ResolutionPtr = std::shared_ptr<const Resolution>;

/// Shared resolution for a module value; identical pointers share towers.
ResolutionPtr resolution_of(const ModulePtr& M);

/// Syzygy Ω^n(M) via the shared cache.
Representation syzygy(const ModulePtr& M, std::size_t n);

/// Lift of f: P_n -> X (generator images, X the augmentation target of Q)
/// to maps f_i: P_{n+i} -> Q_i, i = 0..depth. Appends to `lifts`, so an
/// existing partial lift is continued. Signs are not applied. Throws
/// LiftFailed when a required preimage does not exist.
void extend_lift(const ProjectiveChain& P, std::size_t n, const Matrix& f, const ProjectiveChain& Q,
                 std::size_t depth, std::vector<Matrix>& lifts);

std::vector<Matrix> lift_map(const ProjectiveChain& P, std::size_t n, const Matrix& f, const ProjectiveChain& Q,
                             std::size_t depth);

}  // namespace svar
