#include "svar/resolution.hpp"

#include "svar/error.hpp"

namespace svar {

// --- ProjectiveChain --------------------------------------------------------------

const LinearSolver& ProjectiveChain::solver(std::size_t i, int v) const {
  std::lock_guard lock(solver_mutex_);
  auto& slot = solvers_[{i, v}];
  if (!slot) {
    const Matrix& A = i == 0 ? augmentation_full() : differential_full(i);
    auto cols = term(i).indices_at(v);
    slot = std::make_unique<LinearSolver>(algebra()->field(), select_columns(A, cols));
  }
  return *slot;
}

std::optional<Vec> ProjectiveChain::preimage(std::size_t i, int v, std::span<const Elem> y) const {
  const auto& S = solver(i, v);
  auto x = S.solve(y);
  if (!x) return std::nullopt;
  const auto& P = term(i);
  auto cols = P.indices_at(v);
  Vec out(P.dim(), 0);
  for (std::size_t j = 0; j < cols.size(); ++j) out[cols[j]] = (*x)[j];
  return out;
}

// --- StaticChain --------------------------------------------------------------------

StaticChain::StaticChain(AlgebraPtr alg, std::vector<ProjectiveModule> terms, std::vector<Matrix> diffs,
                         Matrix augmentation_full)
    : alg_(std::move(alg)), terms_(std::move(terms)), diffs_(std::move(diffs)), aug_full_(std::move(augmentation_full)) {
  zero_ = ProjectiveModule(alg_, {});
  if (diffs_.size() != terms_.size()) throw UsageError("chain: one differential slot per term expected");
  full_.resize(terms_.size());
  for (std::size_t i = 1; i < terms_.size(); ++i) full_[i] = expand_from_projective(terms_[i], diffs_[i], terms_[i - 1]);
}

const ProjectiveModule& StaticChain::term(std::size_t i) const { return i < terms_.size() ? terms_[i] : zero_; }

const Matrix& StaticChain::differential(std::size_t i) const {
  if (i == 0 || i >= terms_.size()) throw UsageError("chain: differential index out of range");
  return diffs_[i];
}

const Matrix& StaticChain::differential_full(std::size_t i) const {
  if (i == 0 || i >= terms_.size()) throw UsageError("chain: differential index out of range");
  return full_[i];
}

// --- Resolution -----------------------------------------------------------------

Resolution::Resolution(ModulePtr M) : M_(std::move(M)) {}

void Resolution::step() const {
  const std::size_t n = terms_.size();
  if (n == 0) {
    auto C = projective_cover(*M_);
    terms_.push_back(C.P);
    diffs_.push_back(C.gen_images);
    full_.push_back(C.full);
    return;
  }
  const auto& F = M_->field();
  const auto& prev = terms_[n - 1];
  const std::vector<int>& dst = n == 1 ? M_->vertices() : terms_[n - 2].vertices();
  Subspace U = kernel_subspace(F, prev.vertices(), dst, full_[n - 1]);
  SubmoduleData S = submodule(prev.rep(), U);
  auto C = projective_cover(S.rep);
  terms_.push_back(C.P);
  diffs_.push_back(mul(F, U.basis, C.gen_images));
  full_.push_back(mul(F, U.basis, C.full));
  syz_.push_back(std::move(S));
}

void Resolution::extend_to(std::size_t n) const {
  std::lock_guard lock(mutex_);
  while (terms_.size() <= n) step();
}

const ProjectiveModule& Resolution::term(std::size_t i) const {
  std::lock_guard lock(mutex_);
  extend_to(i);
  return terms_[i];
}

const Matrix& Resolution::differential(std::size_t i) const {
  if (i == 0) throw UsageError("resolution: d_0 does not exist, use the augmentation");
  std::lock_guard lock(mutex_);
  extend_to(i);
  return diffs_[i];
}

const Matrix& Resolution::differential_full(std::size_t i) const {
  if (i == 0) throw UsageError("resolution: d_0 does not exist, use the augmentation");
  std::lock_guard lock(mutex_);
  extend_to(i);
  return full_[i];
}

const Matrix& Resolution::augmentation() const {
  std::lock_guard lock(mutex_);
  extend_to(0);
  return diffs_[0];
}

const Matrix& Resolution::augmentation_full() const {
  std::lock_guard lock(mutex_);
  extend_to(0);
  return full_[0];
}

const SubmoduleData& Resolution::syzygy_data(std::size_t n) const {
  if (n == 0) throw UsageError("resolution: Ω^0 is the module itself");
  std::lock_guard lock(mutex_);
  extend_to(n);
  return syz_[n - 1];
}

Representation Resolution::syzygy(std::size_t n) const {
  if (n == 0) return *M_;
  return syzygy_data(n).rep;
}

std::vector<std::size_t> Resolution::betti(std::size_t n) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= n; ++i) out.push_back(term(i).rank());
  return out;
}

std::vector<std::size_t> Resolution::betti_by_vertex(std::size_t i) const {
  std::vector<std::size_t> out(algebra()->num_vertices(), 0);
  for (int v : term(i).tops()) ++out[v];
  return out;
}

bool Resolution::check_exact(std::size_t i) const {
  const auto& F = M_->field();
  if (i == 0 && rank(F, augmentation_full()) != M_->dim()) return false;
  const Matrix& d = i == 0 ? augmentation_full() : differential_full(i);
  const std::size_t ker = term(i).dim() - rank(F, d);
  const Matrix& next = differential_full(i + 1);
  if (!mul(F, d, next).is_zero()) return false;
  return rank(F, next) == ker;
}

bool Resolution::check_minimal(std::size_t i) const {
  if (i == 0) return true;
  const auto& P = term(i - 1);
  const Matrix& d = differential_full(i);
  for (std::size_t k = 0; k < P.rank(); ++k) {
    const std::size_t g = P.generator_index(k);
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (d(g, c)) return false;
  }
  return true;
}

// --- cache --------------------------------------------------------------------------

ResolutionPtr resolution_of(const ModulePtr& M) {
  static std::mutex m;
  static std::map<const Representation*, std::pair<std::weak_ptr<const Representation>, ResolutionPtr>> cache;
  std::lock_guard lock(m);
  auto it = cache.find(M.get());
  if (it != cache.end()) {
    if (auto alive = it->second.first.lock(); alive && alive == M) return it->second.second;
    cache.erase(it);
  }
  auto R = std::make_shared<const Resolution>(M);
  cache[M.get()] = {M, R};
  return R;
}

Representation syzygy(const ModulePtr& M, std::size_t n) { return resolution_of(M)->syzygy(n); }

// --- lifting --------------------------------------------------------------------------

void extend_lift(const ProjectiveChain& P, std::size_t n, const Matrix& f, const ProjectiveChain& Q,
                 std::size_t depth, std::vector<Matrix>& lifts) {
  const auto& F = P.algebra()->field();
  while (lifts.size() <= depth) {
    const std::size_t i = lifts.size();
    const auto& src = P.term(n + i);
    const auto& dst = Q.term(i);
    Matrix out(dst.dim(), src.rank());
    Matrix prev_full;
    if (i > 0) prev_full = expand_from_projective(P.term(n + i - 1), lifts[i - 1], Q.term(i - 1));
    for (std::size_t k = 0; k < src.rank(); ++k) {
      Vec y = i == 0 ? f.column(k) : mul_vec(F, prev_full, P.differential(n + i).column(k));
      if (is_zero_vec(y)) continue;
      auto x = Q.preimage(i, src.tops()[k], y);
      if (!x) throw LiftFailed("lift: no preimage in degree " + std::to_string(i) + " (input is not a cocycle)");
      out.set_column(k, *x);
    }
    lifts.push_back(std::move(out));
  }
}

std::vector<Matrix> lift_map(const ProjectiveChain& P, std::size_t n, const Matrix& f, const ProjectiveChain& Q,
                             std::size_t depth) {
  std::vector<Matrix> lifts;
  extend_lift(P, n, f, Q, depth, lifts);
  return lifts;
}

}  // namespace svar
