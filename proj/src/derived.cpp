#include "svar/derived.hpp"
#include "svar/error.hpp"

namespace svar {

namespace {

Matrix generator_columns(const ProjectiveModule& P, const Matrix& full) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < P.rank(); ++k) idx.push_back(P.generator_index(k));
  return select_columns(full, idx);
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

// --- ResolutionComplex --------------------------------------------------------------

ResolutionComplex::ResolutionComplex(ResolutionPtr R) : R_(std::move(R)), zero_(R_->algebra(), {}) {}

const ProjectiveModule& ResolutionComplex::term(int m) const {
  if (m > 0) return zero_;
  return R_->term(static_cast<std::size_t>(-m));
}

Matrix ResolutionComplex::diff(int m) const {
  if (m >= 0) return Matrix(0, term(m).dim());
  return R_->differential_full(static_cast<std::size_t>(-m));
}

// --- ProjectiveModel ----------------------------------------------------------------

ProjectiveModel::ProjectiveModel(BoundedComplex X) : X_(std::move(X)) {
  if (!X_.algebra()) throw UsageError("projective model: complex without an algebra");
  zero_ = ProjectiveModule(X_.algebra(), {});
  if (X_.empty()) finished_ = true;
}

void ProjectiveModel::step() const {
  const auto& F = X_.algebra()->field();
  const int n = top() - static_cast<int>(terms_.size());
  const ProjectiveModule& P1 = term(n + 1);
  const ProjectiveModule& P2 = term(n + 2);
  const Representation& Xn = X_.term(n);
  const Representation& X1 = X_.term(n + 1);

  // cone of π in degree n: P^{n+1} ⊕ X^n -> P^{n+2} ⊕ X^{n+1}
  Representation C = direct_sum(P1.rep(), Xn);
  Matrix dC(P2.dim() + X1.dim(), C.dim());
  set_block(dC, 0, 0, scaled(F, diff(n + 1), F.neg(1)));
  set_block(dC, P2.dim(), 0, to_complex(n + 1));
  set_block(dC, P2.dim(), P1.dim(), X_.diff(n));

  Subspace K = kernel_subspace(F, C.vertices(), concat(P2.vertices(), X1.vertices()), dC);
  SubmoduleData Kmod = submodule(C, K);
  Matrix dX = X_.diff(n - 1);
  Matrix J(K.dim(), dX.cols());
  for (std::size_t j = 0; j < dX.cols(); ++j) {
    Vec v(C.dim(), 0);
    for (std::size_t r = 0; r < Xn.dim(); ++r) v[P1.dim() + r] = dX(r, j);
    J.set_column(j, K.coords(v));
  }
  QuotientData Q = quotient(Kmod.rep, make_subspace(F, Kmod.rep.vertices(), J));
  ProjectiveCover cover = projective_cover(Q.rep);
  Matrix gens = mul(F, K.basis, mul(F, Q.section, cover.gen_images));
  Matrix g = expand_from_projective(cover.P, gens, C);

  const bool below = n < X_.lo();
  const bool zero = cover.P.rank() == 0;
  diffs_.push_back(scaled(F, block(g, 0, 0, P1.dim(), cover.P.dim()), F.neg(1)));
  pis_.push_back(block(g, P1.dim(), 0, Xn.dim(), cover.P.dim()));
  terms_.push_back(std::move(cover.P));
  // below the amplitude J = 0, so a zero cover means K = 0 and all lower
  // cone terms vanish
  if (below && zero) finished_ = true;
}

void ProjectiveModel::extend_to(int m) const {
  while (!finished_ && top() - static_cast<int>(terms_.size()) >= m) step();
}

const ProjectiveModule& ProjectiveModel::term(int m) const {
  std::lock_guard lock(mutex_);
  if (m > top()) return zero_;
  extend_to(m);
  const auto j = static_cast<std::size_t>(top() - m);
  return j < terms_.size() ? terms_[j] : zero_;
}

Matrix ProjectiveModel::diff(int m) const {
  std::lock_guard lock(mutex_);
  if (m >= top()) return Matrix(0, term(m).dim());
  extend_to(m);
  const auto j = static_cast<std::size_t>(top() - m);
  if (j >= terms_.size()) return Matrix(term(m + 1).dim(), 0);
  return diffs_[j];
}

Matrix ProjectiveModel::to_complex(int m) const {
  std::lock_guard lock(mutex_);
  if (m > top()) return Matrix(X_.dim(m), 0);
  extend_to(m);
  const auto j = static_cast<std::size_t>(top() - m);
  if (j >= terms_.size()) return Matrix(X_.dim(m), 0);
  return pis_[j];
}

std::optional<int> ProjectiveModel::bottom(int floor, std::size_t dim_budget, int* reached) const {
  std::lock_guard lock(mutex_);
  while (!finished_ && top() - static_cast<int>(terms_.size()) >= floor) {
    step();
    if (terms_.back().dim() > dim_budget) break;
  }
  if (reached) *reached = top() - static_cast<int>(terms_.size()) + 1;
  if (!finished_) return std::nullopt;
  int low = top() + 1;
  for (std::size_t j = 0; j < terms_.size(); ++j)
    if (terms_[j].rank() > 0) low = top() - static_cast<int>(j);
  return low;
}

BoundedComplex ProjectiveModel::truncation(int lo) const {
  std::vector<Representation> terms;
  std::vector<Matrix> diffs;
  for (int m = lo; m <= top(); ++m) {
    terms.push_back(term(m).rep());
    if (m < top()) diffs.push_back(diff(m));
  }
  return BoundedComplex(X_.algebra(), lo, std::move(terms), std::move(diffs));
}

// --- HomComplex ---------------------------------------------------------------------

HomComplex::HomComplex(const CochainProjectives& P, BoundedComplex Y) : P_(P), Y_(std::move(Y)) {
  if (Y_.algebra() != P_.algebra()) throw UsageError("hom complex: different algebras");
}

HomComplex::Degree& HomComplex::layout(int i) const {
  std::lock_guard lock(mutex_);
  auto& slot = degrees_[i];
  if (!slot) {
    slot = std::make_unique<Degree>();
    if (!Y_.empty()) {
      for (int m = Y_.lo() - i; m <= std::min(Y_.hi() - i, P_.top()); ++m) {
        const auto& Pm = P_.term(m);
        const auto& Ym = Y_.term(m + i);
        for (std::size_t k = 0; k < Pm.rank(); ++k) {
          Block b{m, k, Ym.indices_at(Pm.tops()[k]), slot->dim};
          slot->dim += b.idx.size();
          slot->blocks.push_back(std::move(b));
        }
      }
    }
  }
  return *slot;
}

void HomComplex::build_delta(int i) const {
  std::lock_guard lock(mutex_);
  Degree& D = layout(i);
  if (D.delta_built) return;
  const Degree& D1 = layout(i + 1);
  const auto& F = P_.algebra()->field();
  std::map<std::pair<int, std::size_t>, const Block*> target;
  for (const auto& b : D1.blocks) target[{b.m, b.k}] = &b;
  const Elem sgn = F.neg(F.sign(i));  // -(-1)^i
  Matrix delta(D1.dim, D.dim);
  std::map<int, Matrix> dY, dP;
  for (const auto& b : D.blocks) {
    if (!dY.count(b.m)) dY[b.m] = Y_.diff(b.m + i);
    if (!dP.count(b.m - 1)) dP[b.m - 1] = P_.diff(b.m - 1);
    const Matrix& dy = dY[b.m];
    const Matrix& dp = dP[b.m - 1];
    const auto& Pm = P_.term(b.m);
    const auto& Pl = P_.term(b.m - 1);
    const auto& Ym = Y_.term(b.m + i);
    const auto& els = Pm.summand_elements(b.k);
    for (std::size_t s = 0; s < b.idx.size(); ++s) {
      const std::size_t col = b.offset + s;
      const std::size_t y = b.idx[s];
      // d_Y ∘ f on the same generator
      if (auto it = target.find({b.m, b.k}); it != target.end())
        for (std::size_t r = 0; r < it->second->idx.size(); ++r)
          delta(it->second->offset + r, col) = F.add(delta(it->second->offset + r, col), dy(it->second->idx[r], y));
      // -(-1)^i f ∘ d_P on the generators of P^{m-1}
      for (std::size_t kk = 0; kk < Pl.rank(); ++kk) {
        auto it = target.find({b.m - 1, kk});
        if (it == target.end()) continue;
        const std::size_t gcol = Pl.generator_index(kk);
        Vec acc(Ym.dim(), 0);
        for (std::size_t t = 0; t < els.size(); ++t) {
          const Elem c = dp(Pm.offset(b.k) + t, gcol);
          if (!c) continue;
          const Matrix& Ab = Ym.action_matrix(els[t]);
          for (std::size_t r = 0; r < Ym.dim(); ++r)
            if (Ab(r, y)) acc[r] = F.add(acc[r], F.mul(c, Ab(r, y)));
        }
        for (std::size_t r = 0; r < it->second->idx.size(); ++r) {
          const Elem a = acc[it->second->idx[r]];
          if (a) {
            Elem& e = delta(it->second->offset + r, col);
            e = F.add(e, F.mul(sgn, a));
          }
        }
      }
    }
  }
  D.delta = std::move(delta);
  D.delta_built = true;
}

const HomComplex::Degree& HomComplex::degree(int i) const {
  std::lock_guard lock(mutex_);
  Degree& D = layout(i);
  if (D.solver) return D;
  const auto& F = P_.algebra()->field();
  build_delta(i);
  build_delta(i - 1);
  Matrix Z = kernel_basis(F, D.delta);
  Matrix B = column_basis(F, layout(i - 1).delta);
  if (B.rows() != D.dim) B = Matrix(D.dim, 0);
  auto indep = independent_columns(F, hcat(B, Z));
  std::vector<std::size_t> pick;
  for (auto c : indep)
    if (c >= B.cols()) pick.push_back(c - B.cols());
  D.boundaries = std::move(B);
  D.reps = select_columns(Z, pick);
  D.solver = std::make_unique<LinearSolver>(F, hcat(D.boundaries, D.reps));
  return D;
}

std::size_t HomComplex::dim(int i) const { return degree(i).reps.cols(); }

std::vector<std::size_t> HomComplex::dims(int lo, int hi) const {
  std::vector<std::size_t> out;
  for (int i = lo; i <= hi; ++i) out.push_back(dim(i));
  return out;
}

Vec HomComplex::flatten(const Degree& D, const Components& f, int) const {
  Vec flat(D.dim, 0);
  for (const auto& b : D.blocks) {
    auto it = f.find(b.m);
    if (it == f.end()) continue;
    for (std::size_t s = 0; s < b.idx.size(); ++s) flat[b.offset + s] = it->second(b.idx[s], b.k);
  }
  return flat;
}

HomComplex::Components HomComplex::unflatten(const Degree& D, std::span<const Elem> v, int i) const {
  Components out;
  for (const auto& b : D.blocks) {
    auto& M = out[b.m];
    if (M.rows() == 0 && M.cols() == 0) M = Matrix(Y_.dim(b.m + i), P_.term(b.m).rank());
    for (std::size_t s = 0; s < b.idx.size(); ++s) M(b.idx[s], b.k) = v[b.offset + s];
  }
  return out;
}

HomComplex::Components HomComplex::cocycle(int i, std::span<const Elem> coords) const {
  const Degree& D = degree(i);
  if (coords.size() != D.reps.cols()) throw UsageError("hom complex: coordinate vector has the wrong length");
  const auto& F = P_.algebra()->field();
  Vec flat(D.dim, 0);
  for (std::size_t c = 0; c < coords.size(); ++c)
    if (coords[c])
      for (std::size_t r = 0; r < D.dim; ++r) flat[r] = F.add(flat[r], F.mul(coords[c], D.reps(r, c)));
  return unflatten(D, flat, i);
}

Vec HomComplex::coords(int i, const Components& f) const {
  const Degree& D = degree(i);
  auto x = D.solver->solve(flatten(D, f, i));
  if (!x) throw UsageError("hom complex: map is not a cocycle in degree " + std::to_string(i));
  return Vec(x->begin() + static_cast<long>(D.boundaries.cols()), x->end());
}

Matrix HomComplex::full(int m, int i, const Components& f) const {
  const auto& Pm = P_.term(m);
  const auto& Ym = Y_.term(m + i);
  auto it = f.find(m);
  if (it == f.end()) return Matrix(Ym.dim(), Pm.dim());
  return expand_from_projective(Pm, it->second, Ym);
}

std::vector<std::size_t> derived_hom(const BoundedComplex& X, const BoundedComplex& Y, int lo, int hi) {
  ProjectiveModel P(X);
  HomComplex H(P, Y);
  return H.dims(lo, hi);
}

Vec act_on_hom(const CharMap& phiB, const HomComplex& hom, std::size_t n, std::span<const Elem> h, int i,
               std::span<const Elem> x) {
  const auto& E = phiB.ext();
  auto* rc = dynamic_cast<const ResolutionComplex*>(&hom.source());
  if (!rc || &rc->resolution() != &E.resolution())
    throw UsageError("hom action: the hom complex must start from the resolution of the module");
  const auto& F = E.field();
  const auto& Y = hom.target();
  Vec c = phiB.apply(n, h);
  auto xs = hom.cocycle(i, x);
  HomComplex::Components out;
  const int nn = static_cast<int>(n);
  if (!Y.empty() && i - Y.lo() >= 0) {
    const auto depth = static_cast<std::size_t>(i - Y.lo());
    const auto& lifts = E.lift(n, c, depth);
    for (std::size_t j = 0; j <= depth; ++j) {
      const int src = -static_cast<int>(j);
      if (src + i > Y.hi()) continue;
      Matrix xf = hom.full(src, i, xs);
      const int m = src - nn;
      Matrix comp = mul(F, xf, lifts[j]);
      if (nn % 2 != 0 && m % 2 != 0) comp = scaled(F, comp, F.neg(1));
      out[m] = std::move(comp);
    }
  }
  return hom.coords(i + nn, out);
}

}  // namespace svar

namespace svar {

TopAction::TopAction(const VarietyContext& ctx, const BoundedComplex& X)
    : ctx_(ctx), model_(X), hom_(model_, BoundedComplex::stalk(*ctx.simple_top(), 0)) {
  if (X.algebra() != ctx.algebra()) throw UsageError("variety: complex over a different algebra");
}

const std::vector<Matrix>& TopAction::lift(int i, std::span<const Elem> x, std::size_t depth) const {
  std::lock_guard lock(mutex_);
  auto& slot = lifts_[{i, Vec(x.begin(), x.end())}];
  if (slot.size() > depth) return slot;
  std::vector<ProjectiveModule> terms;
  std::vector<Matrix> diffs;
  for (std::size_t j = 0; j <= depth; ++j) {
    const int m = -i - static_cast<int>(j);
    terms.push_back(model_.term(m));
    diffs.push_back(j == 0 ? Matrix() : generator_columns(model_.term(m), model_.diff(m)));
  }
  StaticChain chain(ctx_.algebra(), terms, std::move(diffs), Matrix(0, terms.front().dim()));
  auto comps = hom_.cocycle(i, x);
  Matrix x0 = comps.count(-i) ? comps.at(-i) : Matrix(ctx_.simple_top()->dim(), terms.front().rank());
  const auto& Rk = ctx_.char_map(ctx_.simple_top()).ext().resolution();
  slot.clear();
  extend_lift(chain, 0, x0, Rk, depth, slot);
  return slot;
}

Vec TopAction::apply(std::size_t n, std::span<const Elem> h, int i, std::span<const Elem> x) const {
  const auto& F = ctx_.algebra()->field();
  const ModulePtr& k = ctx_.simple_top();
  const CharMap& phik = ctx_.char_map(k);
  const auto& Ek = phik.ext();
  Matrix c = Ek.cocycle(n, phik.apply(n, h));
  Matrix cfull = expand_from_projective(Ek.resolution().term(n), c, *k);
  HomComplex::Components comp;
  comp[-i - static_cast<int>(n)] = mul(F, cfull, lift(i, x, n)[n]);
  return hom_.coords(i + static_cast<int>(n), comp);
}

Vec TopAction::images(std::size_t n, std::span<const Elem> h) const {
  const int lo = lowest();
  const int D = static_cast<int>(ctx_.degree_bound());
  Vec out;
  for (int i = lo; i + static_cast<int>(n) <= lo + D; ++i) {
    const std::size_t d = dim(i);
    for (std::size_t b = 0; b < d; ++b) {
      Vec x(d, 0);
      x[b] = 1;
      // lift once to the full window so later degrees reuse it
      lift(i, x, static_cast<std::size_t>(lo + D - i));
      Vec v = apply(n, h, i, x);
      out.insert(out.end(), v.begin(), v.end());
    }
  }
  return out;
}

VarietyIdeal complex_variety(const VarietyContext& ctx, const BoundedComplex& X) {
  TopAction act(ctx, X);
  return ctx.kernel_ideal(ctx.degree_bound(), [&](std::size_t n, const Vec& h) { return act.images(n, h); });
}

}  // namespace svar
