#include "svar/cohomology.hpp"
#include "svar/error.hpp"

namespace svar {

ExtSpace::ExtSpace(ModulePtr M, ModulePtr N) : M_(std::move(M)), N_(std::move(N)) {
  if (M_->algebra() != N_->algebra()) throw UsageError("ext: modules over different algebras");
  R_ = resolution_of(M_);
  RN_ = resolution_of(N_);
}

ExtSpace::Degree& ExtSpace::layout(std::size_t n) const {
  std::lock_guard lock(mutex_);
  auto& slot = degrees_[n];
  if (!slot) {
    slot = std::make_unique<Degree>();
    const auto& P = R_->term(n);
    for (std::size_t k = 0; k < P.rank(); ++k) {
      slot->offsets.push_back(slot->hom_dim);
      slot->idx.push_back(N_->indices_at(P.tops()[k]));
      slot->hom_dim += slot->idx.back().size();
    }
  }
  return *slot;
}

void ExtSpace::build_delta(std::size_t n) const {
  Degree& D = layout(n);
  std::lock_guard lock(mutex_);
  if (D.delta_built) return;
  const Degree& D1 = layout(n + 1);
  const auto& F = field();
  const auto& P = R_->term(n);
  const Matrix& d = R_->differential(n + 1);
  Matrix delta(D1.hom_dim, D.hom_dim);
  for (std::size_t j = 0; j < d.cols(); ++j) {
    for (std::size_t k = 0; k < P.rank(); ++k) {
      const auto& els = P.summand_elements(k);
      for (std::size_t t = 0; t < els.size(); ++t) {
        const Elem c = d(P.offset(k) + t, j);
        if (!c) continue;
        const Matrix& Ab = N_->action_matrix(els[t]);
        for (std::size_t r = 0; r < D1.idx[j].size(); ++r)
          for (std::size_t s = 0; s < D.idx[k].size(); ++s) {
            const Elem a = Ab(D1.idx[j][r], D.idx[k][s]);
            if (a) {
              Elem& e = delta(D1.offsets[j] + r, D.offsets[k] + s);
              e = F.add(e, F.mul(c, a));
            }
          }
      }
    }
  }
  D.delta = std::move(delta);
  D.delta_built = true;
}

const ExtSpace::Degree& ExtSpace::degree(std::size_t n) const {
  std::lock_guard lock(mutex_);
  Degree& D = layout(n);
  if (D.solver) return D;
  const auto& F = field();
  build_delta(n);
  Matrix Z = kernel_basis(F, D.delta);
  Matrix B(D.hom_dim, 0);
  if (n > 0) {
    build_delta(n - 1);
    B = column_basis(F, layout(n - 1).delta);
  }
  auto indep = independent_columns(F, hcat(B, Z));
  std::vector<std::size_t> pick;
  for (auto c : indep)
    if (c >= B.cols()) pick.push_back(c - B.cols());
  D.boundaries = std::move(B);
  D.reps = select_columns(Z, pick);
  D.solver = std::make_unique<LinearSolver>(F, hcat(D.boundaries, D.reps));
  return D;
}

std::size_t ExtSpace::dim(std::size_t n) const { return degree(n).reps.cols(); }

std::vector<std::size_t> ExtSpace::dims(std::size_t nmax) const {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= nmax; ++n) out.push_back(dim(n));
  return out;
}

std::size_t ExtSpace::hom_dim(std::size_t n) const { return layout(n).hom_dim; }

std::size_t ExtSpace::coboundary_dim(std::size_t n) const { return degree(n).boundaries.cols(); }

Vec ExtSpace::flatten(const Degree& D, const Matrix& gens) const {
  Vec flat(D.hom_dim, 0);
  for (std::size_t k = 0; k < D.idx.size(); ++k)
    for (std::size_t j = 0; j < D.idx[k].size(); ++j) flat[D.offsets[k] + j] = gens(D.idx[k][j], k);
  return flat;
}

Matrix ExtSpace::unflatten(std::size_t, const Degree& D, std::span<const Elem> flat) const {
  Matrix gens(N_->dim(), D.idx.size());
  for (std::size_t k = 0; k < D.idx.size(); ++k)
    for (std::size_t j = 0; j < D.idx[k].size(); ++j) gens(D.idx[k][j], k) = flat[D.offsets[k] + j];
  return gens;
}

Matrix ExtSpace::cocycle(std::size_t n, std::span<const Elem> coords) const {
  const Degree& D = degree(n);
  if (coords.size() != D.reps.cols()) throw UsageError("ext: coordinate vector has the wrong length");
  Vec flat(D.hom_dim, 0);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i])
      for (std::size_t r = 0; r < D.hom_dim; ++r) flat[r] = field().add(flat[r], field().mul(coords[i], D.reps(r, i)));
  return unflatten(n, D, flat);
}

Matrix ExtSpace::basis_cocycle(std::size_t n, std::size_t i) const {
  Vec c(dim(n), 0);
  c.at(i) = 1;
  return cocycle(n, c);
}

bool ExtSpace::is_cocycle(std::size_t n, const Matrix& f) const {
  const Degree& D = degree(n);
  return is_zero_vec(mul_vec(field(), D.delta, flatten(D, f)));
}

Vec ExtSpace::coords(std::size_t n, const Matrix& cocycle) const {
  const Degree& D = degree(n);
  if (cocycle.rows() != N_->dim() || cocycle.cols() != D.idx.size())
    throw UsageError("ext: cocycle has the wrong shape");
  auto x = D.solver->solve(flatten(D, cocycle));
  if (!x) throw UsageError("ext: map is not a cocycle in degree " + std::to_string(n));
  return Vec(x->begin() + static_cast<long>(D.boundaries.cols()), x->end());
}

const std::vector<Matrix>& ExtSpace::lift(std::size_t n, std::span<const Elem> coords, std::size_t depth) const {
  Matrix f = cocycle(n, coords);
  std::vector<Matrix>* slot;
  {
    std::lock_guard lock(mutex_);
    slot = &lifts_[{n, Vec(coords.begin(), coords.end())}];
    if (slot->size() > depth) return *slot;
  }
  // lifting touches only the resolutions, which serialize on their own
  std::vector<Matrix> work;
  {
    std::lock_guard lock(mutex_);
    work = *slot;
  }
  extend_lift(*R_, n, f, *RN_, depth, work);
  std::lock_guard lock(mutex_);
  if (slot->size() < work.size()) *slot = std::move(work);
  return *slot;
}

Vec ExtSpace::identity() const {
  if (!(*M_ == *N_)) throw UsageError("ext: identity requires source == target");
  return coords(0, R_->augmentation());
}

Vec yoneda_product(const ExtSpace& NL, std::size_t m, std::span<const Elem> f, const ExtSpace& MN, std::size_t n,
                   std::span<const Elem> g, const ExtSpace& ML) {
  if (!(*NL.source() == *MN.target()) || !(*ML.source() == *MN.source()) || !(*ML.target() == *NL.target()))
    throw UsageError("yoneda product: classes are not composable");
  const auto& F = NL.field();
  const Matrix& G = MN.lift(n, g, m)[m];
  const auto& Q = NL.resolution().term(m);
  Matrix ffull = expand_from_projective(Q, NL.cocycle(m, f), *NL.target());
  return ML.coords(m + n, mul(F, ffull, G));
}

}  // namespace svar
