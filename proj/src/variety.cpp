#include <functional>

#include "svar/error.hpp"
#include "svar/variety.hpp"

namespace svar {

ReducedRing commutative_reduction(const GradedRingPresentation& P) {
  ReducedRing red;
  std::vector<std::string> names;
  std::vector<unsigned> degs;
  std::vector<long> var_of(P.generators.size(), -1);
  for (std::size_t i = 0; i < P.generators.size(); ++i) {
    const auto& g = P.generators[i];
    if (g.degree == 0) continue;
    if (P.p != 2 && g.degree % 2 == 1) continue;
    var_of[i] = static_cast<long>(names.size());
    names.push_back(g.name);
    degs.push_back(static_cast<unsigned>(g.degree));
    red.generator_index.push_back(i);
  }
  red.ring = std::make_shared<const PolyRing>(P.p, std::move(names), std::move(degs));
  red.relations_verified_to = P.relations_verified_to;
  for (const auto& r : P.relations) {
    std::vector<Term> terms;
    for (const auto& [e, c] : r.terms) {
      Monomial m(red.ring->nvars(), 0);
      bool killed = false;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (var_of[i] < 0) {
          killed = true;
          break;
        }
        m[static_cast<std::size_t>(var_of[i])] = e[i];
      }
      if (!killed) terms.push_back({std::move(m), c});
    }
    Poly f = Poly::from_terms(red.ring, std::move(terms));
    if (!f.is_zero()) red.relations.push_back(std::move(f));
  }
  return red;
}

VarietyIdeal intersect(const VarietyIdeal& V, const VarietyIdeal& W) {
  VarietyIdeal out;
  out.ideal = ideal_sum(V.ideal, W.ideal);
  out.verified_to = std::min(V.verified_to, W.verified_to);
  out.fg_warning = V.fg_warning || W.fg_warning;
  return out;
}

VarietyIdeal unite(const VarietyIdeal& V, const VarietyIdeal& W) {
  VarietyIdeal out;
  out.ideal = ideal_intersection(V.ideal, W.ideal);
  out.verified_to = std::min(V.verified_to, W.verified_to);
  out.fg_warning = V.fg_warning || W.fg_warning;
  return out;
}

Tri contains(const VarietyIdeal& V, const VarietyIdeal& W) { return radical_contains(W.ideal, V.ideal); }

Tri equals(const VarietyIdeal& V, const VarietyIdeal& W) { return radical_equal(V.ideal, W.ideal); }

// --- VarietyContext -----------------------------------------------------------------

VarietyContext::VarietyContext(AlgebraPtr A, std::size_t D, HochschildOptions opts, unsigned gb_cap)
    : A_(std::move(A)), gb_cap_(gb_cap) {
  opts.max_degree = D;
  H_ = std::make_unique<HochschildRing>(A_, opts);
  D_ = std::min(D, H_->verified_to());
  red_ = commutative_reduction(H_->presentation());
  k_ = std::make_shared<const Representation>(semisimple_top(A_));
  ExtSpace Ek(k_, k_);
  fg_warning_ = classify_growth(Ek.dims(D_)).kind == Growth::Exponential;
}

const CharMap& VarietyContext::char_map(const ModulePtr& M) const {
  std::lock_guard lock(mutex_);
  auto& slot = maps_[M.get()];
  if (!slot.second) {
    slot.first = M;
    slot.second = std::make_unique<CharMap>(*H_, M, D_);
  }
  return *slot.second;
}

Vec VarietyContext::evaluate(const Poly& f, std::size_t n) const {
  const auto& F = A_->field();
  Vec out(H_->dim(n), 0);
  const std::size_t ng = H_->generators().size();
  for (const auto& t : f.terms()) {
    if (red_.ring->degree(t.m) != n) throw UsageError("variety: polynomial is not homogeneous of the given degree");
    Exponents e(ng, 0);
    for (std::size_t i = 0; i < t.m.size(); ++i) e[red_.generator_index[i]] = t.m[i];
    const Vec& v = H_->evaluate(e);
    for (std::size_t r = 0; r < out.size(); ++r) out[r] = F.add(out[r], F.mul(t.c, v[r]));
  }
  return out;
}

std::optional<Poly> VarietyContext::reduce_class(std::size_t n, std::span<const Elem> h) const {
  if (n > D_) throw UsageError("variety: class degree beyond the bound");
  const auto& F = A_->field();
  const auto mons = H_->monomials(n);
  Matrix E(H_->dim(n), mons.size());
  for (std::size_t c = 0; c < mons.size(); ++c) E.set_column(c, H_->evaluate(mons[c]));
  Matrix rhs(H_->dim(n), 1);
  rhs.set_column(0, h);
  auto sol = solve_many(F, E, rhs);
  if (!sol) return std::nullopt;
  std::vector<long> var_of(H_->generators().size(), -1);
  for (std::size_t v = 0; v < red_.generator_index.size(); ++v) var_of[red_.generator_index[v]] = static_cast<long>(v);
  Poly out(red_.ring);
  for (std::size_t c = 0; c < mons.size(); ++c) {
    if ((*sol)(c, 0) == 0) continue;
    Monomial m(red_.ring->nvars(), 0);
    bool killed = false;
    for (std::size_t i = 0; i < mons[c].size() && !killed; ++i) {
      if (!mons[c][i]) continue;
      if (var_of[i] < 0) killed = true;
      else m[static_cast<std::size_t>(var_of[i])] = mons[c][i];
    }
    if (!killed) out = out + Poly::monomial(red_.ring, std::move(m), (*sol)(c, 0));
  }
  return out;
}

std::vector<Monomial> VarietyContext::monomials(std::size_t n) const {
  const auto& R = *red_.ring;
  std::vector<Monomial> out;
  Monomial m(R.nvars(), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i == R.nvars()) {
      if (left == 0) out.push_back(m);
      return;
    }
    for (std::size_t k = 0; k * R.degrees()[i] <= left; ++k) {
      m[i] = static_cast<unsigned>(k);
      rec(i + 1, left - k * R.degrees()[i]);
    }
    m[i] = 0;
  };
  rec(0, n);
  return out;
}

VarietyIdeal VarietyContext::whole() const { return ideal_of({}); }

VarietyIdeal VarietyContext::irrelevant() const {
  std::vector<Poly> vars;
  for (std::size_t i = 0; i < red_.ring->nvars(); ++i) vars.push_back(Poly::variable(red_.ring, i));
  return ideal_of(vars);
}

VarietyIdeal VarietyContext::ideal_of(const std::vector<Poly>& hs) const {
  VarietyIdeal V;
  auto gens = red_.relations;
  gens.insert(gens.end(), hs.begin(), hs.end());
  V.ideal = Ideal(red_.ring, std::move(gens), gb_cap_);
  V.verified_to = D_;
  V.fg_warning = fg_warning_;
  return V;
}

VarietyIdeal VarietyContext::kernel_ideal(std::size_t max_n,
                                          const std::function<Vec(std::size_t, const Vec&)>& images) const {
  const auto& F = A_->field();
  std::vector<Poly> gens = red_.relations;
  for (std::size_t n = 0; n <= max_n; ++n) {
    auto mons = monomials(n);
    if (mons.empty()) continue;
    std::vector<Vec> cols;
    for (const auto& m : mons) cols.push_back(images(n, evaluate(Poly::monomial(red_.ring, m), n)));
    Matrix V(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) V.set_column(j, cols[j]);
    Matrix K = kernel_basis(F, V);
    if (K.cols() == 0) continue;
    Ideal sofar(red_.ring, gens, gb_cap_);
    for (std::size_t j = 0; j < K.cols(); ++j) {
      std::vector<Term> terms;
      for (std::size_t i = 0; i < mons.size(); ++i)
        if (K(i, j)) terms.push_back({mons[i], K(i, j)});
      Poly f = Poly::from_terms(red_.ring, std::move(terms));
      if (!sofar.contains(f)) gens.push_back(std::move(f));
    }
  }
  VarietyIdeal out;
  out.ideal = Ideal(red_.ring, std::move(gens), gb_cap_);
  out.verified_to = max_n;
  out.fg_warning = fg_warning_;
  return out;
}

VarietyIdeal VarietyContext::annihilator_ideal(const ModulePtr& M) const {
  const CharMap& phi = char_map(M);
  return kernel_ideal(D_, [&](std::size_t n, const Vec& h) { return phi.apply(n, h); });
}

VarietyIdeal VarietyContext::variety_pair(const ModulePtr& M, const ModulePtr& N) const {
  const CharMap& phiM = char_map(M);
  const CharMap& phiN = char_map(N);
  ExtSpace MN(M, N);
  auto images = [&](std::size_t n, const Vec& h) {
    Vec out;
    for (std::size_t m = 0; m + n <= D_; ++m)
      for (std::size_t i = 0; i < MN.dim(m); ++i) {
        Vec x(MN.dim(m), 0);
        x[i] = 1;
        auto act = h_action(phiM, phiN, MN, n, h, m, x);
        out.insert(out.end(), act.left.begin(), act.left.end());
        out.insert(out.end(), act.right.begin(), act.right.end());
      }
    return out;
  };
  auto V = kernel_ideal(D_ / 2, images);
  V.verified_to = D_ / 2;
  return V;
}

}  // namespace svar
