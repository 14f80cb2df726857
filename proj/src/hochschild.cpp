#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "svar/cohomology.hpp"
#include "svar/error.hpp"

namespace svar {

namespace {

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v.at(i) = 1;
  return v;
}

Vec axpy_vec(const PrimeField& F, Vec y, Elem c, std::span<const Elem> x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = F.add(y[i], F.mul(c, x[i]));
  return y;
}

}  // namespace

// --- presentation strings -----------------------------------------------------------

std::string GradedRingPresentation::monomial_string(const Exponents& e) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!first) os << '*';
    first = false;
    os << generators.at(i).name;
    if (e[i] > 1) os << '^' << e[i];
  }
  if (first) os << '1';
  return os.str();
}

std::string GradedRingPresentation::relation_string(const RingRelation& r) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : r.terms) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c << '*';
    os << monomial_string(e);
  }
  if (first) os << '0';
  os << " = 0";
  return os.str();
}

// --- HochschildRing ---------------------------------------------------------------

HochschildRing::HochschildRing(AlgebraPtr A, HochschildOptions opts) : A_(std::move(A)), opts_(opts) {
  env_ = enveloping(A_);
  L_ = std::make_shared<const Representation>(regular_bimodule(env_));
  E_ = std::make_unique<ExtSpace>(L_, L_);
  // dim HH^n needs P_{n+1}
  verified_to_ = 0;
  for (std::size_t n = 0; n <= opts_.max_degree; ++n) {
    if (resolution().term(n + 1).dim() > opts_.dim_budget) break;
    verified_to_ = n;
  }
  nil_bound_ = std::max<std::size_t>(1, dim(0));
}

Vec HochschildRing::product(std::size_t m, std::span<const Elem> a, std::size_t n, std::span<const Elem> b) const {
  return yoneda_product(*E_, m, a, *E_, n, b, *E_);
}

Vec HochschildRing::centre_element(std::span<const Elem> coords) const {
  const auto& F = field();
  const auto& P0 = resolution().term(0);
  Matrix h = expand_from_projective(P0, E_->cocycle(0, coords), *L_);
  const auto& info = *env_->enveloping_info();
  Vec z(A_->dim(), 0);
  for (int v = 0; v < A_->num_vertices(); ++v) {
    auto u = resolution().preimage(0, info.vertex_pair(v, v), A_->basis_vector(A_->idempotent(v)));
    if (!u) throw UsageError("hochschild: augmentation does not reach the unit");
    z = axpy_vec(F, z, 1, mul_vec(F, h, *u));
  }
  return z;
}

std::size_t HochschildRing::degree_of(const Exponents& e) const {
  generators();
  return degree_of_raw(e);
}

const Vec& HochschildRing::evaluate(const Exponents& e) const {
  generators();
  return evaluate_raw(e);
}

std::vector<Exponents> HochschildRing::monomials(std::size_t n) const {
  generators();
  return monomials_raw(n);
}

std::size_t HochschildRing::degree_of_raw(const Exponents& e) const {
  const auto& g = pres_.generators;
  std::size_t d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * g.at(i).degree;
  return d;
}

const Vec& HochschildRing::evaluate_raw(const Exponents& e) const {
  const auto& g = pres_.generators;
  if (e.size() != g.size()) throw UsageError("hochschild: exponent vector has the wrong length");
  std::lock_guard lock(eval_mutex_);
  if (auto it = eval_cache_.find(e); it != eval_cache_.end()) return it->second;
  std::size_t last = e.size();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i]) last = i;
  Vec value;
  if (last == e.size()) {
    value = one();
  } else {
    Exponents rest = e;
    --rest[last];
    const Vec& head = evaluate_raw(rest);
    value = product(degree_of_raw(rest), head, g[last].degree, g[last].coords);
  }
  return eval_cache_.emplace(e, std::move(value)).first->second;
}

std::vector<Exponents> HochschildRing::monomials_raw(std::size_t n) const {
  const auto& g = pres_.generators;
  const bool odd_char = field().p() != 2;
  std::vector<Exponents> out;
  Exponents e(g.size(), 0);
  std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left,
                                                                      std::size_t zero_used) {
    if (i == g.size()) {
      if (left == 0) out.push_back(e);
      return;
    }
    const std::size_t d = g[i].degree;
    std::size_t cap;
    if (d == 0)
      cap = nil_bound_ - zero_used;
    else if (odd_char && d % 2 == 1)
      cap = std::min<std::size_t>(1, left / d);
    else
      cap = left / d;
    for (std::size_t k = 0; k <= cap; ++k) {
      e[i] = static_cast<unsigned>(k);
      rec(i + 1, left - k * d, zero_used + (d == 0 ? k : 0));
    }
    e[i] = 0;
  };
  rec(0, n, 0);
  return out;
}

const GradedRingPresentation& HochschildRing::presentation() const {
  generators();
  std::call_once(pres_once_, [this] { extract_relations(); });
  return pres_;
}

const std::vector<RingGenerator>& HochschildRing::generators() const {
  std::call_once(gens_once_, [this] { extract_generators(); });
  return pres_.generators;
}

void HochschildRing::extract_generators() const {
  const auto& F = field();
  pres_.p = F.p();
  pres_.verified_to = verified_to_;
  auto& gens = pres_.generators;
  std::size_t zero_count = 0, pos_count = 0;
  for (std::size_t n = 0; n <= verified_to_; ++n) {
    const std::size_t d = dim(n);
    if (d == 0) continue;
    SpanBasis S(F, d);
    std::vector<Vec> queue;
    if (n == 0) {
      Vec u = one();
      S.add(u);
      queue.push_back(u);
    } else {
      for (const auto& g : gens) {
        if (g.degree == 0 || g.degree > n) continue;
        for (std::size_t b = 0; b < dim(n - g.degree); ++b)
          S.add(product(n - g.degree, unit_vec(dim(n - g.degree), b), g.degree, g.coords));
      }
    }
    auto close = [&](std::vector<Vec> work) {
      while (!work.empty()) {
        Vec v = std::move(work.back());
        work.pop_back();
        for (const auto& g : gens) {
          if (g.degree != 0) continue;
          Vec w = product(n, v, 0, g.coords);
          if (S.add(w)) work.push_back(std::move(w));
        }
      }
    };
    close(queue);
    for (std::size_t i = 0; i < d && S.size() < d; ++i) {
      Vec e = unit_vec(d, i);
      if (!S.add(e)) continue;
      RingGenerator g;
      g.degree = n;
      if (n == 0) {
        // shift into the nilpotent part of the centre
        const Elem c = centre_element(e)[A_->idempotent(0)];
        g.coords = axpy_vec(F, e, F.neg(c), one());
        g.name = "c" + std::to_string(++zero_count);
      } else {
        g.coords = e;
        g.name = "z" + std::to_string(++pos_count);
      }
      gens.push_back(g);
      close({g.coords});
    }
  }
}

void HochschildRing::extract_relations() const {
  const auto& F = field();
  const auto& gens = pres_.generators;
  const bool odd_char = F.p() != 2;
  std::vector<std::vector<Exponents>> monos;
  for (std::size_t n = 0; n <= verified_to_; ++n) {
    auto m = monomials_raw(n);
    if (m.size() > opts_.monomial_budget) break;
    monos.push_back(std::move(m));
  }
  if (monos.empty()) return;
  pres_.relations_verified_to = monos.size() - 1;

  // m * r as a vector over monos[n]; monomials outside the enumeration vanish
  auto multiply = [&](const Exponents& m, const RingRelation& r, const std::map<Exponents, std::size_t>& index,
                      Vec& out) {
    for (const auto& [e, c] : r.terms) {
      Exponents s(e.size());
      bool odd_sign = false;
      for (std::size_t i = 0; i < e.size(); ++i) {
        s[i] = m[i] + e[i];
        if (odd_char)
          for (std::size_t j = 0; j < i; ++j)
            if (m[i] * e[j] * gens[i].degree * gens[j].degree % 2) odd_sign = !odd_sign;
      }
      auto it = index.find(s);
      if (it == index.end()) continue;
      out[it->second] = F.add(out[it->second], odd_sign ? F.neg(c) : c);
    }
  };

  for (std::size_t n = 0; n < monos.size(); ++n) {
    const auto& mn = monos[n];
    if (mn.empty()) continue;
    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < mn.size(); ++i) index[mn[i]] = i;
    Matrix values(dim(n), mn.size());
    for (std::size_t i = 0; i < mn.size(); ++i) values.set_column(i, evaluate_raw(mn[i]));
    Matrix K = kernel_basis(F, values);
    if (K.cols() == 0) continue;

    SpanBasis C(F, mn.size());
    auto add_multiples = [&](const RingRelation& r, bool include_self) {
      for (const auto& m : monos[n - r.degree]) {
        const bool self = std::all_of(m.begin(), m.end(), [](unsigned x) { return x == 0; });
        if (self && !include_self) continue;
        Vec v(mn.size(), 0);
        multiply(m, r, index, v);
        C.add(v);
      }
    };
    for (const auto& r : pres_.relations) add_multiples(r, true);
    for (std::size_t j = 0; j < K.cols(); ++j) {
      Vec k = K.column(j);
      if (!C.add(k)) continue;
      RingRelation r;
      r.degree = n;
      for (std::size_t i = 0; i < mn.size(); ++i)
        if (k[i]) r.terms.emplace_back(mn[i], k[i]);
      add_multiples(r, false);
      pres_.relations.push_back(std::move(r));
    }
  }
}

std::size_t HochschildRing::commutativity_violations(std::size_t max_total) const {
  const auto& F = field();
  std::size_t bad = 0;
  for (std::size_t a = 0; a <= std::min(max_total, verified_to_); ++a)
    for (std::size_t b = a; a + b <= max_total && b <= verified_to_; ++b) {
      if (a + b > verified_to_) continue;
      for (std::size_t i = 0; i < dim(a); ++i)
        for (std::size_t j = 0; j < dim(b); ++j) {
          Vec x = unit_vec(dim(a), i), y = unit_vec(dim(b), j);
          Vec xy = product(a, x, b, y), yx = product(b, y, a, x);
          if ((a * b) % 2 == 1)
            for (auto& c : yx) c = F.neg(c);
          if (xy != yx) ++bad;
        }
    }
  return bad;
}

// --- characteristic map -----------------------------------------------------------

CharMap::CharMap(const HochschildRing& H, ModulePtr M, std::size_t max_degree)
    : H_(H), M_(std::move(M)), max_degree_(max_degree) {
  if (M_->algebra() != H_.algebra()) throw UsageError("characteristic map: module over a different algebra");
  if (max_degree_ > H_.verified_to())
    throw UsageError("characteristic map: degree " + std::to_string(max_degree_) +
                     " exceeds the computed Hochschild range " + std::to_string(H_.verified_to()));
  E_ = std::make_unique<ExtSpace>(M_, M_);
  const auto& A = H_.algebra();
  const auto& F = A->field();
  const auto& info = *H_.enveloping_algebra()->enveloping_info();
  const auto& R = H_.resolution();

  // T_i = P_i ⊗_Λ M; the summand Λe_a ⊗ e_bΛ contributes Λe_a ⊗ e_bM
  std::vector<ProjectiveModule> terms;
  std::vector<Matrix> diffs;
  std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> lookup;
  for (std::size_t i = 0; i <= max_degree_; ++i) {
    const auto& P = R.term(i);
    std::vector<int> tops;
    std::vector<std::pair<std::size_t, std::size_t>> tg;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> look;
    for (std::size_t k = 0; k < P.rank(); ++k) {
      auto [a, b] = info.unvertex(P.tops()[k]);
      for (auto m : M_->indices_at(b)) {
        look[{k, m}] = tg.size();
        tg.emplace_back(k, m);
        tops.push_back(a);
      }
    }
    terms.emplace_back(A, tops);
    tgens_.push_back(std::move(tg));
    lookup.push_back(std::move(look));
  }
  diffs.emplace_back();
  for (std::size_t i = 1; i <= max_degree_; ++i) {
    const auto& Pp = R.term(i - 1);
    const auto& dP = R.differential(i);
    const auto& Tp = terms[i - 1];
    Matrix D(Tp.dim(), tgens_[i].size());
    for (std::size_t q = 0; q < tgens_[i].size(); ++q) {
      auto [k, m] = tgens_[i][q];
      for (std::size_t l = 0; l < Pp.rank(); ++l) {
        const auto& els = Pp.summand_elements(l);
        for (std::size_t t = 0; t < els.size(); ++t) {
          const Elem c = dP(Pp.offset(l) + t, k);
          if (!c) continue;
          auto [x, y] = info.unpair(els[t]);
          const Matrix& Ay = M_->action_matrix(y);
          for (std::size_t m2 = 0; m2 < M_->dim(); ++m2) {
            const Elem a = Ay(m2, m);
            if (!a) continue;
            const std::size_t q2 = lookup[i - 1].at({l, m2});
            const std::size_t pos = Tp.index_of(q2, x);
            if (pos == ProjectiveModule::npos) throw UsageError("characteristic map: vertex mismatch");
            D(pos, q) = F.add(D(pos, q), F.mul(c, a));
          }
        }
      }
    }
    diffs.push_back(std::move(D));
  }
  const Matrix& eps = R.augmentation();
  Matrix eg(M_->dim(), tgens_[0].size());
  for (std::size_t q = 0; q < tgens_[0].size(); ++q) {
    auto [k, m] = tgens_[0][q];
    for (std::size_t b = 0; b < A->dim(); ++b)
      if (const Elem c = eps(b, k))
        for (std::size_t r = 0; r < M_->dim(); ++r)
          eg(r, q) = F.add(eg(r, q), F.mul(c, M_->action_matrix(b)(r, m)));
  }
  Matrix eps_full = expand_from_projective(terms[0], eg, *M_);
  T_ = std::make_unique<StaticChain>(A, std::move(terms), std::move(diffs), std::move(eps_full));
  const auto& PM = E_->resolution();
  comparison_ = lift_map(PM, 0, PM.augmentation(), *T_, max_degree_);
}

Vec CharMap::apply(std::size_t n, std::span<const Elem> h) const {
  if (n > max_degree_) throw UsageError("characteristic map: degree out of range");
  const auto& F = M_->field();
  Matrix hc = H_.ext().cocycle(n, h);
  const auto& Tn = T_->term(n);
  Matrix gens(M_->dim(), tgens_[n].size());
  for (std::size_t q = 0; q < tgens_[n].size(); ++q) {
    auto [k, m] = tgens_[n][q];
    for (std::size_t b = 0; b < hc.rows(); ++b)
      if (const Elem c = hc(b, k))
        for (std::size_t r = 0; r < M_->dim(); ++r)
          gens(r, q) = F.add(gens(r, q), F.mul(c, M_->action_matrix(b)(r, m)));
  }
  Matrix full = expand_from_projective(Tn, gens, *M_);
  return E_->coords(n, mul(F, full, comparison_[n]));
}

Matrix CharMap::matrix(std::size_t n) const {
  const std::size_t d = H_.dim(n);
  Matrix out(E_->dim(n), d);
  for (std::size_t i = 0; i < d; ++i) out.set_column(i, apply(n, unit_vec(d, i)));
  return out;
}

HAction h_action(const CharMap& phiM, const CharMap& phiN, const ExtSpace& MN, std::size_t hdeg,
                 std::span<const Elem> h, std::size_t n, std::span<const Elem> f) {
  HAction out;
  out.left = yoneda_product(phiN.ext(), hdeg, phiN.apply(hdeg, h), MN, n, f, MN);
  out.right = yoneda_product(MN, n, f, phiM.ext(), hdeg, phiM.apply(hdeg, h), MN);
  return out;
}

// --- finite generation -------------------------------------------------------------

GrowthFit classify_growth(const std::vector<std::size_t>& dims) {
  GrowthFit fit;
  if (dims.empty()) return fit;
  const std::size_t D = dims.size() - 1;
  const std::size_t lo = std::max<std::size_t>(1, D / 2);
  bool all_zero = true, all_grow = D >= 2;
  for (std::size_t n = lo; n <= D; ++n) {
    if (dims[n]) all_zero = false;
    if (dims[n - 1] == 0 || static_cast<double>(dims[n]) < 1.5 * static_cast<double>(dims[n - 1])) all_grow = false;
  }
  if (all_zero) return fit;
  if (all_grow) {
    fit.kind = Growth::Exponential;
    return fit;
  }
  // least squares slope of log(dim) against log(n); the max with the
  // previous degree smooths out periodic zeros
  std::vector<double> xs, ys;
  for (std::size_t n = lo; n <= D; ++n) {
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(static_cast<double>(std::max<std::size_t>({dims[n], dims[n - 1], 1}))));
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i], my += ys[i];
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxx > 0 ? sxy / sxx : 0;
  fit.kind = Growth::Polynomial;
  fit.degree = std::max(0, static_cast<int>(std::lround(slope)));
  return fit;
}

FgReport fg_check(const AlgebraPtr& A, std::size_t D, const HochschildOptions& opts) {
  FgReport rep;
  auto k = std::make_shared<const Representation>(semisimple_top(A));
  ExtSpace Ek(k, k);
  rep.ext_dims = Ek.dims(D);
  rep.growth = classify_growth(rep.ext_dims);

  HochschildOptions o = opts;
  o.max_degree = D;
  HochschildRing H(A, o);
  rep.hh_verified_to = H.verified_to();
  for (const auto& g : H.generators()) {
    rep.hh_generators.emplace_back(g.name, g.degree);
    rep.hh_last_new_degree = std::max(rep.hh_last_new_degree, g.degree);
  }

  if (rep.growth.kind == Growth::Exponential) {
    rep.violated = true;
    rep.verdict = "fg-violated (exponential growth)";
    return rep;
  }

  // Ext*(Λ/r, Λ/r) as a module over the image of φ
  const std::size_t Dm = std::min(D, H.verified_to());
  CharMap phi(H, k, Dm);
  const auto& F = A->field();
  std::vector<std::pair<std::size_t, Vec>> images;
  for (const auto& g : H.generators()) images.emplace_back(g.degree, phi.apply(g.degree, g.coords));
  for (std::size_t n = 0; n <= Dm; ++n) {
    const std::size_t d = Ek.dim(n);
    if (d == 0) continue;
    SpanBasis S(F, d);
    for (const auto& [gd, img] : images) {
      if (gd == 0 || gd > n) continue;
      for (std::size_t b = 0; b < Ek.dim(n - gd); ++b)
        S.add(yoneda_product(Ek, gd, img, Ek, n - gd, unit_vec(Ek.dim(n - gd), b), Ek));
    }
    auto close = [&](std::vector<Vec> work) {
      while (!work.empty()) {
        Vec v = std::move(work.back());
        work.pop_back();
        for (const auto& [gd, img] : images) {
          if (gd != 0) continue;
          Vec w = yoneda_product(Ek, 0, img, Ek, n, v, Ek);
          if (S.add(w)) work.push_back(std::move(w));
        }
      }
    };
    for (std::size_t i = 0; i < d && S.size() < d; ++i) {
      Vec e = unit_vec(d, i);
      if (!S.add(e)) continue;
      rep.module_generator_degrees.push_back(n);
      rep.module_last_new_degree = n;
      close({e});
    }
  }
  rep.module_verified_to = Dm;
  rep.verdict = "fg-plausible to degree " + std::to_string(Dm);
  return rep;
}

}  // namespace svar
