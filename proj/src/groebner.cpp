#include <algorithm>

#include "svar/error.hpp"
#include "svar/poly.hpp"

namespace svar {

namespace {

Monomial quotient_monomial(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  const auto& F = f.ring()->field();
  Monomial l = lcm(f.lead().m, g.lead().m);
  Poly a = f.times_monomial(quotient_monomial(l, f.lead().m), F.inv(f.lead().c));
  Poly b = g.times_monomial(quotient_monomial(l, g.lead().m), F.inv(g.lead().c));
  return a - b;
}

// same polynomial over a ring with one extra trailing variable
Poly widen(const Poly& f, const PolyRingPtr& R) {
  std::vector<Term> terms;
  for (auto t : f.terms()) {
    t.m.push_back(0);
    terms.push_back(std::move(t));
  }
  return Poly::from_terms(R, std::move(terms));
}

PolyRingPtr with_extra_variable(const PolyRing& R, bool eliminate) {
  auto names = R.names();
  auto degs = R.degrees();
  std::string t = "t";
  while (R.index_of(t) >= 0) t += "_";
  names.push_back(t);
  degs.push_back(1);
  std::optional<std::size_t> e;
  if (eliminate) e = names.size() - 1;
  return std::make_shared<const PolyRing>(R.field().p(), std::move(names), std::move(degs), e);
}

}  // namespace

Poly normal_form(const Poly& f, const std::vector<Poly>& G) {
  const auto& R = f.ring();
  Poly rem(R), p = f;
  if (!R) return f;
  const auto& F = R->field();
  while (!p.is_zero()) {
    const Term lt = p.lead();
    const Poly* div = nullptr;
    for (const auto& g : G)
      if (divides(g.lead().m, lt.m)) {
        div = &g;
        break;
      }
    if (div) {
      p = p - div->times_monomial(quotient_monomial(lt.m, div->lead().m), F.mul(lt.c, F.inv(div->lead().c)));
    } else {
      rem = rem + Poly::monomial(R, lt.m, lt.c);
      p = p - Poly::monomial(R, lt.m, lt.c);
    }
  }
  return rem;
}

std::vector<Poly> groebner(const std::vector<Poly>& gens, unsigned degree_cap) {
  std::vector<Poly> G;
  for (const auto& g : gens)
    if (!g.is_zero()) G.push_back(g.monic());
  if (G.empty()) return {};
  const auto& R = *G.front().ring();

  struct Pair {
    unsigned deg;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) pairs.push_back({R.degree(lcm(G[i].lead().m, G[j].lead().m)), i, j});
  };
  for (std::size_t j = 1; j < G.size(); ++j) add_pairs(j);

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      return std::tie(a.deg, a.j, a.i) < std::tie(b.deg, b.j, b.i);
    });
    const Pair pr = *best;
    pairs.erase(best);
    if (coprime(G[pr.i].lead().m, G[pr.j].lead().m)) continue;
    if (pr.deg > degree_cap)
      throw DegreeBudgetExceeded("groebner: S-polynomial of degree " + std::to_string(pr.deg) +
                                 " exceeds the cap " + std::to_string(degree_cap));
    Poly h = normal_form(s_polynomial(G[pr.i], G[pr.j]), G);
    if (h.is_zero()) continue;
    G.push_back(h.monic());
    add_pairs(G.size() - 1);
  }

  // minimal, then reduced
  std::vector<Poly> M;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || !divides(G[j].lead().m, G[i].lead().m)) continue;
      // equal leads: keep the first
      redundant = G[j].lead().m != G[i].lead().m || j < i;
    }
    if (!redundant) M.push_back(G[i]);
  }
  std::vector<Poly> out;
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    const Term lt = M[i].lead();
    Poly tail = M[i] - Poly::monomial(M[i].ring(), lt.m, lt.c);
    out.push_back((Poly::monomial(M[i].ring(), lt.m, lt.c) + normal_form(tail, others)).monic());
  }
  std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) { return R.greater(b.lead().m, a.lead().m); });
  return out;
}

bool satisfies_buchberger(const std::vector<Poly>& G) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!normal_form(s_polynomial(G[i], G[j]), G).is_zero()) return false;
  return true;
}

// --- Ideal -------------------------------------------------------------------------

Ideal::Ideal(PolyRingPtr R, std::vector<Poly> gens, unsigned degree_cap)
    : R_(std::move(R)), cap_(degree_cap), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (!g.ring() || !(*g.ring() == *R_)) throw UsageError("ideal: generator from a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const std::vector<Poly>& Ideal::groebner_basis() const {
  if (!cache_) throw UsageError("ideal: default-constructed");
  std::call_once(cache_->once, [this] { cache_->gb = groebner(gens_, cap_); });
  return cache_->gb;
}

bool Ideal::contains(const Poly& f) const { return normal_form(f, groebner_basis()).is_zero(); }

bool Ideal::is_unit() const {
  const auto& G = groebner_basis();
  return G.size() == 1 && G[0].is_constant();
}

bool Ideal::is_zero() const { return gens_.empty(); }

Tri Ideal::radical_contains(const Poly& f) const {
  if (f.is_zero()) return Tri::Yes;
  try {
    unsigned max_deg = 1;
    for (const auto& g : gens_) max_deg = std::max(max_deg, g.degree());
    const unsigned cap = static_cast<unsigned>(R_->nvars()) + max_deg;
    Poly power = f;
    for (unsigned k = 1; k <= cap; ++k) {
      if (contains(power)) return Tri::Yes;
      power = power * f;
    }
    // 1 ∈ I + (1 - t f) decides the remaining cases
    auto Rt = with_extra_variable(*R_, false);
    std::vector<Poly> gens;
    for (const auto& g : gens_) gens.push_back(widen(g, Rt));
    gens.push_back(Poly::constant(Rt, 1) - Poly::variable(Rt, R_->nvars()) * widen(f, Rt));
    auto G = groebner(gens, cap_);
    return G.size() == 1 && G[0].is_constant() ? Tri::Yes : Tri::No;
  } catch (const DegreeBudgetExceeded&) {
    return Tri::Unknown;
  }
}

int Ideal::krull_dim() const {
  const auto& G = groebner_basis();
  if (is_unit()) return -1;
  // largest set of variables containing the support of no leading monomial
  const std::size_t n = R_->nvars();
  std::vector<char> banned(n, 0);
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& g : G) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (g.lead().m[i]) s.push_back(i);
    if (s.size() == 1) banned[s[0]] = 1;
    else supports.push_back(std::move(s));
  }
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < n; ++i)
    if (!banned[i]) vars.push_back(i);
  std::vector<std::vector<std::size_t>> by_var(n);
  for (std::size_t k = 0; k < supports.size(); ++k)
    for (auto v : supports[k]) by_var[v].push_back(k);

  constexpr std::size_t kNodeBudget = 5'000'000;
  std::vector<char> in(n, 0);
  int best = 0, size = 0;
  std::size_t nodes = 0;
  auto dfs = [&](auto&& self, std::size_t k) -> void {
    if (size + static_cast<int>(vars.size() - k) <= best) return;
    if (++nodes > kNodeBudget) throw SearchBudgetExceeded("krull dimension: independent set search budget");
    if (k == vars.size()) {
      best = size;
      return;
    }
    const std::size_t v = vars[k];
    in[v] = 1;
    bool ok = true;
    for (auto s : by_var[v]) {
      bool all = true;
      for (auto w : supports[s]) all = all && in[w];
      if (all) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++size;
      self(self, k + 1);
      --size;
    }
    in[v] = 0;
    self(self, k + 1);
  };
  dfs(dfs, 0);
  return best;
}

std::vector<std::string> Ideal::generator_strings() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.to_string());
  return out;
}

std::vector<std::string> Ideal::groebner_strings() const {
  std::vector<std::string> out;
  for (const auto& g : groebner_basis()) out.push_back(g.to_string());
  return out;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  if (!(*I.ring() == *J.ring())) throw UsageError("ideal sum: different rings");
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens), std::max(I.degree_cap(), J.degree_cap()));
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  if (!(*I.ring() == *J.ring())) throw UsageError("ideal intersection: different rings");
  const auto& R = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal(R, {});
  auto Rt = with_extra_variable(*R, true);
  const Poly t = Poly::variable(Rt, R->nvars());
  const Poly one_minus_t = Poly::constant(Rt, 1) - t;
  std::vector<Poly> gens;
  for (const auto& f : I.generators()) gens.push_back(t * widen(f, Rt));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * widen(g, Rt));
  const unsigned cap = std::max(I.degree_cap(), J.degree_cap());
  std::vector<Poly> out;
  for (const auto& g : groebner(gens, cap)) {
    if (g.lead().m.back() != 0) continue;
    std::vector<Term> terms;
    for (auto term : g.terms()) {
      term.m.pop_back();
      terms.push_back(std::move(term));
    }
    out.push_back(Poly::from_terms(R, std::move(terms)));
  }
  return Ideal(R, std::move(out), cap);
}

Tri radical_contains(const Ideal& I, const Ideal& J) {
  Tri r = Tri::Yes;
  for (const auto& g : J.generators()) {
    r = r && I.radical_contains(g);
    if (r == Tri::No) break;
  }
  return r;
}

Tri radical_equal(const Ideal& I, const Ideal& J) { return radical_contains(I, J) && radical_contains(J, I); }

}  // namespace svar
