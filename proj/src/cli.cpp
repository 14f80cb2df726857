#include "svar/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

#include "CLI11.hpp"

#include "svar/derived.hpp"
#include "svar/error.hpp"
#include "svar/fda.hpp"
#include "svar/report.hpp"

namespace svar {

namespace {

struct Options {
  std::string file;
  std::size_t degree = kDefaultDegreeBound;
  std::size_t syzygy_bound = 20;
  unsigned gb_cap = kDefaultGroebnerDegreeCap;
  bool json = false;
  std::string module, complex, from, to, cls;
  std::vector<std::string> classes;
  std::size_t bound = 0;
};

struct Session {
  FdaDocument doc;
  FdaSession s;
};

Session load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  Session out;
  out.doc = parse_fda(buf.str());
  out.s = instantiate(out.doc);
  return out;
}

ModulePtr need_module(const Session& S, const std::string& name) {
  auto it = S.s.modules.find(name);
  if (it == S.s.modules.end()) throw UsageError("unknown module '" + name + "'");
  return it->second;
}

const BoundedComplex& need_complex(const Session& S, const std::string& name) {
  auto it = S.s.complexes.find(name);
  if (it == S.s.complexes.end()) throw UsageError("unknown complex '" + name + "'");
  return it->second;
}

/// --complex X, or the stalk of --module M in degree 0.
BoundedComplex target(const Session& S, const Options& o, Json& inputs) {
  if (!o.complex.empty() && !o.module.empty()) throw UsageError("give --module or --complex, not both");
  if (!o.complex.empty()) {
    inputs["complex"] = o.complex;
    return need_complex(S, o.complex);
  }
  if (o.module.empty()) throw UsageError("--module or --complex is required");
  inputs["module"] = o.module;
  return BoundedComplex::stalk(*need_module(S, o.module), 0);
}

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

Tri tri(bool b) { return b ? Tri::Yes : Tri::No; }

std::string ring_string(const PolyRing& R) {
  std::string s = "F_" + std::to_string(R.field().p());
  if (R.nvars() == 0) return s;
  s += "[";
  for (std::size_t i = 0; i < R.nvars(); ++i) s += (i ? "," : "") + R.names()[i];
  return s + "]";
}

Json ideal_json(const VarietyIdeal& V) {
  const auto gb = V.ideal.groebner_strings();
  std::string shown = "<";
  for (std::size_t i = 0; i < gb.size(); ++i) shown += (i ? ", " : "") + gb[i];
  shown += gb.empty() ? "0>" : ">";
  Json j;
  j["ring"] = ring_string(*V.ideal.ring());
  j["variable_degrees"] = V.ideal.ring()->degrees();
  j["ideal"] = shown;
  j["groebner_basis"] = gb;
  j["dimension"] = V.dim();
  j["verified_to"] = V.verified_to;
  j["fg_warning"] = V.fg_warning;
  return j;
}

Json complex_json(const BoundedComplex& X0) {
  const BoundedComplex X = X0.trimmed();
  Json j;
  if (X.empty()) {
    j["zero"] = true;
    return j;
  }
  std::vector<std::size_t> terms;
  for (int i = X.lo(); i <= X.hi(); ++i) terms.push_back(X.dim(i));
  j["lo"] = X.lo();
  j["hi"] = X.hi();
  j["term_dims"] = terms;
  j["homology_dims"] = homology_dims(X, X.lo(), X.hi());
  return j;
}

/// Ranks of the projective terms of a perfect witness, by degree.
Json witness_json(const BoundedComplex& W0) {
  const BoundedComplex W = W0.trimmed();
  Json j = complex_json(W);
  if (W.empty()) return j;
  Json tops = Json::array();
  for (int i = W.lo(); i <= W.hi(); ++i) tops.push_back(W.term(i).dims_by_vertex());
  j["dims_by_vertex"] = tops;
  return j;
}

ModulePtr share(Representation M) { return std::make_shared<const Representation>(std::move(M)); }

struct ClassSpec {
  std::string label;
  std::size_t degree = 0;
  Vec coords;
  std::optional<Poly> poly;  // image in H_red when there is one
};

/// A class given as a generator name, "d.i" (basis vector i of HH^d) or a
/// homogeneous polynomial in the variables of H_red.
ClassSpec parse_class(const VarietyContext& ctx, const std::string& text) {
  const auto& H = ctx.hochschild();
  const auto& R = ctx.ring();
  ClassSpec out;
  out.label = text;
  static const std::regex basis_re(R"((\d+)\.(\d+))");
  std::smatch m;
  if (std::regex_match(text, m, basis_re)) {
    out.degree = std::stoul(m[1]);
    const std::size_t i = std::stoul(m[2]);
    if (out.degree > ctx.degree_bound()) throw UsageError("class " + text + ": degree beyond the bound");
    if (i >= H.dim(out.degree)) throw UsageError("class " + text + ": HH^" + m[1].str() + " has dimension " +
                                                 std::to_string(H.dim(out.degree)));
    out.coords = unit_vec(H.dim(out.degree), i);
    out.poly = ctx.reduce_class(out.degree, out.coords);
    return out;
  }
  for (const auto& g : H.generators())
    if (g.name == text) {
      out.degree = g.degree;
      out.coords = g.coords;
      if (out.degree > ctx.degree_bound()) throw UsageError("class " + text + ": degree beyond the bound");
      out.poly = ctx.reduce_class(out.degree, out.coords);
      return out;
    }
  Poly f = parse_poly(R, text);
  if (f.is_zero() || !f.is_homogeneous() || f.is_constant())
    throw UsageError("class " + text + ": expected a generator name, d.i or a homogeneous polynomial");
  out.degree = f.degree();
  if (out.degree > ctx.degree_bound()) throw UsageError("class " + text + ": degree beyond the bound");
  out.coords = ctx.evaluate(f, out.degree);
  out.poly = f;
  return out;
}

HochschildOptions hh_options(const Options& o) { return {o.degree, 1500, 4000}; }

Json budgets_json(const Options& o, std::optional<std::size_t> hh_verified = std::nullopt) {
  Json j;
  j["degree_bound"] = o.degree;
  j["syzygy_bound"] = o.syzygy_bound;
  j["groebner_degree_cap"] = o.gb_cap;
  if (hh_verified) j["hh_verified_to"] = *hh_verified;
  return j;
}

// --- commands ----------------------------------------------------------------------

void cmd_resolve(const Session& S, const Options& o, Report& r) {
  if (o.module.empty()) throw UsageError("--module is required");
  r.inputs["module"] = o.module;
  auto R = resolution_of(need_module(S, o.module));
  const auto& names = S.s.algebra->vertex_names();
  Json by_vertex = Json::array();
  bool exact = true, minimal = true;
  for (std::size_t i = 0; i <= o.degree; ++i) {
    Json row = Json::object();
    const auto b = R->betti_by_vertex(i);
    for (std::size_t v = 0; v < b.size(); ++v) row[names[v]] = b[v];
    by_vertex.push_back(row);
    exact = exact && R->check_exact(i);
    minimal = minimal && (i == 0 || R->check_minimal(i));
  }
  r.result["betti"] = R->betti(o.degree);
  r.result["betti_by_vertex"] = by_vertex;
  r.result["exact"] = exact;
  r.result["minimal"] = minimal;
  r.unknown = !(exact && minimal);
}

/// Degrees of a minimal generating set of Ext*(M, N) as a left
/// Ext*(N, N)-module, through degree `to`. With `algebra` (M = N) the
/// unit is dropped and generators are algebra generators in positive degree.
std::vector<std::size_t> generator_degrees(const ExtSpace& E, const ExtSpace& EN, std::size_t to, bool algebra) {
  std::vector<std::size_t> out;
  const auto& F = E.field();
  for (std::size_t t = algebra ? 1 : 0; t <= to; ++t) {
    const std::size_t dt = E.dim(t);
    std::vector<Vec> prods;
    for (std::size_t a = 1; a + (algebra ? 1 : 0) <= t; ++a)
      for (std::size_t i = 0; i < EN.dim(a); ++i)
        for (std::size_t j = 0; j < E.dim(t - a); ++j)
          prods.push_back(yoneda_product(EN, a, unit_vec(EN.dim(a), i), E, t - a, unit_vec(E.dim(t - a), j), E));
    const std::size_t dec = prods.empty() ? 0 : rank(F, Matrix::from_columns(prods, dt));
    for (std::size_t k = dec; k < dt; ++k) out.push_back(t);
  }
  return out;
}

void cmd_ext(const Session& S, const Options& o, Report& r) {
  if (o.from.empty() || o.to.empty()) throw UsageError("--from and --to are required");
  r.inputs["from"] = o.from;
  r.inputs["to"] = o.to;
  auto M = need_module(S, o.from), N = need_module(S, o.to);
  ExtSpace E(M, N);
  r.result["dims"] = E.dims(o.degree);
  // products are costly when Ext grows fast; stop at a work budget
  constexpr std::size_t kProductBudget = 20000;
  std::optional<ExtSpace> own;
  if (M != N) own.emplace(N, N);
  const ExtSpace& EN = own ? *own : E;
  std::size_t to = 0, work = 0;
  for (std::size_t t = 1; t <= o.degree; ++t) {
    for (std::size_t a = 1; a <= t; ++a) work += EN.dim(a) * E.dim(t - a);
    if (work > kProductBudget) break;
    to = t;
  }
  r.result["generator_degrees"] = generator_degrees(E, EN, to, M == N);
  r.result["generators"] = M == N ? "algebra generators" : "module generators over Ext*(" + o.to + "," + o.to + ")";
  r.result["generators_verified_to"] = to;
}

/// Violations of φ_N(h)·f = (-1)^{nm} f·φ_M(h) over all basis pairs with
/// total degree ≤ T, for M = N = k.
std::size_t sign_rule_violations(const HochschildRing& H, const ModulePtr& k, std::size_t T) {
  CharMap phi(H, k, T);
  const auto& E = phi.ext();
  const auto& F = H.field();
  std::size_t bad = 0;
  for (std::size_t n = 0; n <= T; ++n)
    for (std::size_t m = 0; n + m <= T; ++m)
      for (std::size_t i = 0; i < H.dim(n); ++i)
        for (std::size_t j = 0; j < E.dim(m); ++j) {
          auto act = h_action(phi, phi, E, n, unit_vec(H.dim(n), i), m, unit_vec(E.dim(m), j));
          if (n * m % 2 == 1)
            for (auto& c : act.right) c = F.neg(c);
          if (act.left != act.right) ++bad;
        }
  return bad;
}

void cmd_hh(const Session& S, const Options& o, Report& r) {
  HochschildRing H(S.s.algebra, hh_options(o));
  const auto& P = H.presentation();
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= H.verified_to(); ++n) dims.push_back(H.dim(n));
  Json gens = Json::array();
  for (const auto& g : P.generators) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  Json rels = Json::array();
  for (const auto& rel : P.relations) rels.push_back(P.relation_string(rel));
  r.result["dims"] = dims;
  r.result["generators"] = gens;
  r.result["relations"] = rels;
  r.result["relations_verified_to"] = P.relations_verified_to;
  r.budgets = budgets_json(o, H.verified_to());

  const std::size_t T = std::min<std::size_t>(H.verified_to(), 6);
  const std::size_t comm = H.commutativity_violations(T);
  r.add_check("C2.3b", "HH* is graded commutative", tri(comm == 0),
              std::to_string(comm) + " violations over basis pairs to total degree " + std::to_string(T));
  auto k = share(semisimple_top(S.s.algebra));
  const std::size_t sign = sign_rule_violations(H, k, T);
  r.add_check("P2.2", "HH* acts centrally on Ext*(k,k) up to the Koszul sign", tri(sign == 0),
              std::to_string(sign) + " violations to total degree " + std::to_string(T));
}

void cmd_fg(const Session& S, const Options& o, Report& r) {
  const FgReport f = fg_check(S.s.algebra, o.degree, hh_options(o));
  Json gens = Json::array();
  for (const auto& [name, deg] : f.hh_generators) gens.push_back({{"name", name}, {"degree", deg}});
  r.result["hh_generators"] = gens;
  r.result["hh_last_new_degree"] = f.hh_last_new_degree;
  r.result["hh_verified_to"] = f.hh_verified_to;
  r.result["module_generator_degrees"] = f.module_generator_degrees;
  r.result["module_last_new_degree"] = f.module_last_new_degree;
  r.result["module_verified_to"] = f.module_verified_to;
  r.result["ext_dims"] = f.ext_dims;
  const char* kind = f.growth.kind == Growth::Zero ? "zero" : f.growth.kind == Growth::Polynomial ? "polynomial"
                                                                                                  : "exponential";
  r.result["growth"] = {{"kind", kind}, {"degree", f.growth.degree}};
  r.result["verdict"] = f.verdict;
  r.result["violated"] = f.violated;
  r.budgets = budgets_json(o, f.hh_verified_to);
}

VarietyIdeal union_of(const VarietyContext& ctx, const std::vector<VarietyIdeal>& parts) {
  if (parts.empty()) return ctx.irrelevant();
  VarietyIdeal U = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) U = unite(U, parts[i]);
  return U;
}

void cmd_variety(const Session& S, const Options& o, Report& r, const VarietyContext& ctx) {
  if (!o.module.empty() && o.complex.empty()) {
    r.inputs["module"] = o.module;
    auto M = need_module(S, o.module);
    const VarietyIdeal V = ctx.variety(M);
    r.result["variety"] = ideal_json(V);
    const VarietyIdeal W = complex_variety(ctx, BoundedComplex::stalk(*M, 0));
    r.add_check("P9.2", "V(M) from φ_M equals the variety of M as a stalk complex", equals(V, W));
    return;
  }
  const BoundedComplex X = target(S, o, r.inputs);
  const VarietyIdeal V = complex_variety(ctx, X);
  r.result["variety"] = ideal_json(V);
  std::vector<VarietyIdeal> hom, terms;
  for (int i = X.lo(); i <= X.hi(); ++i) {
    Representation Hi = homology(X, i);
    if (Hi.dim() > 0) hom.push_back(ctx.variety(share(std::move(Hi))));
    if (X.dim(i) > 0) terms.push_back(ctx.variety(share(X.term(i))));
  }
  r.add_check("P9.3a", "V(X) lies in the union of the varieties of its homology", contains(union_of(ctx, hom), V));
  r.add_check("P9.3b", "V(X) lies in the union of the varieties of its terms", contains(union_of(ctx, terms), V));
}

/// h² acts by zero on Hom*(pY, k) on the computed window.
Tri squared_annihilates(const VarietyContext& ctx, const BoundedComplex& Y, std::size_t n, const Vec& h) {
  const std::size_t D = ctx.degree_bound();
  if (2 * n > D) return Tri::Unknown;
  const auto& H = ctx.hochschild();
  const Vec h2 = H.product(n, h, n, h);
  TopAction act(ctx, Y);
  const int nn = static_cast<int>(2 * n);
  for (int i = act.lowest(); i + nn <= act.lowest() + static_cast<int>(D); ++i)
    for (std::size_t b = 0; b < act.dim(i); ++b)
      if (!is_zero_vec(act.apply(2 * n, h2, i, unit_vec(act.dim(i), b)))) return Tri::No;
  return Tri::Yes;
}

void cmd_koszul(const Session& S, const Options& o, Report& r, const VarietyContext& ctx) {
  if (o.cls.empty()) throw UsageError("--class is required");
  const BoundedComplex X = target(S, o, r.inputs);
  r.inputs["class"] = o.cls;
  const ClassSpec c = parse_class(ctx, o.cls);
  const auto& H = ctx.hochschild();
  const BoundedComplex Y = koszul_object(H, X, c.degree, c.coords);
  const VarietyIdeal VX = complex_variety(ctx, X);
  const VarietyIdeal VY = complex_variety(ctx, Y);
  Json cj{{"label", c.label}, {"degree", c.degree}, {"coords", c.coords}};
  if (c.poly) cj["polynomial"] = c.poly->to_string();
  r.result["class"] = cj;
  r.result["object"] = complex_json(Y);
  r.result["variety"] = ideal_json(VY);

  if (c.poly) {
    const VarietyIdeal expected = intersect(ctx.ideal_of({*c.poly}), VX);
    r.result["expected"] = ideal_json(expected);
    r.add_check("P3.7", "V(X/h) = V(h) ∩ V(X)", equals(VY, expected));
  } else {
    r.add_check("P3.7", "V(X/h) = V(h) ∩ V(X)", Tri::Unknown, "the class has no image in H_red");
  }
  r.add_check("P3.5a", "V(X/h) lies in V(X) ∪ V(X[p])", contains(VX, VY));
  r.add_check("P3.6d", "h^2 annihilates X/h", squared_annihilates(ctx, Y, c.degree, c.coords));

  // φ_X(h) = 0 for a module: the cone splits
  if (!o.module.empty() && c.degree <= ctx.degree_bound()) {
    const auto M = need_module(S, o.module);
    if (is_zero_vec(ctx.char_map(M).apply(c.degree, c.coords))) {
      const int p = static_cast<int>(c.degree);
      const BoundedComplex split = direct_sum(shift(X, 1), shift(X, p));
      const auto k = BoundedComplex::stalk(*ctx.simple_top(), 0);
      const int lo = -p - 2, hi = 3;
      const bool same = homology_dims(Y, lo, hi) == homology_dims(split, lo, hi) &&
                        derived_hom(Y, k, lo, hi) == derived_hom(split, k, lo, hi);
      r.add_check("P3.6a", "φ_M(h) = 0 gives X/h ≅ X[1] ⊕ X[p]", tri(same),
                  "homology and Hom(-, k[i]) dims compared for i in [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
    }
  }
  const Representation Mh = bimodule_koszul(H, c.degree, c.coords);
  const VarietyIdeal VT = complex_variety(ctx, tensor(Mh, X));
  r.add_check("L9.7", "V(M_h ⊗ X) = V(X/h)", equals(VT, VY));
}

std::vector<std::size_t> hom_edge(const BoundedComplex& X, const BoundedComplex& k, std::size_t D) {
  const int top = X.trimmed().empty() ? 0 : X.trimmed().hi();
  const int edge = -top + static_cast<int>(D);
  return derived_hom(X, k, edge - 2, edge);
}

void cmd_complexity(const Session& S, const Options& o, Report& r, const VarietyContext& ctx) {
  const BoundedComplex X = target(S, o, r.inputs);
  const ComplexityReport c = complexity(ctx, X);
  r.result["hom_dims"] = c.dims;
  r.result["complexity_by_growth"] = c.by_growth;
  r.result["complexity_by_variety"] = c.by_variety;
  if (c.mismatch) r.result["diagnostic"] = c.diagnostic;
  r.add_check("P9.4c", "complexity equals the dimension of the variety", tri(!c.mismatch));
  const ComplexityReport s = complexity(ctx, shift(X, 1));
  r.add_check("P4.3", "complexity is shift invariant", tri(s.by_growth == c.by_growth));
  const PerfectReport p = is_perfect(X, o.syzygy_bound, &ctx);
  const Tri agree = p.perfect == Verdict::Unknown ? Tri::Unknown : tri((p.perfect == Verdict::Yes) == (c.by_growth == 0));
  r.add_check("P4.5", "perfect exactly when the complexity is 0", agree);
}

void cmd_periodicity(const Session& S, const Options& o, Report& r, const VarietyContext& ctx) {
  if (o.module.empty()) throw UsageError("--module is required");
  r.inputs["module"] = o.module;
  const std::size_t B = o.bound ? o.bound : o.degree;
  const auto M = need_module(S, o.module);
  const Periodicity per = periodicity(M, B);
  r.result["found"] = per.found;
  if (per.found) {
    r.result["start"] = per.start;
    r.result["period"] = per.period;
  }
  r.result["bound"] = per.bound;
  r.budgets["period_bound"] = B;
  r.unknown = per.unknown && !per.found;

  const ComplexityReport c = complexity(ctx, BoundedComplex::stalk(*M, 0));
  r.result["complexity"] = c.by_variety;
  Tri v;
  if (per.found) v = tri(c.by_variety == 1);
  else if (c.by_variety == 1) v = Tri::Unknown;  // the period may exceed the bound
  else v = Tri::Yes;
  r.add_check("P4.7", "periodic exactly when the complexity is 1", v);
  r.add_check("P9.4d", "eventually Ω-periodic exactly when the variety is a union of lines", v);
}

void cmd_perfect(const Session& S, const Options& o, Report& r, const VarietyContext& ctx) {
  const BoundedComplex X = target(S, o, r.inputs);
  const PerfectReport p = is_perfect(X, o.syzygy_bound, &ctx);
  r.result["verdict"] = p.perfect == Verdict::Yes ? "perfect" : p.perfect == Verdict::No ? "not perfect" : "unknown";
  r.result["checked_to"] = p.checked_to;
  if (p.budget_hit) r.result["budget_hit"] = true;
  if (p.witness) r.result["witness"] = witness_json(*p.witness);
  r.result["variety_certificate"] = p.variety_certificate;
  r.unknown = p.perfect == Verdict::Unknown;
  if (r.unknown) return;

  const bool perfect = p.perfect == Verdict::Yes;
  const VarietyIdeal V = complex_variety(ctx, X);
  r.result["variety"] = ideal_json(V);
  r.add_check("P9.5", "perfect exactly when V(X) lies in V(H^+)", tri(perfect == (V.dim() == 0)));
  const auto k = BoundedComplex::stalk(*ctx.simple_top(), 0);
  const auto edge = hom_edge(X, k, ctx.degree_bound());
  const bool vanishes = edge == std::vector<std::size_t>(edge.size(), 0);
  r.add_check("P4.5", "perfect exactly when Hom(X, k[i]) vanishes for large i", tri(perfect == vanishes));
}

void cmd_realize(const Session& S, const Options& o, Report& r, const VarietyContext& ctx) {
  if (o.classes.empty()) throw UsageError("--classes is required");
  const BoundedComplex X = target(S, o, r.inputs);
  r.inputs["classes"] = o.classes;
  std::vector<Poly> hs;
  for (const auto& t : o.classes) {
    ClassSpec c = parse_class(ctx, t);
    if (!c.poly || c.poly->is_zero()) throw UsageError("class " + t + " has no nonzero image in H_red");
    hs.push_back(*c.poly);
  }
  const Realization rz = realize_subvariety(ctx, X, hs);
  r.result["object"] = complex_json(rz.object);
  r.result["variety"] = ideal_json(rz.variety);
  r.result["expected"] = ideal_json(rz.expected);
  r.add_check("T3.8", "the iterated Koszul object realizes V(X) ∩ V(h_1, ..., h_t)", rz.matches);
}

void cmd_reduce(const Session& S, const Options& o, Report& r, const VarietyContext& ctx) {
  const BoundedComplex X = target(S, o, r.inputs);
  const PerfectReduction red = reduce_to_perfect(ctx, X);
  Json cls = Json::array();
  for (const auto& f : red.classes) cls.push_back(f.to_string());
  std::vector<std::size_t> bdims;
  for (const auto& B : red.bimodules) bdims.push_back(B.dim());
  r.result["classes"] = cls;
  r.result["bimodule_dims"] = bdims;
  r.result["variety_dims"] = red.dims;
  r.result["result"] = complex_json(red.result);
  r.result["witness_verdict"] = to_string(red.witness.perfect);
  if (red.witness.witness) r.result["witness"] = witness_json(*red.witness.witness);
  r.unknown = red.witness.perfect == Verdict::Unknown;
  r.add_check("P9.8", "tensoring with the M_h produces a perfect complex", tri(red.witness.perfect == Verdict::Yes));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  if (const char* env = std::getenv("SVAR_DEGREE_BOUND")) {
    try {
      o.degree = std::stoul(env);
    } catch (const std::exception&) {
      err << "error: SVAR_DEGREE_BOUND must be a positive integer\n";
      return 2;
    }
    if (o.degree == 0) {
      err << "error: SVAR_DEGREE_BOUND must be a positive integer\n";
      return 2;
    }
  }

  CLI::App app{"support varieties for finite dimensional algebras", "svar"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, ".fda input")->required();
    sub->add_option("--degree", o.degree, "degree bound D")->check(CLI::Range(1, 1000000));
    sub->add_option("--syzygy-bound", o.syzygy_bound, "syzygy bound for perfection")->check(CLI::Range(1, 1000000));
    sub->add_option("--gb-cap", o.gb_cap, "Gröbner degree cap")->check(CLI::Range(1, 1000000));
    sub->add_flag("--json", o.json, "emit a JSON report");
    return sub;
  };
  auto object = [&](CLI::App* sub) {
    sub->add_option("--module", o.module, "module name");
    sub->add_option("--complex", o.complex, "complex name");
    return sub;
  };
  common(app.add_subcommand("resolve", "Betti table of a minimal resolution"))->add_option("--module", o.module);
  auto* ext = common(app.add_subcommand("ext", "dimensions and generator degrees of Ext"));
  ext->add_option("--from", o.from)->required();
  ext->add_option("--to", o.to)->required();
  common(app.add_subcommand("hh", "Hochschild cohomology ring"));
  common(app.add_subcommand("fg-check", "finite generation diagnostics"));
  object(common(app.add_subcommand("variety", "support variety")));
  object(common(app.add_subcommand("koszul", "Koszul object of a class")))->add_option("--class", o.cls)->required();
  object(common(app.add_subcommand("complexity", "complexity")));
  common(app.add_subcommand("periodicity", "syzygy periodicity"))->add_option("--module", o.module)->required();
  app.get_subcommand("periodicity")->add_option("--bound", o.bound, "largest syzygy index")->check(CLI::Range(1, 1000000));
  object(common(app.add_subcommand("perfect", "perfection test")));
  object(common(app.add_subcommand("realize", "realize a subvariety")))
      ->add_option("--classes", o.classes)
      ->required()
      ->expected(1, -1);
  object(common(app.add_subcommand("reduce", "reduce to a perfect complex")));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Report r;
  r.command = command;
  r.inputs["file"] = o.file;
  try {
    const Session S = load(o.file);
    r.budgets = budgets_json(o);
    if (command == "resolve") cmd_resolve(S, o, r);
    else if (command == "ext") cmd_ext(S, o, r);
    else if (command == "hh") cmd_hh(S, o, r);
    else if (command == "fg-check") cmd_fg(S, o, r);
    else {
      const VarietyContext ctx(S.s.algebra, o.degree, hh_options(o), o.gb_cap);
      r.budgets = budgets_json(o, ctx.hochschild().verified_to());
      r.budgets["effective_degree_bound"] = ctx.degree_bound();
      if (ctx.fg_warning()) r.result["fg_warning"] = "Fg fails for this algebra; varieties are indicative only";
      if (command == "variety") cmd_variety(S, o, r, ctx);
      else if (command == "koszul") cmd_koszul(S, o, r, ctx);
      else if (command == "complexity") cmd_complexity(S, o, r, ctx);
      else if (command == "periodicity") cmd_periodicity(S, o, r, ctx);
      else if (command == "perfect") cmd_perfect(S, o, r, ctx);
      else if (command == "realize") cmd_realize(S, o, r, ctx);
      else if (command == "reduce") cmd_reduce(S, o, r, ctx);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const MalformedPresentation& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InfiniteDimensional& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (o.json) out << r.json().dump(2) << "\n";
  else out << r.text();
  return r.exit_code();
}

}  // namespace svar
