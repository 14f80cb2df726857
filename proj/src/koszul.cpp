#include "svar/derived.hpp"
#include "svar/error.hpp"

namespace svar {

namespace {

struct Pieces {
  SubmoduleData omega;  // Ω^n Λ inside B_{n-1}
  Matrix hbar;          // Ω^n Λ -> Λ
};

Pieces pieces(const HochschildRing& H, std::size_t n, std::span<const Elem> h) {
  if (n == 0) throw UsageError("koszul: the class must have positive degree");
  if (n > H.verified_to()) throw UsageError("koszul: degree beyond the computed Hochschild range");
  const auto& F = H.field();
  const auto& R = H.resolution();
  const auto& L = *H.bimodule();
  Pieces out{R.syzygy_data(n), {}};
  Matrix hfull = expand_from_projective(R.term(n), H.ext().cocycle(n, h), L);
  // h vanishes on ker d_n, so it factors through d_n: B_n ->> Ω^n
  auto U = solve_many(F, R.differential_full(n), out.omega.space.basis);
  if (!U) throw Error("koszul: syzygy is not the image of the differential");
  out.hbar = mul(F, hfull, *U);
  return out;
}

}  // namespace

BoundedComplex koszul_bimodule_complex(const HochschildRing& H, std::size_t n, std::span<const Elem> h) {
  const auto& env = H.enveloping_algebra();
  const auto& R = H.resolution();
  Pieces pc = pieces(H, n, h);
  const int nn = static_cast<int>(n);

  // Q = (Ω^n -> B_{n-1} -> ... -> B_0) in degrees -n..0
  std::vector<Representation> terms{pc.omega.rep};
  std::vector<Matrix> diffs{pc.omega.space.basis};
  for (std::size_t j = n; j-- > 0;) {
    terms.push_back(R.term(j).rep());
    if (j > 0) diffs.push_back(R.differential_full(j));
  }
  BoundedComplex Q(env, -nn, std::move(terms), std::move(diffs));
  ChainMap g;
  g.comps[-nn] = pc.hbar;
  return cone(Q, BoundedComplex::stalk(*H.bimodule(), -nn), g);
}

BoundedComplex koszul_object(const HochschildRing& H, const BoundedComplex& X, std::size_t n,
                             std::span<const Elem> h) {
  if (X.algebra() != H.algebra()) throw UsageError("koszul: complex over a different algebra");
  return tensor(koszul_bimodule_complex(H, n, h), X);
}

Representation bimodule_koszul(const HochschildRing& H, std::size_t n, std::span<const Elem> h) {
  const auto& F = H.field();
  const auto& L = *H.bimodule();
  Pieces pc = pieces(H, n, h);
  const auto& B = H.resolution().term(n - 1);
  Representation S = direct_sum(L, B.rep());
  const Matrix& iota = pc.omega.space.basis;
  Matrix span(S.dim(), iota.cols());
  set_block(span, 0, 0, pc.hbar);
  set_block(span, L.dim(), 0, scaled(F, iota, F.neg(1)));
  return quotient(S, make_subspace(F, S.vertices(), span)).rep;
}

// --- realization and reduction ---------------------------------------------------------

namespace {

std::size_t poly_degree(const Poly& f) {
  if (f.is_zero()) throw UsageError("koszul: zero class");
  return f.ring()->degree(f.terms().front().m);
}

}  // namespace

Realization realize_subvariety(const VarietyContext& ctx, const BoundedComplex& M, const std::vector<Poly>& hs) {
  Realization out;
  out.object = M;
  for (const auto& f : hs) {
    const std::size_t n = poly_degree(f);
    out.object = koszul_object(ctx.hochschild(), out.object, n, ctx.evaluate(f, n));
  }
  out.variety = complex_variety(ctx, out.object);
  out.expected = intersect(complex_variety(ctx, M), ctx.ideal_of(hs));
  out.matches = equals(out.variety, out.expected);
  return out;
}

PerfectReduction reduce_to_perfect(const VarietyContext& ctx, const BoundedComplex& X) {
  PerfectReduction out;
  out.result = X;
  VarietyIdeal V = complex_variety(ctx, X);
  int d = V.dim();
  out.dims.push_back(d);
  const auto& R = ctx.ring();
  const std::size_t D = ctx.degree_bound();
  while (d > 0) {
    std::optional<Poly> pick;
    auto cuts = [&](const Poly& f) {
      if (intersect(V, ctx.ideal_of({f})).dim() == d - 1) pick = f;
      return pick.has_value();
    };
    for (std::size_t n = 1; n <= D && !pick; ++n) {
      auto mons = ctx.monomials(n);
      for (const auto& m : mons)
        if (cuts(Poly::monomial(R, m))) break;
      // sums of two monomials catch unions of coordinate subspaces
      for (std::size_t a = 0; a < mons.size() && !pick; ++a)
        for (std::size_t b = a + 1; b < mons.size() && !pick; ++b)
          cuts(Poly::monomial(R, mons[a]) + Poly::monomial(R, mons[b]));
    }
    if (!pick) throw ParameterSearchFailed("reduce: no class of degree <= " + std::to_string(D) + " cuts dimension " +
                                           std::to_string(d));
    const std::size_t n = poly_degree(*pick);
    Representation Mh = bimodule_koszul(ctx.hochschild(), n, ctx.evaluate(*pick, n));
    out.result = tensor(Mh, out.result);
    out.bimodules.push_back(std::move(Mh));
    V = intersect(V, ctx.ideal_of({*pick}));
    out.classes.push_back(std::move(*pick));
    d = V.dim();
    out.dims.push_back(d);
  }
  out.witness = is_perfect(out.result, 20, &ctx);
  return out;
}

}  // namespace svar
