#include "svar/derived.hpp"
#include "svar/error.hpp"

namespace svar {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "unknown";
  }
}

PerfectReport is_perfect(const BoundedComplex& X0, std::size_t syzygy_bound, const VarietyContext* ctx) {
  PerfectReport out;
  BoundedComplex X = X0.trimmed();
  if (X.empty() || is_acyclic(X)) {
    out.perfect = Verdict::Yes;
    out.witness = BoundedComplex::zero(X0.algebra());
    out.checked_to = X.empty() ? 0 : X.hi();
    return out;
  }
  ProjectiveModel P(X);
  const int floor = X.lo() - static_cast<int>(syzygy_bound);
  // exponential syzygy growth would exhaust memory long before the bound
  constexpr std::size_t kTermBudget = 1000;
  if (auto b = P.bottom(floor, kTermBudget, &out.checked_to)) {
    out.perfect = Verdict::Yes;
    out.witness = P.truncation(*b).trimmed();
    return out;
  }
  out.budget_hit = out.checked_to > floor;
  if (ctx) {
    // V(X) is the origin exactly for perfect X when Fg holds
    const VarietyIdeal V = complex_variety(*ctx, X);
    if (V.dim() > 0 && !ctx->fg_warning()) {
      out.perfect = Verdict::No;
      out.variety_certificate = true;
    }
  }
  return out;
}

ComplexityReport complexity(const VarietyContext& ctx, const BoundedComplex& X) {
  ComplexityReport out;
  ProjectiveModel P(X);
  HomComplex hom(P, BoundedComplex::stalk(*ctx.simple_top(), 0));
  const int lo = -P.top();
  out.dims = hom.dims(lo, lo + static_cast<int>(ctx.degree_bound()));
  const GrowthFit fit = classify_growth(out.dims);
  switch (fit.kind) {
    case Growth::Zero: out.by_growth = 0; break;
    case Growth::Polynomial: out.by_growth = fit.degree + 1; break;
    case Growth::Exponential: out.by_growth = -1; break;
  }
  out.by_variety = complex_variety(ctx, X).dim();
  if (out.by_growth != out.by_variety) {
    out.mismatch = true;
    out.diagnostic = out.by_growth < 0 ? "exponential growth; the variety dimension does not bound it"
                                       : "growth fit gives " + std::to_string(out.by_growth) + ", variety gives " +
                                             std::to_string(out.by_variety) + " (window too short or Fg fails)";
  }
  return out;
}

Periodicity periodicity(const ModulePtr& M, std::size_t bound) {
  Periodicity out;
  out.bound = bound;
  std::vector<Representation> omega;
  for (std::size_t t = 0; t <= bound; ++t) {
    omega.push_back(syzygy(M, t));
    if (omega.back().dim() == 0) return out;  // finite projective dimension
    for (std::size_t s = 0; s < t; ++s) {
      const auto& A = omega[s];
      const auto& B = omega[t];
      if (A.dim() != B.dim() || A.dims_by_vertex() != B.dims_by_vertex()) continue;
      try {
        if (module_iso(A, B)) {
          out.found = true;
          out.start = s;
          out.period = t - s;
          return out;
        }
      } catch (const SearchBudgetExceeded&) {
        out.unknown = true;
      }
    }
  }
  return out;
}

}  // namespace svar
