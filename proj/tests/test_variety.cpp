#include "doctest.h"
#include "support.hpp"
#include "svar/variety.hpp"

using namespace svar;
using namespace svar::testing;

TEST_CASE("commutative reduction") {
  HochschildRing D(dual_numbers(), {6, 1500});
  auto rd = commutative_reduction(D.presentation());
  CHECK(rd.ring->names() == std::vector<std::string>{"z1"});
  CHECK(rd.relations.empty());

  HochschildRing C(cyclic3(), {6, 1500});
  auto rc = commutative_reduction(C.presentation());
  REQUIRE(rc.ring->nvars() == 1);
  CHECK(rc.ring->degrees()[0] == 2);

  // a char-3 presentation with one odd generator u, u^2 = 0 reduces to F_3
  GradedRingPresentation P;
  P.p = 3;
  P.generators = {{"u", 1, {}}};
  P.relations = {{2, {{Exponents{2}, 1}}}};
  auto r0 = commutative_reduction(P);
  CHECK(r0.ring->nvars() == 0);
  CHECK(r0.relations.empty());
}

TEST_CASE("varieties over the dual numbers") {
  auto A = dual_numbers();
  VarietyContext ctx(A, 6);
  CHECK(!ctx.fg_warning());
  auto Vk = ctx.variety(ctx.simple_top());
  CHECK(Vk.dim() == 1);
  CHECK(equals(Vk, ctx.whole()) == Tri::Yes);
  auto VL = ctx.variety(share(regular_module(A)));
  CHECK(VL.dim() == 0);
  CHECK(equals(VL, ctx.irrelevant()) == Tri::Yes);
}

TEST_CASE("varieties over the Klein four group") {
  auto A = klein_four();
  VarietyContext ctx(A, 6);
  REQUIRE(ctx.ring()->nvars() == 2);
  for (auto d : ctx.ring()->degrees()) CHECK(d == 1);
  auto k = ctx.simple_top();
  auto Vk = ctx.variety(k);
  CHECK(Vk.dim() == 2);
  CHECK(Vk.ideal.groebner_basis().empty());
  CHECK(ctx.variety(share(regular_module(A))).dim() == 0);

  // the three rank varieties over F_2 are lines
  std::vector<ModulePtr> lines{line_module(A, 1, 0), line_module(A, 0, 1), line_module(A, 1, 1)};
  std::vector<VarietyIdeal> V;
  for (const auto& M : lines) {
    V.push_back(ctx.variety(M));
    CHECK(V.back().dim() == 1);
    const auto& G = V.back().ideal.groebner_basis();
    REQUIRE(G.size() == 1);
    CHECK(G[0].degree() == 1);
  }
  CHECK(equals(V[0], V[1]) == Tri::No);
  CHECK(equals(V[0], V[2]) == Tri::No);
  CHECK(equals(V[1], V[2]) == Tri::No);
  // pairwise intersections are the origin
  CHECK(intersect(V[0], V[1]).dim() == 0);

  // V(M ⊕ N) = V(M) ∪ V(N)
  auto S = share(direct_sum(*lines[0], *lines[1]));
  auto VS = ctx.variety(S);
  CHECK(VS.dim() == 1);
  CHECK(equals(VS, unite(V[0], V[1])) == Tri::Yes);

  // V(ΩM) = V(M)
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto O = share(syzygy(lines[i], 1));
    CHECK(equals(ctx.variety(O), V[i]) == Tri::Yes);
  }
  CHECK(equals(ctx.variety(share(syzygy(k, 2))), Vk) == Tri::Yes);
}

TEST_CASE("pair varieties") {
  auto A = klein_four();
  VarietyContext ctx(A, 6);
  auto M = line_module(A, 1, 0), N = line_module(A, 0, 1);
  auto VM = ctx.variety(M), VN = ctx.variety(N);
  auto VMN = ctx.variety_pair(M, N);
  CHECK(contains(intersect(VM, VN), VMN) == Tri::Yes);
  CHECK(VMN.dim() == 0);
  auto VMM = ctx.variety_pair(M, M);
  CHECK(equals(VMM, VM) == Tri::Yes);
  auto k = ctx.simple_top();
  auto VkM = ctx.variety_pair(k, M);
  CHECK(contains(intersect(ctx.variety(k), VM), VkM) == Tri::Yes);
  CHECK(equals(VkM, VM) == Tri::Yes);
}

TEST_CASE("fg warning") {
  VarietyContext ctx(radical_square_zero(), 6);
  CHECK(ctx.fg_warning());
  CHECK(ctx.variety(ctx.simple_top()).fg_warning);
}
