#include "doctest.h"
#include "support.hpp"
#include "svar/error.hpp"
#include "svar/resolution.hpp"

using namespace svar;
using namespace svar::testing;

namespace {

ModulePtr simple(const AlgebraPtr& A) { return std::make_shared<const Representation>(simple_module(A, 0)); }

// dim Ω^n(k) from iterated kernels of explicit maps, independent of the
// cover bookkeeping: Ω^{n+1} = ker(Λ^{β_n} -> Ω^n) with β_n = dim top Ω^n.
std::vector<std::size_t> syzygy_dims_by_kernels(const AlgebraPtr& A, std::size_t n) {
  std::vector<std::size_t> dims;
  Representation M = simple_module(A, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    dims.push_back(M.dim());
    auto C = projective_cover(M);
    auto K = kernel_subspace(A->field(), C.P.vertices(), M.vertices(), C.full);
    M = submodule(C.P.rep(), K).rep;
  }
  return dims;
}

}  // namespace

TEST_CASE("projective module resolves in one step") {
  auto A = klein_four();
  auto R = resolution_of(std::make_shared<const Representation>(regular_module(A)));
  CHECK(R->betti(3) == std::vector<std::size_t>{1, 0, 0, 0});
  CHECK(R->syzygy(1).dim() == 0);
}

TEST_CASE("betti numbers of the oracle algebras") {
  auto R = resolution_of(simple(dual_numbers()));
  CHECK(R->betti(10) == std::vector<std::size_t>(11, 1));
  for (std::size_t n = 1; n <= 10; ++n) CHECK(R->syzygy(n).dim() == 1);

  auto K = resolution_of(simple(klein_four()));
  auto b = K->betti(10);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(b[n] == n + 1);
  auto dims = syzygy_dims_by_kernels(klein_four(), 10);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(K->syzygy(n).dim() == dims[n]);
  // Ω^n k has dim 2n+1 for n >= 1 (n+1 generators, n socle vectors)
  for (std::size_t n = 1; n <= 10; ++n) CHECK(dims[n] == 2 * n + 1);

  auto Z = resolution_of(simple(radical_square_zero()));
  auto bz = Z->betti(8);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(bz[n] == (std::size_t{1} << n));
}

TEST_CASE("syzygies over F_3[x]/(x^3)") {
  auto A = cyclic3();
  auto k = simple(A);
  CHECK(syzygy(k, 1).dim() == 2);
  auto O2 = syzygy(k, 2);
  CHECK(O2.dim() == 1);
  CHECK(module_iso(O2, *k).has_value());
  CHECK(!module_iso(syzygy(k, 1), *k).has_value());
}

TEST_CASE("exactness and minimality") {
  for (auto A : {dual_numbers(), klein_four(), cyclic3(), radical_square_zero(), two_cycle()}) {
    auto R = resolution_of(simple(A));
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(R->check_exact(i));
      CHECK(R->check_minimal(i + 1));
    }
  }
}

TEST_CASE("bimodule resolution of the algebra") {
  for (auto A : {dual_numbers(), klein_four(), cyclic3(), two_cycle()}) {
    auto E = enveloping(A);
    auto L = std::make_shared<const Representation>(regular_bimodule(E));
    auto R = resolution_of(L);
    // P_0 = ⊕_v Λe_v ⊗ e_vΛ
    std::size_t expect = 0;
    for (int v = 0; v < A->num_vertices(); ++v) {
      std::size_t left = 0, right = 0;
      for (const auto& b : A->basis()) {
        if (b.right == v) ++left;
        if (b.left == v) ++right;
      }
      expect += left * right;
    }
    CHECK(R->term(0).dim() == expect);
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(R->check_exact(i));
      CHECK(R->check_minimal(i + 1));
    }
  }
  auto R = resolution_of(std::make_shared<const Representation>(regular_bimodule(enveloping(dual_numbers()))));
  CHECK(R->betti(6) == std::vector<std::size_t>(7, 1));
  auto K = resolution_of(std::make_shared<const Representation>(regular_bimodule(enveloping(klein_four()))));
  CHECK(K->betti(4) == std::vector<std::size_t>{1, 2, 3, 4, 5});
}

TEST_CASE("lifting maps along resolutions") {
  auto A = dual_numbers();
  auto k = simple(A);
  auto R = resolution_of(k);
  // the generator of Ext^1(k,k): P_1 -> k sending the generator to 1
  Matrix z(1, 1);
  z(0, 0) = 1;
  auto lifts = lift_map(*R, 1, z, *R, 6);
  REQUIRE(lifts.size() == 7);
  for (std::size_t i = 0; i <= 6; ++i) {
    const auto& P = R->term(i);
    Vec gen(P.dim(), 0);
    gen[P.generator_index(0)] = 1;
    CHECK(lifts[i].column(0) == gen);
  }
  Matrix zero(1, 1);
  for (const auto& f : lift_map(*R, 1, zero, *R, 3)) CHECK(f.is_zero());

  // identity of Ext^0 lifts to the identity chain map
  auto id = lift_map(*R, 0, R->augmentation(), *R, 3);
  for (std::size_t i = 0; i <= 3; ++i) {
    const auto& P = R->term(i);
    Vec gen(P.dim(), 0);
    gen[P.generator_index(0)] = 1;
    CHECK(id[i].column(0) == gen);
  }
}

TEST_CASE("lifting a non-cocycle fails") {
  auto A = cyclic3();
  auto R = resolution_of(simple(A));
  auto L = resolution_of(std::make_shared<const Representation>(regular_module(A)));
  // f: P_1 -> Λ sending the generator to 1; f∘d_2 = x^2 != 0
  Matrix f(3, 1);
  f(0, 0) = 1;
  CHECK_THROWS_AS(lift_map(*R, 1, f, *L, 1), LiftFailed);
  // the genuine cocycle x^2: P_1 -> Λ lifts
  Matrix g(3, 1);
  g(2, 0) = 1;
  CHECK_NOTHROW(lift_map(*R, 1, g, *L, 3));
}
