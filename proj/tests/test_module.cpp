#include "doctest.h"
#include "support.hpp"
#include "svar/error.hpp"
#include "svar/module.hpp"

using namespace svar;
using namespace svar::testing;

TEST_CASE("regular and simple modules satisfy the relations") {
  for (auto A : {dual_numbers(), klein_four(), cyclic3(), radical_square_zero(), two_cycle()}) {
    CHECK(regular_module(A).satisfies_relations());
    CHECK(semisimple_top(A).satisfies_relations());
    CHECK(is_projective(regular_module(A)));
    CHECK(!is_projective(simple_module(A, 0)));
  }
}

TEST_CASE("from_blocks validates sizes") {
  auto A = klein_four();
  CHECK_THROWS_AS(Representation::from_blocks(A, {2}, {Matrix(2, 2), Matrix(2, 1)}), UsageError);
  auto M = Representation::from_blocks(A, {2}, {Matrix::from_rows({{0, 0}, {1, 0}}), Matrix::from_rows({{0, 0}, {1, 0}})});
  CHECK(M.satisfies_relations());
  auto bad = Representation::from_blocks(A, {2}, {Matrix::from_rows({{1, 0}, {0, 0}}), Matrix(2, 2)});
  CHECK(!bad.satisfies_relations());
}

TEST_CASE("projective covers") {
  auto A = dual_numbers();
  auto C = projective_cover(simple_module(A, 0));
  CHECK(C.P.rank() == 1);
  CHECK(C.P.dim() == 2);
  CHECK(kernel_subspace(A->field(), C.P.vertices(), {0}, C.full).dim() == 1);

  auto K = klein_four();
  auto R = regular_module(K);
  auto rad = submodule(R, radical(R)).rep;
  CHECK(rad.dim() == 3);
  auto CR = projective_cover(rad);
  CHECK(CR.P.rank() == 2);
  CHECK(top(rad).rep.dim() == 2);
  // kernel of the cover lies in rad P
  auto ker = kernel_subspace(K->field(), CR.P.vertices(), rad.vertices(), CR.full);
  auto Prep = CR.P.rep();
  auto radP = radical(Prep);
  for (std::size_t j = 0; j < ker.dim(); ++j) CHECK(radP.contains(K->field(), ker.basis.column(j)));

  auto CP = projective_cover(R);
  CHECK(CP.P.dim() == R.dim());
  CHECK(rank(K->field(), CP.full) == R.dim());
}

TEST_CASE("hom spaces and isomorphisms") {
  auto A = cyclic3();
  auto k = simple_module(A, 0);
  auto id = module_iso(k, k);
  REQUIRE(id);
  CHECK(rank(A->field(), *id) == 1);
  CHECK(!module_iso(k, regular_module(A)));
  auto R = regular_module(A);
  CHECK(hom_basis(R, R).size() == 3);
  CHECK(hom_basis(k, R).size() == 1);
  CHECK(hom_basis(R, k).size() == 1);
  for (const auto& f : hom_basis(R, R)) CHECK(is_homomorphism(R, R, f));
}

TEST_CASE("isomorphism search budget") {
  auto A = klein_four();
  auto S = semisimple_top(A);
  Representation big = S;
  for (int i = 0; i < 5; ++i) big = direct_sum(big, S);
  // End of k^6 is 36-dimensional: too many candidates for a tiny budget
  CHECK_THROWS_AS(module_iso(big, big, 1000), SearchBudgetExceeded);
}

TEST_CASE("regular bimodule") {
  for (auto A : {dual_numbers(), klein_four(), two_cycle()}) {
    auto E = enveloping(A);
    auto L = regular_bimodule(E);
    CHECK(L.dim() == A->dim());
    CHECK(L.satisfies_relations());
    CHECK(is_left_projective(L));
    CHECK(is_right_projective(L));
    auto one = left_action(L, A->unit());
    CHECK(one == Matrix::identity(A->dim()));
  }
}

TEST_CASE("tensor and hom unit laws") {
  std::mt19937 rng(5);
  for (auto A : {dual_numbers(), klein_four(), cyclic3(), two_cycle()}) {
    auto L = regular_bimodule(enveloping(A));
    for (int t = 0; t < 4; ++t) {
      auto M = random_module(A, rng, 6);
      auto T = tensor_over_algebra(L, M);
      CHECK(T.rep.dim() == M.dim());
      CHECK(T.rep.satisfies_relations());
      CHECK(module_iso(T.rep, M).has_value());
      auto H = hom_module(L, M);
      CHECK(!H.exactness_warning);
      CHECK(H.rep.satisfies_relations());
      CHECK(module_iso(H.rep, M).has_value());
    }
    auto Z = zero_module(A);
    CHECK(tensor_over_algebra(L, Z).rep.dim() == 0);
    CHECK(hom_module(L, Z).rep.dim() == 0);
  }
}

TEST_CASE("free bimodule tensor") {
  auto A = dual_numbers();
  auto E = enveloping(A);
  ProjectiveModule free(E, {0});
  auto T = tensor_over_algebra(free.rep(), simple_module(A, 0));
  CHECK(T.rep.dim() == 2);
}
