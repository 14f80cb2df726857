#include "doctest.h"
#include "support.hpp"
#include "svar/cohomology.hpp"
#include "svar/error.hpp"

using namespace svar;
using namespace svar::testing;

namespace {

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

// Ext^1 from 0 -> ΩM -> P_0 -> M -> 0:
// dim Ext^1 = dim Hom(ΩM, N) - dim Hom(P_0, N) + dim Hom(M, N)
std::size_t ext1_by_homs(const Representation& M, const Representation& N) {
  auto C = projective_cover(M);
  auto K = kernel_subspace(M.field(), C.P.vertices(), M.vertices(), C.full);
  auto omega = submodule(C.P.rep(), K).rep;
  return hom_basis(omega, N).size() - hom_basis(C.P.rep(), N).size() + hom_basis(M, N).size();
}

}  // namespace

TEST_CASE("ext of the simple module") {
  auto k = share(simple_module(dual_numbers(), 0));
  CHECK(ExtSpace(k, k).dims(8) == std::vector<std::size_t>(9, 1));
  auto kv = share(semisimple_top(klein_four()));
  auto dv = ExtSpace(kv, kv).dims(8);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(dv[n] == n + 1);
  auto kz = share(semisimple_top(radical_square_zero()));
  auto dz = ExtSpace(kz, kz).dims(7);
  for (std::size_t n = 0; n <= 7; ++n) CHECK(dz[n] == (std::size_t{1} << n));
  auto s1 = share(simple_module(two_cycle(), 0));
  auto d2 = ExtSpace(s1, s1).dims(6);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(d2[n] == (n % 2 == 0 ? 1u : 0u));
}

TEST_CASE("ext in low degrees against hom oracles") {
  std::mt19937 rng(11);
  for (auto A : {dual_numbers(), klein_four(), cyclic3(), two_cycle()}) {
    for (int t = 0; t < 4; ++t) {
      auto M = random_module(A, rng, 5);
      auto N = random_module(A, rng, 5);
      ExtSpace E(share(M), share(N));
      CHECK(E.dim(0) == hom_basis(M, N).size());
      CHECK(E.dim(1) == ext1_by_homs(M, N));
    }
  }
}

TEST_CASE("yoneda products over truncated polynomial rings") {
  auto k2 = share(simple_module(dual_numbers(), 0));
  ExtSpace E2(k2, k2);
  // char 2: u^2 generates Ext^2
  CHECK(yoneda_product(E2, 1, unit(1, 0), E2, 1, unit(1, 0), E2) == Vec{1});

  auto k3 = share(simple_module(cyclic3(), 0));
  ExtSpace E3(k3, k3);
  // F_3[x]/(x^3): u^2 = 0, v = Ext^2 generator, uv spans Ext^3
  CHECK(yoneda_product(E3, 1, unit(1, 0), E3, 1, unit(1, 0), E3) == Vec{0});
  CHECK(yoneda_product(E3, 1, unit(1, 0), E3, 2, unit(1, 0), E3) != Vec{0});
  CHECK(yoneda_product(E3, 2, unit(1, 0), E3, 2, unit(1, 0), E3) != Vec{0});
  // identity is a unit
  auto id = E3.identity();
  CHECK(yoneda_product(E3, 0, id, E3, 3, unit(1, 0), E3) == Vec{1});
}

TEST_CASE("yoneda product is associative") {
  auto A = klein_four();
  auto k = share(semisimple_top(A));
  ExtSpace E(k, k);
  for (std::size_t a = 1; a <= 2; ++a)
    for (std::size_t b = 1; b <= 2; ++b)
      for (std::size_t c = 1; c <= 2; ++c)
        for (std::size_t i = 0; i < E.dim(a); ++i)
          for (std::size_t j = 0; j < E.dim(b); ++j) {
            Vec x = unit(E.dim(a), i), y = unit(E.dim(b), j), z = unit(E.dim(c), 0);
            auto lhs = yoneda_product(E, a + b, yoneda_product(E, a, x, E, b, y, E), E, c, z, E);
            auto rhs = yoneda_product(E, a, x, E, b + c, yoneda_product(E, b, y, E, c, z, E), E);
            CHECK(lhs == rhs);
          }
}

TEST_CASE("hochschild cohomology dimensions") {
  HochschildRing D(dual_numbers());
  for (std::size_t n = 0; n <= 6; ++n) CHECK(D.dim(n) == 2);
  // abelian group algebra: dim HH^n(kG) = |G| dim H^n(G, k)
  HochschildRing K(klein_four(), {4, 1500});
  for (std::size_t n = 0; n <= 4; ++n) CHECK(K.dim(n) == 4 * (n + 1));
  HochschildRing C(cyclic3());
  for (std::size_t n = 0; n <= 6; ++n) CHECK(C.dim(n) == 3);
  // HH^0 is the centre
  auto z = K.centre_element(unit(K.dim(0), 1));
  auto Am = klein_four()->left_mult_matrix(z);
  CHECK(Am == klein_four()->right_mult_matrix(z));
}

TEST_CASE("hochschild ring is graded commutative") {
  HochschildRing D(dual_numbers());
  CHECK(D.commutativity_violations(6) == 0);
  HochschildRing C(cyclic3());
  CHECK(C.commutativity_violations(6) == 0);
  // odd classes square to zero in odd characteristic
  for (std::size_t i = 0; i < C.dim(1); ++i) {
    auto u = unit(C.dim(1), i);
    CHECK(is_zero_vec(C.product(1, u, 1, u)));
  }
}

TEST_CASE("hochschild presentations") {
  HochschildRing D(dual_numbers(), {6, 1500});
  const auto& P = D.presentation();
  REQUIRE(P.generators.size() == 2);
  CHECK(P.generators[0].degree == 0);
  CHECK(P.generators[1].degree == 1);
  REQUIRE(P.relations.size() == 1);
  CHECK(P.relation_string(P.relations[0]) == "c1^2 = 0");
  CHECK(P.relations_verified_to == 6);

  HochschildRing C(cyclic3(), {6, 1500});
  const auto& Q = C.presentation();
  REQUIRE(Q.generators.size() == 3);
  CHECK(Q.generators[1].degree == 1);
  CHECK(Q.generators[2].degree == 2);
  REQUIRE(Q.relations.size() == 1);
  CHECK(Q.relation_string(Q.relations[0]) == "c1^3 = 0");
  // the presentation reproduces the dimensions
  for (std::size_t n = 0; n <= 6; ++n) {
    auto mons = C.monomials(n);
    Matrix vals(C.dim(n), mons.size());
    for (std::size_t i = 0; i < mons.size(); ++i) vals.set_column(i, C.evaluate(mons[i]));
    CHECK(rank(C.field(), vals) == C.dim(n));
  }
}

TEST_CASE("characteristic map is a ring homomorphism") {
  for (auto A : {dual_numbers(), cyclic3()}) {
    HochschildRing H(A, {4, 1500});
    auto k = share(simple_module(A, 0));
    CharMap phi(H, k, 4);
    const auto& E = phi.ext();
    CHECK(phi.apply(0, H.one()) == E.identity());
    for (std::size_t a = 0; a <= 2; ++a)
      for (std::size_t b = 0; a + b <= 4; ++b)
        for (std::size_t i = 0; i < H.dim(a); ++i)
          for (std::size_t j = 0; j < H.dim(b); ++j) {
            auto x = unit(H.dim(a), i), y = unit(H.dim(b), j);
            auto lhs = phi.apply(a + b, H.product(a, x, b, y));
            auto rhs = yoneda_product(E, a, phi.apply(a, x), E, b, phi.apply(b, y), E);
            CHECK(lhs == rhs);
          }
  }
  // over F_3[x]/(x^3) the map onto Ext*(k,k) is surjective in each degree
  auto C3 = cyclic3();
  HochschildRing H(C3, {4, 1500});
  CharMap phi(H, share(simple_module(C3, 0)), 4);
  for (std::size_t n = 0; n <= 4; ++n) CHECK(rank(H.field(), phi.matrix(n)) == 1);
}

TEST_CASE("action of hochschild classes obeys the sign rule") {
  auto A = cyclic3();
  HochschildRing H(A, {3, 1500});
  auto M = share(simple_module(A, 0));
  auto R = regular_module(A);
  Vec x2(3, 0);
  x2[2] = 1;
  std::vector<Vec> gens{x2};
  auto N = share(quotient(R, generated_submodule(R, gens)).rep);
  REQUIRE(N->dim() == 2);
  CharMap phiM(H, M, 3), phiN(H, N, 3);
  ExtSpace MN(M, N);
  const auto& F = H.field();
  std::size_t nonzero = 0;
  for (std::size_t hd = 1; hd <= 2; ++hd)
    for (std::size_t n = 0; n + hd <= 3; ++n)
      for (std::size_t i = 0; i < H.dim(hd); ++i)
        for (std::size_t j = 0; j < MN.dim(n); ++j) {
          auto act = h_action(phiM, phiN, MN, hd, unit(H.dim(hd), i), n, unit(MN.dim(n), j));
          Vec right = act.right;
          if (hd * n % 2 == 1)
            for (auto& c : right) c = F.neg(c);
          CHECK(act.left == right);
          if (!is_zero_vec(act.left)) ++nonzero;
        }
  CHECK(nonzero > 0);
}

TEST_CASE("growth classification") {
  CHECK(classify_growth({0, 0, 0, 0}).kind == Growth::Zero);
  CHECK(classify_growth({1, 2, 4, 8, 16, 32, 64}).kind == Growth::Exponential);
  auto lin = classify_growth({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
  CHECK(lin.kind == Growth::Polynomial);
  CHECK(lin.degree == 1);
  auto per = classify_growth({1, 0, 1, 0, 1, 0, 1, 0, 1});
  CHECK(per.kind == Growth::Polynomial);
  CHECK(per.degree == 0);
  std::vector<std::size_t> quad;
  for (std::size_t n = 0; n <= 12; ++n) quad.push_back((n + 1) * (n + 2) / 2);
  CHECK(classify_growth(quad).degree == 2);
}

TEST_CASE("finite generation report") {
  auto ok = fg_check(klein_four(), 4);
  CHECK(!ok.violated);
  CHECK(ok.verdict == "fg-plausible to degree 4");
  CHECK(ok.growth.degree == 1);
  CHECK(ok.module_generator_degrees == std::vector<std::size_t>{0});

  auto bad = fg_check(radical_square_zero(), 8);
  CHECK(bad.violated);
  CHECK(bad.verdict == "fg-violated (exponential growth)");
}
