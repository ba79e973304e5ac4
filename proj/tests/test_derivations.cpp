#include "doctest.h"

#include <random>

#include "witt/derivations.hpp"
#include "witt/errors.hpp"
#include "witt/parse.hpp"

using namespace witt;

namespace {
const AlgebraKind kOne = AlgebraKind::OneSided;

FinCodimSubalgebra w(const char* f) {
  return FinCodimSubalgebra::submodule(parse_poly(f), kOne);
}
}  // namespace

TEST_CASE("graded derivation spaces are ad_{e_k} lines") {
  auto d10 = graded_derivation_space(1, 0);
  REQUIRE(d10.size() == 1);
  for (long m = 1; m <= 12; ++m) CHECK(d10[0].lambda(m) == m);

  auto d11 = graded_derivation_space(1, 1);
  REQUIRE(d11.size() == 1);
  for (long m = 1; m <= 12; ++m) CHECK(d11[0].lambda(m) == m - 1);

  auto d32 = graded_derivation_space(3, 2);
  REQUIRE(d32.size() == 1);
  for (long m = 3; m <= 12; ++m) CHECK(d32[0].lambda(m) == m - 2);

  // the degree-0 component is the ad_{e_0} line even from n = -1
  auto d_neg = graded_derivation_space(-1, 0);
  REQUIRE(d_neg.size() == 1);
  CHECK(d_neg[0].lambda(-1) == -1);

  // two-sided target: same closed form
  auto d2 = graded_derivation_space(0, 3, GradedWindow{-14, 14},
                                    AlgebraKind::TwoSided);
  REQUIRE(d2.size() == 1);
  CHECK(d2[0].lambda(5) == 2);

  CHECK_THROWS_AS(graded_derivation_space(0, 1, GradedWindow{0, 8}),
                  window_error);
}

TEST_CASE("derivation_space and h1") {
  DerivationSpaceReport r1 = derivation_space(w("t^2"));
  CHECK(r1.h1_dim == 1);
  REQUIRE(r1.normalizer_basis.size() == 1);
  CHECK(r1.normalizer_basis[0] == parse_witt("t*d", kOne));
  CHECK(r1.inner_dim == static_cast<long>(r1.inner_generators.size()));

  CHECK(derivation_space(w("t*(t-1)*(t+2)")).h1_dim == 0);
  CHECK(derivation_space(w("t^3*(t-1)")).h1_dim == 2);

  CHECK(h1_dim(w("t^5")) == 4);
  CHECK(h1_dim(FinCodimSubalgebra::full(kOne)) == 0);
  CHECK(h1_dim(w("t^2*(t-3)^2")) == 2);

  // formula agreement on a spread of conductors
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> root(-2, 2);
  std::uniform_int_distribution<long> mult(1, 3);
  for (int i = 0; i < 25; ++i) {
    Poly f(Rational(1));
    while (f.degree() < 2 + (i % 5))
      f *= (Poly::variable() - Poly(Rational(root(rng))))
               .pow(static_cast<unsigned long>(mult(rng)));
    CHECK(h1_dim(FinCodimSubalgebra::submodule(f, kOne)) ==
          f.degree() - squarefree_part(f).degree());
  }
}

TEST_CASE("witnesses satisfy Leibniz") {
  std::mt19937_64 rng(62);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (const char* fs : {"t^2", "t^3*(t-1)", "t^4"}) {
    FinCodimSubalgebra l = w(fs);
    DerivationSpaceReport rep = derivation_space(l);
    for (const WittElement& wit : rep.normalizer_basis) {
      for (int i = 0; i < 25; ++i) {
        Poly p, q;
        for (long e = 0; e <= 3; ++e) {
          p.set_coeff(e, Rational(coeff(rng)));
          q.set_coeff(e, Rational(coeff(rng)));
        }
        WittElement u(l.conductor() * p, kOne);
        WittElement v(l.conductor() * q, kOne);
        CHECK(bracket(wit, bracket(u, v)) ==
              bracket(bracket(wit, u), v) + bracket(u, bracket(wit, v)));
      }
    }
  }
}

TEST_CASE("associated graded derivation") {
  AssociatedGraded a =
      associated_graded_derivation(parse_witt("e_5+e_3", kOne), w("t^2+1"));
  CHECK(a.degree == 5);
  CHECK(a.lambda == 1);
  REQUIRE(a.incompatible.has_value());
  CHECK(*a.incompatible == 5);

  AssociatedGraded b =
      associated_graded_derivation(WittElement::basis(0, kOne), w("t^2"));
  CHECK(b.degree == 0);
  CHECK(b.lambda == 1);

  AssociatedGraded c = associated_graded_derivation(
      Rational(2) * WittElement::basis(3, kOne), w("t^4"));
  CHECK(c.degree == 3);
  CHECK(c.lambda == 2);

  // gr(ad_w) acts as lambda (k - N) on leading terms at d-compatible degrees
  FinCodimSubalgebra l = w("t^4");
  WittElement wit = Rational(2) * WittElement::basis(3, kOne);
  for (long k = 4; k <= 9; ++k) {
    // x in W(t^4) with leading term e_k and a lower-order tail
    WittElement x(l.conductor() * (Poly::monomial(k - 3) + Poly(Rational(1))),
                  kOne);
    REQUIRE(leading_data(x).first == k);
    auto [deg_b, lt_b] = leading_data(bracket(wit, x));
    CHECK(deg_b == k + c.degree);
    CHECK(lt_b == c.lambda * Rational(k - c.degree) *
                      WittElement::basis(k + c.degree, kOne));
  }

  // an element that does not normalise the algebra is rejected
  CHECK_THROWS_AS(
      associated_graded_derivation(WittElement::basis(-1, kOne), w("t^2")),
      domain_error);
  CHECK_THROWS_AS(
      associated_graded_derivation(WittElement::zero(kOne), w("t^2")),
      domain_error);
}

TEST_CASE("bracket relation vanishes") {
  CHECK(verify_relation(1, 2).is_zero());
  CHECK(verify_relation(4, 4).is_zero());
  CHECK(verify_relation(2, 5).is_zero());
  CHECK(verify_relation(-3, 7).is_zero());
}
