#include "doctest.h"

#include <random>

#include "witt/derivations.hpp"
#include "witt/errors.hpp"
#include "witt/isomorphism.hpp"
#include "witt/parse.hpp"

using namespace witt;

namespace {
const AlgebraKind kOne = AlgebraKind::OneSided;
const AlgebraKind kTwo = AlgebraKind::TwoSided;

WittElement rand_element(std::mt19937_64& rng, AlgebraKind kind, long lo, long hi) {
  std::uniform_int_distribution<long> coeff(-3, 3);
  LaurentPoly p;
  for (long e = lo; e <= hi; ++e) {
    long c = coeff(rng);
    if (c != 0) p.set_coeff(e, Rational(c));
  }
  return WittElement(p, kind);
}
}  // namespace

TEST_CASE("apply_automorphism") {
  WittElement v = parse_witt("(t^3-2*t+1)*d", kOne);
  CHECK(apply_automorphism(Automorphism::identity(kOne), v) == v);
  CHECK(apply_automorphism(Automorphism::one_sided(Rational(1), Rational(1)),
                           WittElement::basis(0, kOne)) ==
        parse_witt("(t-1)*d", kOne));
  CHECK(apply_automorphism(Automorphism::two_sided(Rational(1), true),
                           WittElement::basis(2, kTwo)) ==
        Rational(-1) * WittElement::basis(-2, kTwo));

  // rho_{x;alpha}(e_n) = alpha^n (t-x)^{n+1} d
  Automorphism rho = Automorphism::one_sided(Rational(2), Rational(3));
  for (long n = -1; n <= 4; ++n) {
    Poly expected = (Poly::variable() - Poly(Rational(2)))
                        .pow(static_cast<unsigned long>(n + 1));
    CHECK(apply_automorphism(rho, WittElement::basis(n, kOne)) ==
          WittElement(LaurentPoly(expected) * pow_rational(Rational(3), n), kOne));
  }
}

TEST_CASE("automorphisms respect brackets and invert") {
  std::mt19937_64 rng(81);
  std::uniform_int_distribution<long> xs(-2, 2);
  std::uniform_int_distribution<long> as(1, 3);
  for (int i = 0; i < 500; ++i) {
    Automorphism a = Automorphism::one_sided(
        Rational(xs(rng)), Rational(as(rng)) / Rational(as(rng) + 1));
    WittElement u = rand_element(rng, kOne, 0, 5);
    WittElement v = rand_element(rng, kOne, 0, 5);
    CHECK(apply_automorphism(a, bracket(u, v)) ==
          bracket(apply_automorphism(a, u), apply_automorphism(a, v)));
    CHECK(apply_automorphism(inverse(a), apply_automorphism(a, u)) == u);
  }
  for (int i = 0; i < 500; ++i) {
    Automorphism a = Automorphism::two_sided(Rational(as(rng)), i % 2 == 0);
    WittElement u = rand_element(rng, kTwo, -4, 4);
    WittElement v = rand_element(rng, kTwo, -4, 4);
    CHECK(apply_automorphism(a, bracket(u, v)) ==
          bracket(apply_automorphism(a, u), apply_automorphism(a, v)));
    CHECK(apply_automorphism(inverse(a), apply_automorphism(a, u)) == u);
  }

  // composition matches pointwise application
  std::mt19937_64 rng2(82);
  for (int i = 0; i < 100; ++i) {
    Automorphism a = Automorphism::one_sided(Rational(xs(rng2)), Rational(2));
    Automorphism b = Automorphism::one_sided(Rational(xs(rng2)), Rational(1, 3));
    WittElement u = rand_element(rng2, kOne, 0, 4);
    CHECK(apply_automorphism(compose(a, b), u) ==
          apply_automorphism(a, apply_automorphism(b, u)));
  }
  Automorphism tau = Automorphism::two_sided(Rational(1), true);
  CHECK(compose(tau, tau).alpha == 1);
  CHECK(!compose(tau, tau).inverted);
  Automorphism s2 = Automorphism::two_sided(Rational(2), false);
  Automorphism s3 = Automorphism::two_sided(Rational(3), false);
  CHECK(compose(s2, s3).alpha == 6);
}

TEST_CASE("decide_isomorphic") {
  IsoResult pos = decide_isomorphic(parse_poly("t^2*(t-1)"),
                                    parse_poly("t^2*(t-2)"), kOne);
  const IsoWitness* w = std::get_if<IsoWitness>(&pos);
  REQUIRE(w != nullptr);
  CHECK(w->automorphism.x == 0);
  CHECK(w->automorphism.alpha == Rational(1, 2));
  CHECK(w->gamma == Rational(1, 8));
  // re-verify by substitution: f(alpha(t-x)) = gamma g(t)
  Poly lin = Poly::monomial(1, w->automorphism.alpha) -
             Poly(w->automorphism.alpha * w->automorphism.x);
  CHECK(poly_compose(parse_poly("t^2*(t-1)"), lin) ==
        w->gamma * parse_poly("t^2*(t-2)"));

  CHECK(std::holds_alternative<NotIsomorphic>(
      decide_isomorphic(parse_poly("t^2"), parse_poly("t*(t-1)"), kOne)));

  IsoResult self = decide_isomorphic(parse_poly("3*t^2*(t-1)"),
                                     parse_poly("t^2*(t-1)"), kOne);
  const IsoWitness* ws = std::get_if<IsoWitness>(&self);
  REQUIRE(ws != nullptr);
  CHECK(ws->automorphism.x == 0);
  CHECK(ws->automorphism.alpha == 1);
  CHECK(ws->gamma == 3);

  // only irrational scalings work: constraint polynomial reported
  IsoResult irr =
      decide_isomorphic(parse_poly("t^3-1"), parse_poly("t^3-2"), kOne);
  const NoRationalWitness* nr = std::get_if<NoRationalWitness>(&irr);
  REQUIRE(nr != nullptr);
  CHECK(nr->constraint == parse_poly("t^3-1/2"));
}

TEST_CASE("decide_isomorphic is symmetric and matches invariants") {
  std::mt19937_64 rng(83);
  std::uniform_int_distribution<long> roots(-2, 2);
  std::uniform_int_distribution<long> mults(1, 2);
  for (int i = 0; i < 15; ++i) {
    Poly f(Rational(1));
    while (f.degree() < 2 + (i % 3))
      f *= (Poly::variable() - Poly(Rational(roots(rng))))
               .pow(static_cast<unsigned long>(mults(rng)));
    Poly g(Rational(1));
    while (g.degree() < 2 + (i % 3))
      g *= (Poly::variable() - Poly(Rational(roots(rng))))
               .pow(static_cast<unsigned long>(mults(rng)));

    IsoResult fg = decide_isomorphic(f, g, kOne);
    IsoResult gf = decide_isomorphic(g, f, kOne);
    CHECK(std::holds_alternative<IsoWitness>(fg) ==
          std::holds_alternative<IsoWitness>(gf));
    if (std::holds_alternative<IsoWitness>(fg)) {
      FinCodimSubalgebra lf = FinCodimSubalgebra::submodule(f, kOne);
      FinCodimSubalgebra lg = FinCodimSubalgebra::submodule(g, kOne);
      CHECK(h1_dim(lf) == h1_dim(lg));
      CHECK(lf.codim() == lg.codim());
      CHECK(abelianisation_dim(lf) == abelianisation_dim(lg));
      // transport coherence
      FinCodimSubalgebra image =
          transport_subalgebra(lf, std::get<IsoWitness>(fg).automorphism);
      CHECK(image == lg);
    }
  }
}

TEST_CASE("automorphism_group") {
  AutGroupDescription torus = automorphism_group(parse_poly("t^4"), kOne);
  CHECK(torus.torus);
  CHECK(torus.torus_root == 0);

  AutGroupDescription shifted = automorphism_group(parse_poly("(t-2)^3"), kOne);
  CHECK(shifted.torus);
  CHECK(shifted.torus_root == 2);

  AutGroupDescription pair = automorphism_group(parse_poly("t*(t-1)"), kOne);
  CHECK(!pair.torus);
  REQUIRE(pair.elements.size() == 2);
  CHECK(pair.elements[1].alpha == -1);
  CHECK(pair.elements[1].x == 1);

  AutGroupDescription rigid =
      automorphism_group(parse_poly("t*(t-1)*(t-3)"), kOne);
  CHECK(rigid.elements.size() == 1);

  // group elements stabilise the subalgebra
  for (const char* fs : {"t*(t-1)", "t^3", "t^2*(t-1)^2"}) {
    Poly f = parse_poly(fs);
    FinCodimSubalgebra l = FinCodimSubalgebra::submodule(f, kOne);
    for (const Automorphism& a : automorphism_group(f, kOne).elements)
      CHECK(transport_subalgebra(l, a) == l);
  }

  // two-sided: t^2+1 is stabilised by sigma_{-1}, tau and their product
  AutGroupDescription quad = automorphism_group(parse_poly("t^2+1"), kTwo);
  CHECK(quad.elements.size() == 4);
  FinCodimSubalgebra lq =
      FinCodimSubalgebra::submodule(parse_poly("t^2+1"), kTwo);
  for (const Automorphism& a : quad.elements)
    CHECK(transport_subalgebra(lq, a) == lq);
}

TEST_CASE("transport_subalgebra") {
  CHECK(transport_subalgebra(
            FinCodimSubalgebra::submodule(parse_poly("t^2"), kOne),
            Automorphism::one_sided(Rational(1), Rational(1))) ==
        FinCodimSubalgebra::submodule(parse_poly("(t-1)^2"), kOne));
  FinCodimSubalgebra l =
      parse_subalgebra("span{e_0+e_1} + W(t^3)", kOne);
  CHECK(transport_subalgebra(l, Automorphism::identity(kOne)) == l);
  CHECK(transport_subalgebra(
            FinCodimSubalgebra::submodule(parse_poly("t*(t-1)"), kOne),
            Automorphism::one_sided(Rational(0), Rational(1, 2))) ==
        FinCodimSubalgebra::submodule(parse_poly("t*(t-2)"), kOne));
}

TEST_CASE("two-sided isomorphism decision") {
  // scaling: (t-1)(t-2) ~ (t-2)(t-4) under alpha = 1/2
  IsoResult scaled = decide_isomorphic(parse_poly("(t-1)*(t-2)"),
                                       parse_poly("(t-2)*(t-4)"), kTwo);
  const IsoWitness* w = std::get_if<IsoWitness>(&scaled);
  REQUIRE(w != nullptr);
  CHECK(!w->automorphism.inverted);
  CHECK(w->automorphism.alpha == Rational(1, 2));

  // inversion-only pair: roots {1,2,8} vs {1,4,8}, via t -> 8/t
  Poly f = parse_poly("(t-1)*(t-2)*(t-8)");
  Poly g = parse_poly("(t-1)*(t-4)*(t-8)");
  IsoResult inv = decide_isomorphic(f, g, kTwo);
  const IsoWitness* wi = std::get_if<IsoWitness>(&inv);
  REQUIRE(wi != nullptr);
  CHECK(wi->automorphism.inverted);
  // the substitution t -> alpha/t induces sigma_{1/alpha} tau
  CHECK(wi->automorphism.alpha == Rational(1, 8));
  // direct check of the witness equation t^n f(alpha/t) = gamma g(t)
  Rational alpha = Rational(1) / wi->automorphism.alpha;
  Poly image;
  for (const auto& [e, c] : f.coeffs())
    image.set_coeff(f.degree() - e, c * pow_rational(alpha, e));
  CHECK(image == wi->gamma * g);
  // transport agrees
  CHECK(transport_subalgebra(FinCodimSubalgebra::submodule(f, kTwo),
                             wi->automorphism) ==
        FinCodimSubalgebra::submodule(g, kTwo));

  CHECK(std::holds_alternative<NotIsomorphic>(decide_isomorphic(
      parse_poly("(t-1)*(t-2)"), parse_poly("(t-1)^2"), kTwo)));
}
