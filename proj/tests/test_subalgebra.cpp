#include "doctest.h"

#include <random>

#include "witt/errors.hpp"
#include "witt/parse.hpp"
#include "witt/subalgebra.hpp"

using namespace witt;

namespace {
const AlgebraKind kOne = AlgebraKind::OneSided;
const AlgebraKind kTwo = AlgebraKind::TwoSided;

std::vector<WittElement> module_gens(const Poly& f, long upto, AlgebraKind kind) {
  std::vector<WittElement> gens;
  long lo = kind == AlgebraKind::OneSided ? 0 : -upto;
  for (long k = lo; k <= upto; ++k)
    gens.push_back(WittElement(LaurentPoly(f) * LaurentPoly::monomial(k), kind));
  return gens;
}

Poly rand_split_poly(std::mt19937_64& rng, long deg) {
  std::uniform_int_distribution<long> root(-2, 2);
  Poly f(Rational(1));
  for (long i = 0; i < deg; ++i)
    f *= Poly::variable() - Poly(Rational(root(rng)));
  return f;
}
}  // namespace

TEST_CASE("from_generators finds the canonical form") {
  // Generated by e_1 and e_2.
  FinCodimSubalgebra w1 = from_generators(
      {WittElement::basis(1, kOne), WittElement::basis(2, kOne)});
  CHECK(w1 == FinCodimSubalgebra::submodule(parse_poly("t^2"), kOne));
  CHECK(w1.coset_basis().empty());

  // Same algebra from module generators.
  FinCodimSubalgebra w1b = from_generators({parse_witt("t^2*d", kOne),
                                            parse_witt("t^3*d", kOne),
                                            parse_witt("t^4*d", kOne)});
  CHECK(w1b == w1);

  // span{e_0 + e_1} plus everything of degree >= 2.
  std::vector<WittElement> gens = {parse_witt("e_0+e_1", kOne)};
  for (long n = 2; n <= 8; ++n) gens.push_back(WittElement::basis(n, kOne));
  FinCodimSubalgebra l = from_generators(gens);
  CHECK(l.conductor() == parse_poly("t^3"));
  REQUIRE(l.coset_basis().size() == 1);
  CHECK(l.coset_basis()[0] == parse_witt("(t^2+t)*d", kOne));
  CHECK(l.codim() == 2);

  // Certificates are part of a successful return.
  CHECK(l.certificate().sandwich);
  CHECK(l.certificate().closure);
  CHECK(l.certificate().conductor);

  SUBCASE("idempotence on the canonical data") {
    std::vector<WittElement> again = l.generators();
    CHECK(from_generators(again) == l);
  }

  SUBCASE("degree set") {
    // deg(L) = {1} u Z_{>=2} collapses to the canonical threshold form Z_{>=1}.
    DegreeSet d = l.degree_set();
    CHECK(d.threshold == 1);
    CHECK(d.sporadic.empty());
    // a genuinely sporadic degree: span{e_0} + W(t^4) has deg set {0} u Z_{>=3}
    std::vector<WittElement> gens2 = {WittElement::basis(0, kOne)};
    for (long n = 3; n <= 9; ++n) gens2.push_back(WittElement::basis(n, kOne));
    DegreeSet d2 = from_generators(gens2).degree_set();
    CHECK(d2.threshold == 3);
    REQUIRE(d2.sporadic.size() == 1);
    CHECK(d2.sporadic[0] == 0);
  }
}

TEST_CASE("from_generators failure modes") {
  CHECK_THROWS_AS(from_generators({}), domain_error);
  CHECK_THROWS_AS(from_generators({WittElement::zero(kOne)}), domain_error);
  CHECK_THROWS_AS(
      from_generators({WittElement::basis(1, kOne), WittElement::basis(2, kTwo)}),
      domain_error);
  // Tight window: reported as a window problem, with a retry hint.
  CHECK_THROWS_AS(from_generators({WittElement::basis(1, kOne),
                                   WittElement::basis(2, kOne)},
                                  GradedWindow{-1, 6}),
                  window_error);
  // k[f]-shaped input: the degree set is an arithmetic progression.
  CHECK_THROWS_AS(from_generators({parse_witt("t*d", kOne),
                                   parse_witt("t^3*d", kOne),
                                   parse_witt("t^5*d", kOne)}),
                  domain_error);
}

TEST_CASE("minimal_conductor") {
  CHECK(minimal_conductor(from_generators({WittElement::basis(1, kOne),
                                           WittElement::basis(2, kOne)})) ==
        parse_poly("t^2"));
  CHECK(minimal_conductor(FinCodimSubalgebra::submodule(parse_poly("t*(t-1)"),
                                                        kOne)) ==
        parse_poly("t^2-t"));
  CHECK(minimal_conductor(parse_subalgebra("span{e_0+e_1} + W(t^3)", kOne)) ==
        parse_poly("t^3"));
}

TEST_CASE("membership with certificate") {
  FinCodimSubalgebra w1 = FinCodimSubalgebra::submodule(parse_poly("t^2"), kOne);
  CHECK(membership(w1, WittElement::basis(5, kOne)).member);
  CHECK(!membership(w1, WittElement::basis(0, kOne)).member);

  FinCodimSubalgebra l = parse_subalgebra("span{e_0+e_1} + W(t^3)", kOne);
  WittElement w = parse_witt("2*e_0+2*e_1+e_3", kOne);
  MembershipResult m = membership(l, w);
  REQUIRE(m.member);
  REQUIRE(m.decomposition.has_value());
  // Certificate: w = sum a_i c_i + conductor * q * d, reconstructed exactly.
  WittElement rebuilt = WittElement::zero(kOne);
  for (std::size_t i = 0; i < l.coset_basis().size(); ++i)
    rebuilt += m.decomposition->coset_coords[i] * l.coset_basis()[i];
  rebuilt += WittElement(LaurentPoly(l.conductor()) * m.decomposition->quotient,
                         kOne);
  CHECK(rebuilt == w);
}

TEST_CASE("derived series and lower central series") {
  FinCodimSubalgebra w_t2 = FinCodimSubalgebra::submodule(parse_poly("t^2"), kOne);
  CHECK(derived_series_term(w_t2, 1) ==
        FinCodimSubalgebra::submodule(parse_poly("t^4"), kOne));
  CHECK(derived_series_term(w_t2, 0) == w_t2);

  FinCodimSubalgebra w_f =
      FinCodimSubalgebra::submodule(parse_poly("t*(t-1)"), kOne);
  CHECK(derived_series_term(w_f, 1) ==
        FinCodimSubalgebra::submodule(parse_poly("t^2*(t-1)^2"), kOne));

  CHECK(lower_central_term(w_t2, 2) ==
        FinCodimSubalgebra::submodule(parse_poly("t^5"), kOne));

  std::mt19937_64 rng(51);
  for (int i = 0; i < 20; ++i) {
    Poly f = rand_split_poly(rng, 1 + (i % 5));
    FinCodimSubalgebra l = FinCodimSubalgebra::submodule(f, kOne);
    CHECK(derived_series_term(l, 1) ==
          FinCodimSubalgebra::submodule(f * f, kOne));
  }
}

TEST_CASE("normalizer") {
  CHECK(normalizer(FinCodimSubalgebra::submodule(parse_poly("t^2"), kOne)) ==
        FinCodimSubalgebra::submodule(parse_poly("t"), kOne));
  FinCodimSubalgebra reduced =
      FinCodimSubalgebra::submodule(parse_poly("t*(t-1)"), kOne);
  CHECK(normalizer(reduced) == reduced);
  CHECK(normalizer(FinCodimSubalgebra::submodule(parse_poly("t^3"), kOne)) ==
        FinCodimSubalgebra::submodule(parse_poly("t"), kOne));

  // N(W(f)) = W(rad f), and N only grows under iteration.
  std::mt19937_64 rng(52);
  for (int i = 0; i < 10; ++i) {
    Poly f = rand_split_poly(rng, 2 + (i % 3));
    FinCodimSubalgebra l = FinCodimSubalgebra::submodule(f, kOne);
    FinCodimSubalgebra n = normalizer(l);
    CHECK(n == FinCodimSubalgebra::submodule(squarefree_part(f), kOne));
    CHECK(subalgebra_contains(normalizer(n), n));
    CHECK(subalgebra_contains(n, l));
  }
}

TEST_CASE("abelianisation and the submodule criterion") {
  CHECK(abelianisation_dim(FinCodimSubalgebra::submodule(parse_poly("t^2"),
                                                         kOne)) == 2);
  CHECK(abelianisation_dim(FinCodimSubalgebra::submodule(parse_poly("t*(t-1)"),
                                                         kOne)) == 2);
  FinCodimSubalgebra l = parse_subalgebra("span{e_0+e_1} + W(t^3)", kOne);
  long ab = abelianisation_dim(l);
  CHECK(ab < l.codim());
  CHECK(ab == 1);  // [L, L] = W(t^3) here

  SubmoduleCheck a =
      is_submodule_check(FinCodimSubalgebra::submodule(parse_poly("t^2"), kOne));
  CHECK(a.direct);
  CHECK(a.criterion);
  SubmoduleCheck b = is_submodule_check(l);
  CHECK(!b.direct);
  CHECK(!b.criterion);
  SubmoduleCheck c = is_submodule_check(
      FinCodimSubalgebra::submodule(parse_poly("t*(t-2)"), kOne));
  CHECK(c.direct);
  CHECK(c.criterion);

  std::mt19937_64 rng(53);
  for (int i = 0; i < 10; ++i) {
    Poly f = rand_split_poly(rng, 1 + (i % 4));
    CHECK(abelianisation_dim(FinCodimSubalgebra::submodule(f, kOne)) ==
          f.degree());
  }
}

TEST_CASE("solvable_quotient_depth") {
  auto w = [](const char* f) {
    return FinCodimSubalgebra::submodule(parse_poly(f), kOne);
  };
  CHECK(solvable_quotient_depth(w("t"), w("t^4")) == 2);
  CHECK(solvable_quotient_depth(w("t"), w("t")) == 0);
  CHECK(solvable_quotient_depth(w("t*(t-1)"), w("t^2*(t-1)^2")) == 1);
  // not contained
  CHECK_THROWS_AS(solvable_quotient_depth(w("t^2"), w("t")), domain_error);
  // contained but not an ideal of W(t): [e_0, e_1+e_2] = e_1 + 2 e_2 escapes
  FinCodimSubalgebra not_ideal =
      parse_subalgebra("span{(t^3+t^2)*d} + W(t^4)", kOne);
  CHECK_THROWS_AS(solvable_quotient_depth(w("t"), not_ideal), domain_error);
}

TEST_CASE("sandwich invariant on random canonical forms") {
  std::mt19937_64 rng(54);
  std::uniform_int_distribution<long> coeff(-2, 2);
  for (int i = 0; i < 12; ++i) {
    Poly f = rand_split_poly(rng, 2 + (i % 3));
    Poly rad = squarefree_part(f);
    std::vector<WittElement> gens = module_gens(f, std::max(f.degree(), 3L), kOne);
    Poly p;
    for (long e = 0; e <= 2; ++e) {
      long c = coeff(rng);
      if (c != 0) p.set_coeff(e, Rational(c));
    }
    if (!p.is_zero()) gens.push_back(WittElement(rad * p, kOne));
    FinCodimSubalgebra l = from_generators(gens);
    // every coset representative is divisible by rad(conductor)
    Poly r = squarefree_part(l.conductor());
    for (const WittElement& c : l.coset_basis())
      CHECK(submodule_membership(c, r));
    // conductor module generators are members
    for (const WittElement& g : module_gens(l.conductor(), 4, kOne))
      CHECK(l.contains(g));
    // canonicalization idempotence
    CHECK(from_generators(l.generators()) == l);
  }
}

TEST_CASE("two-sided canonical forms") {
  // Conductors are normalised to nonzero constant term: t^2(t-1) ~ (t-1).
  FinCodimSubalgebra l =
      FinCodimSubalgebra::submodule(parse_poly("t^2*(t-1)"), kTwo);
  CHECK(l.conductor() == parse_poly("t-1"));
  CHECK(l.codim() == 1);

  FinCodimSubalgebra m = from_generators(module_gens(parse_poly("(t-1)^2"), 3, kTwo));
  CHECK(m == FinCodimSubalgebra::submodule(parse_poly("(t-1)^2"), kTwo));

  CHECK(normalizer(m) == FinCodimSubalgebra::submodule(parse_poly("t-1"), kTwo));
  CHECK(derived_series_term(m, 1) ==
        FinCodimSubalgebra::submodule(parse_poly("(t-1)^4"), kTwo));

  // membership with negative exponents: (t-1)^2 t^-1 = t - 2 + t^-1
  CHECK(m.contains(parse_witt("(t-2+t^-1)*d", kTwo)));
  CHECK(!m.contains(parse_witt("(t-1)*d", kTwo)));

  SubmoduleCheck check = is_submodule_check(m);
  CHECK(check.direct);
  CHECK(check.criterion);
}

TEST_CASE("subalgebra text forms round-trip") {
  for (const char* text : {"W(t^2)", "span{(t^2+t)*d} + W(t^3)", "W(t^2-t)"}) {
    FinCodimSubalgebra l = parse_subalgebra(text, kOne);
    CHECK(format_subalgebra(l) == text);
    CHECK(parse_subalgebra(format_subalgebra(l), kOne) == l);
  }
}
