#include "doctest.h"

#include <random>

#include "witt/derivations.hpp"
#include "witt/errors.hpp"
#include "witt/extensions.hpp"
#include "witt/parse.hpp"

using namespace witt;

namespace {
const AlgebraKind kOne = AlgebraKind::OneSided;
const AlgebraKind kTwo = AlgebraKind::TwoSided;

FinCodimSubalgebra w(const char* f) {
  return FinCodimSubalgebra::submodule(parse_poly(f), kOne);
}

bool proportional_mod(const FinCodimSubalgebra& l, const WittElement& a,
                      const WittElement& b) {
  WittElement ra = l.reduce(a);
  WittElement rb = l.reduce(b);
  if (ra.is_zero() || rb.is_zero()) return ra.is_zero() && rb.is_zero();
  long top = rb.coeff().top_exponent();
  if (ra.coeff().coeff(top) == 0) return false;
  Rational scale = ra.coeff().coeff(top) / rb.coeff().coeff(top);
  return l.reduce(ra - scale * rb).is_zero();
}
}  // namespace

TEST_CASE("character values") {
  Poly f = parse_poly("t*(t-1)");
  Character chi = Character::simple_root(Rational(0));
  // lambda_k = -xi^k f'(xi)
  for (long k = 0; k <= 4; ++k)
    CHECK(chi.lambda(f, k) ==
          -pow_rational(Rational(0), k) * f.derivative().eval(Rational(0)));
  CHECK(chi.lambda(f, 0) == 1);
  CHECK(chi.lambda(f, 1) == 0);
  CHECK(Character::trivial().lambda(f, 3) == 0);
  // characters kill the derived subalgebra W(f^2)
  Character chi1 = Character::simple_root(Rational(1));
  for (long k = 0; k <= 3; ++k)
    CHECK(chi1.lambda_of(WittElement(f * f * Poly::monomial(k), kOne)) == 0);
}

TEST_CASE("classify_characters") {
  ClassifyResult a = classify_characters(parse_poly("t*(t-1)*(t-2)"), kOne);
  REQUIRE(a.reports.size() == 4);
  CHECK(a.reports[0].ext_dim == 0);  // trivial, f reduced
  for (int i = 1; i <= 3; ++i) {
    CHECK(a.reports[i].ext_dim == 1);
    CHECK(a.reports[i].character.variant == Character::Variant::SimpleRoot);
    // the canonical extension removes the root: conductor f/(t - xi)
    Poly expected = exact_div(parse_poly("t*(t-1)*(t-2)"),
                              Poly::variable() -
                                  Poly(a.reports[i].character.xi));
    CHECK(a.reports[i].canonical_extensions[0].conductor() == expected.monic());
  }
  CHECK(a.nonrational_simple_roots == 0);

  ClassifyResult b = classify_characters(parse_poly("t^2"), kOne);
  REQUIRE(b.reports.size() == 1);
  CHECK(b.reports[0].ext_dim == 1);
  CHECK(b.reports[0].canonical_extensions[0] == w("t"));

  ClassifyResult c = classify_characters(parse_poly("t^2*(t-1)"), kOne);
  REQUIRE(c.reports.size() == 2);
  CHECK(c.reports[0].ext_dim == 1);
  CHECK(c.reports[1].character.xi == 1);
  CHECK(c.reports[1].canonical_extensions[0] == w("t^2"));

  // irrational simple roots are counted, never witnessed
  ClassifyResult d = classify_characters(parse_poly("t*(t^2-2)"), kOne);
  REQUIRE(d.reports.size() == 2);  // trivial + root 0
  CHECK(d.nonrational_simple_roots == 2);

  // Ext of the trivial character equals H1
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<long> root(-2, 2);
  std::uniform_int_distribution<long> mult(1, 3);
  for (int i = 0; i < 10; ++i) {
    Poly f(Rational(1));
    while (f.degree() < 2 + (i % 4))
      f *= (Poly::variable() - Poly(Rational(root(rng))))
               .pow(static_cast<unsigned long>(mult(rng)));
    ClassifyResult r = classify_characters(f, kOne);
    CHECK(r.reports[0].ext_dim ==
          h1_dim(FinCodimSubalgebra::submodule(f, kOne)));
  }
}

TEST_CASE("extension_bracket") {
  // W(t^2) extended by the ambient witness e_0: the bracket of W(t).
  ExtensionBracketTable table =
      extension_bracket(w("t^2"), WittElement::basis(0, kOne));
  CHECK(table.jacobi_verified);
  for (const ExtensionBracketEntry& e : table.action) {
    // [t^{k+1} t d, t d] = (k+1) t^{k+2} d - ... all inside W(t^2): on_x = 0
    CHECK(e.on_x == 0);
    CHECK(bracket(e.generator, WittElement::basis(0, kOne)) == e.inside);
  }

  // Pure trivial character: the direct-sum bracket.
  ExtensionBracketTable direct_sum =
      extension_bracket(w("t^2"), Character::trivial());
  CHECK(direct_sum.jacobi_verified);
  for (const ExtensionBracketEntry& e : direct_sum.action) {
    CHECK(e.on_x == 0);
    CHECK(e.inside.is_zero());
  }

  // W(t(t-1)) with x realised as t d: matches the ambient brackets of W(t).
  ExtensionBracketTable realised =
      extension_bracket(w("t*(t-1)"), parse_witt("t*d", kOne));
  CHECK(realised.jacobi_verified);
  for (const ExtensionBracketEntry& e : realised.action)
    CHECK(bracket(e.generator, parse_witt("t*d", kOne)) ==
          e.inside + e.on_x * parse_witt("t*d", kOne));

  // x inside L is rejected; an invalid character is rejected with the pair.
  CHECK_THROWS_AS(extension_bracket(w("t^2"), parse_witt("t^2*d", kOne)),
                  domain_error);
  CHECK_THROWS_AS(
      extension_bracket(w("t*(t-1)"), Character::simple_root(Rational(5))),
      domain_error);
}

TEST_CASE("embed_extension") {
  // e_0 acting as -1 on the quotient: the extension of W(t) back to the top.
  EmbedResult a = embed_extension(w("t"), Character::simple_root(Rational(0)));
  CHECK(a.witness == WittElement::basis(-1, kOne));
  CHECK(a.unique_mod_l);
  CHECK(Character::simple_root(Rational(0))
            .lambda_of(WittElement::basis(0, kOne)) == -1);

  // SimpleRoot(0) on W(t(t-1)): the witness spans (t-1) d modulo L.
  EmbedResult b =
      embed_extension(w("t*(t-1)"), Character::simple_root(Rational(0)));
  CHECK(proportional_mod(w("t*(t-1)"), b.witness, parse_witt("(t-1)*d", kOne)));
  CHECK(b.unique_mod_l);

  // Trivial character on W(t^2): the witness spans t d modulo L.
  EmbedResult c = embed_extension(w("t^2"), Character::trivial());
  CHECK(proportional_mod(w("t^2"), c.witness, parse_witt("t*d", kOne)));

  // [u, w] - chi(u) w lands in L for every generator: exact normalisation.
  FinCodimSubalgebra l = w("t*(t-1)");
  Character chi = Character::simple_root(Rational(0));
  for (const WittElement& u : l.generators())
    CHECK(l.contains(bracket(u, b.witness) - chi.lambda_of(u) * b.witness));

  // Reduced conductor + trivial character: only the split extension exists.
  CHECK_THROWS_WITH_AS(embed_extension(w("t*(t-1)"), Character::trivial()),
                       doctest::Contains("split"), domain_error);
  CHECK_THROWS_AS(embed_extension(FinCodimSubalgebra::full(kOne),
                                  Character::trivial()),
                  domain_error);
}

TEST_CASE("split_section") {
  // Data realised by an element of L itself is split, with the zero section.
  FinCodimSubalgebra l = w("t^2");
  std::vector<Rational> lambdas(l.generators().size(), Rational(0));
  auto section = split_section(l, parse_witt("t^2*d", kOne), lambdas);
  REQUIRE(section.has_value());
  CHECK(l.contains(parse_witt("t^2*d", kOne) - *section));

  // A genuine non-split witness has no section.
  EmbedResult c = embed_extension(l, Character::trivial());
  CHECK(!split_section(l, c.witness, lambdas).has_value());
}

TEST_CASE("extension chains") {
  ExtensionChain trivial_chain = extension_chain(FinCodimSubalgebra::full(kOne));
  CHECK(trivial_chain.steps.empty());

  ExtensionChain ladder = extension_chain(w("t^4"));
  REQUIRE(ladder.steps.size() == 4);
  CHECK(ladder.steps[0].algebra == w("t^3"));
  CHECK(ladder.steps[1].algebra == w("t^2"));
  CHECK(ladder.steps[2].algebra == w("t"));
  CHECK(ladder.steps[3].algebra == FinCodimSubalgebra::full(kOne));
  for (const ChainStep& s : ladder.steps) CHECK(s.nonsplit_certified);

  ExtensionChain two = extension_chain(w("t*(t-1)"));
  REQUIRE(two.steps.size() == 2);
  bool through_wt = two.steps[0].algebra == w("t");
  bool through_wt1 = two.steps[0].algebra == w("t-1");
  CHECK((through_wt || through_wt1));
  CHECK(two.steps[1].algebra == FinCodimSubalgebra::full(kOne));

  // a non-submodule base
  ExtensionChain mixed = extension_chain(
      parse_subalgebra("span{e_0+e_1} + W(t^3)", kOne));
  CHECK(mixed.steps.size() == 2);
  CHECK(mixed.steps.back().algebra == FinCodimSubalgebra::full(kOne));
}

TEST_CASE("two-sided classification and chains") {
  Poly f = parse_poly("(t-1)*(t-2)");
  ClassifyResult r = classify_characters(f, kTwo);
  REQUIRE(r.reports.size() == 3);
  CHECK(r.reports[0].ext_dim == 0);
  CHECK(r.reports[1].character.xi == 1);
  CHECK(r.reports[1].canonical_extensions[0] ==
        FinCodimSubalgebra::submodule(parse_poly("t-2"), kTwo));
  CHECK(r.reports[2].character.xi == 2);

  ExtensionChain chain = extension_chain(
      FinCodimSubalgebra::submodule(parse_poly("(t-1)^2"), kTwo));
  REQUIRE(chain.steps.size() == 2);
  CHECK(chain.steps[0].algebra ==
        FinCodimSubalgebra::submodule(parse_poly("t-1"), kTwo));
  CHECK(chain.steps[1].algebra == FinCodimSubalgebra::full(kTwo));
}
