#include "doctest.h"

#include <random>

#include "witt/errors.hpp"
#include "witt/lfg.hpp"
#include "witt/parse.hpp"

using namespace witt;

namespace {
const AlgebraKind kOne = AlgebraKind::OneSided;

Poly rand_poly(std::mt19937_64& rng, long deg) {
  std::uniform_int_distribution<long> coeff(-3, 3);
  Poly f = Poly::monomial(deg);
  for (long e = 0; e < deg; ++e) f.set_coeff(e, Rational(coeff(rng)));
  return f;
}

// Oracle for g_f minimality: is there a monic g of degree d with f' g in
// k[f]? Solved as one linear system over the coefficients of g and of the
// k[f]-expansion.
bool minimality_witness_exists(const Poly& f, long d) {
  Poly fp = f.derivative();
  long lhs_deg = fp.degree() + d;
  long max_power = lhs_deg / f.degree();
  // unknowns: g_0..g_{d-1} (g monic), c_0..c_{max_power}
  long unknowns = d + max_power + 1;
  QMatrix a = QMatrix::Zero(lhs_deg + 1, unknowns);
  QVector rhs = QVector::Zero(lhs_deg + 1);
  for (long i = 0; i < d; ++i) {
    Poly term = fp * Poly::monomial(i);
    for (const auto& [e, c] : term.coeffs()) a(e, i) += c;
  }
  for (long j = 0; j <= max_power; ++j) {
    Poly power = f.pow(static_cast<unsigned long>(j));
    for (const auto& [e, c] : power.coeffs()) a(e, d + j) -= c;
  }
  Poly lead = fp * Poly::monomial(d);
  for (const auto& [e, c] : lead.coeffs()) rhs(e) -= c;
  return solve_linear(a, rhs).has_value();
}
}  // namespace

TEST_CASE("ideal_generator") {
  CHECK(ideal_generator(parse_poly("t^2")).generator == parse_poly("t"));
  CHECK(ideal_generator(parse_poly("t^3")).generator == parse_poly("t"));
  IfIdeal i = ideal_generator(parse_poly("t^2*(t-1)"));
  CHECK(i.generator == parse_poly("t*(t+4/27)"));
  // verified by exact division: f' | h(f)
  Poly f = parse_poly("t^2*(t-1)");
  CHECK(divides(f.derivative(), poly_compose(i.generator, f)));
  CHECK(is_squarefree(i.generator));
  CHECK_THROWS_AS(ideal_generator(Poly(Rational(3))), domain_error);

  // h vanishes on f(V(f')): the rational critical values are roots of h
  std::mt19937_64 rng(91);
  for (int it = 0; it < 25; ++it) {
    Poly g = rand_poly(rng, 2 + (it % 5));
    IfIdeal ideal = ideal_generator(g);
    CHECK(is_squarefree(ideal.generator));
    if (g.derivative().degree() > 0) {
      for (const auto& [crit, mult] : rational_roots(g.derivative())) {
        Rational value = g.eval(crit);
        CHECK(ideal.generator.eval(value) == 0);
      }
    }
  }
}

TEST_CASE("minimal_g") {
  CHECK(minimal_g(parse_poly("t^2")) == parse_poly("t"));
  CHECK(minimal_g(parse_poly("t^3")) == parse_poly("t"));
  Poly f = parse_poly("t^2*(t-1)");
  Poly gf = minimal_g(f);
  CHECK(gf.degree() == 4);  // deg(h) deg(f) - deg(f')
  // the defining property, exactly
  CHECK(base_f_expansion(f.derivative() * gf, f).has_value());

  // no monic g of smaller degree works, by exhaustive linear algebra
  std::mt19937_64 rng(92);
  for (int it = 0; it < 10; ++it) {
    Poly g = rand_poly(rng, 2 + (it % 3));
    Poly mg = minimal_g(g);
    for (long d = 0; d < mg.degree(); ++d)
      CHECK(!minimality_witness_exists(g, d));
    CHECK(minimality_witness_exists(g, mg.degree()));
  }
}

TEST_CASE("LfgAlgebra construction") {
  LfgAlgebra a(parse_poly("t^2"), parse_poly("t"));
  CHECK(a.h() == parse_poly("2*t"));  // f' g = 2t^2 = h(f) with h = 2s
  CHECK(poly_compose(a.h(), a.f()) == a.f().derivative() * a.g());

  // f' g outside k[f] is rejected
  CHECK_THROWS_AS(LfgAlgebra(parse_poly("t^2"), parse_poly("t^2")), domain_error);
  CHECK_THROWS_AS(LfgAlgebra(parse_poly("t^2"), Poly()), domain_error);

  LfgAlgebra artificial(parse_poly("t"), parse_poly("t^2"));
  CHECK(artificial.h() == parse_poly("t^2"));  // h = s^2, non-minimal g
}

TEST_CASE("lfg_contains") {
  LfgAlgebra a(parse_poly("t^2"), parse_poly("t"));
  CHECK(lfg_contains(a, parse_witt("t^5*d", kOne)));   // t^5 = t (t^2)^2
  CHECK(!lfg_contains(a, parse_witt("t^2*d", kOne)));  // t^2/t = t not in k[t^2]
  CHECK(lfg_contains(a, WittElement::zero(kOne)));
  CHECK(lfg_contains(a, parse_witt("(3*t^5-1/2*t^3+t)*d", kOne)));
  CHECK(!lfg_contains(a, parse_witt("t^4*d", kOne)));
}

TEST_CASE("lfg_iso transcripts") {
  LfgIsoReport r1 = lfg_iso(LfgAlgebra(parse_poly("t^2"), parse_poly("t")));
  CHECK(r1.all_exact);
  CHECK(r1.transcript.size() == 10);
  CHECK(r1.image_conductor == parse_poly("t"));

  LfgIsoReport r2 = lfg_iso(LfgAlgebra(parse_poly("t^3"), parse_poly("t")));
  CHECK(r2.all_exact);
  CHECK(r2.image_conductor == parse_poly("t"));

  // p = q maps the zero bracket to zero
  LfgAlgebra a(parse_poly("t^2"), parse_poly("t"));
  Poly p = poly_compose(parse_poly("t^2+3*t"), a.f()) * a.g();
  CHECK(bracket(WittElement(p, kOne), WittElement(p, kOne)).is_zero());

  LfgIsoReport r3 = lfg_iso(LfgAlgebra::maximal(parse_poly("t^2*(t-1)")));
  CHECK(r3.all_exact);
}

TEST_CASE("lfg_derivation_space") {
  CHECK(lfg_derivation_space(LfgAlgebra::maximal(parse_poly("t^2"))).h1_dim == 0);
  CHECK(lfg_derivation_space(LfgAlgebra(parse_poly("t^3"), parse_poly("t"))).h1_dim ==
        0);
  // artificial non-minimal g: h = s^2, so the image is W(t^2) with h1 = 1
  CHECK(lfg_derivation_space(LfgAlgebra(parse_poly("t"), parse_poly("t^2"))).h1_dim ==
        1);

  std::mt19937_64 rng(93);
  for (int it = 0; it < 8; ++it) {
    Poly f = rand_poly(rng, 2 + (it % 4));
    LfgAlgebra a = LfgAlgebra::maximal(f);
    CHECK(lfg_derivation_space(a).h1_dim == 0);  // h is always reduced
  }
}

TEST_CASE("iso degree bookkeeping") {
  // deg(p(f) g d) relates affinely to deg(p h d) through the map.
  LfgAlgebra a = LfgAlgebra::maximal(parse_poly("t^2*(t-1)"));
  for (long i = 1; i <= 4; ++i) {
    Poly source = poly_compose(Poly::monomial(i), a.f()) * a.g();
    Poly target = Poly::monomial(i) * a.h();
    CHECK(source.degree() ==
          i * a.f().degree() + a.g().degree());
    CHECK(target.degree() == i + a.h().degree());
  }
}
