#include "witt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "witt/errors.hpp"
#include "witt/parse.hpp"

namespace witt {

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
  std::string scope;
  VerifyReport report;

  void claim(const std::string& id, const std::string& statement,
             const std::string& expected,
             const std::function<std::pair<bool, std::string>()>& body) {
    if (scope != "all" && id.find(scope) == std::string::npos) return;
    ClaimResult r;
    r.id = id;
    r.statement = statement;
    r.expected = expected;
    auto start = Clock::now();
    try {
      auto [pass, computed] = body();
      r.pass = pass;
      r.computed = computed;
    } catch (const std::exception& e) {
      r.pass = false;
      r.computed = std::string("exception: ") + e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(Clock::now() - start)
                   .count();
    if (!r.pass) report.all_pass = false;
    report.claims.push_back(std::move(r));
  }
};

Poly random_factored_poly(std::mt19937_64& rng, long max_deg,
                          bool allow_irreducible = true) {
  // Products of small linear/quadratic factors with multiplicities, so that
  // deg(rad) < deg(f) happens often.
  std::uniform_int_distribution<long> root_dist(-3, 3);
  std::uniform_int_distribution<long> mult_dist(1, 3);
  std::uniform_int_distribution<int> quad_dist(0, 4);
  Poly f(Rational(1));
  while (f.degree() < max_deg) {
    if (allow_irreducible && quad_dist(rng) == 0 && f.degree() + 2 <= max_deg) {
      f *= parse_poly("t^2+1");  // irreducible over Q
      continue;
    }
    long mult = std::min(mult_dist(rng), max_deg - f.degree());
    Poly lin = Poly::variable() - Poly(Rational(root_dist(rng)));
    f *= lin.pow(static_cast<unsigned long>(mult));
  }
  return f;
}

WittElement random_one_sided_element(std::mt19937_64& rng, long max_exp) {
  std::uniform_int_distribution<long> coeff_dist(-3, 3);
  LaurentPoly p;
  for (long e = 0; e <= max_exp; ++e) {
    long c = coeff_dist(rng);
    if (c != 0) p.set_coeff(e, Rational(c));
  }
  return WittElement(p, AlgebraKind::OneSided);
}

WittElement random_element_of(std::mt19937_64& rng, const Poly& multiple,
                              long extra_deg) {
  std::uniform_int_distribution<long> coeff_dist(-3, 3);
  Poly p;
  for (long e = 0; e <= extra_deg; ++e) {
    long c = coeff_dist(rng);
    if (c != 0) p.set_coeff(e, Rational(c));
  }
  return WittElement(multiple * p, AlgebraKind::OneSided);
}

// Conductors restricted to rational-split polynomials: these are the inputs
// whose quotient actions triangularise over Q, so chains exist rationally.
FinCodimSubalgebra random_subalgebra(std::mt19937_64& rng, long max_codim) {
  for (;;) {
    std::uniform_int_distribution<long> deg_dist(1, max_codim);
    Poly f = random_factored_poly(rng, deg_dist(rng), /*allow_irreducible=*/false);
    Poly rad = squarefree_part(f);
    std::vector<WittElement> gens;
    for (long k = 0; k <= std::max(f.degree() - 1, 3L); ++k)
      gens.push_back(
          WittElement(LaurentPoly(f) * LaurentPoly::monomial(k),
                      AlgebraKind::OneSided));
    std::uniform_int_distribution<int> extra_dist(0, 2);
    int extra = extra_dist(rng);
    for (int i = 0; i < extra; ++i)
      gens.push_back(random_element_of(rng, rad, 2));
    FinCodimSubalgebra l = from_generators(gens);
    if (l.codim() >= 1 && l.codim() <= max_codim) return l;
  }
}

}  // namespace

VerifyReport verify_suite(const std::string& scope) {
  Runner run;
  run.scope = scope;
  const AlgebraKind one = AlgebraKind::OneSided;

  run.claim(
      "A01-h1-graded", "dim H1(W(t^{n+1})) = n for n = 0..6", "0..6",
      [&]() -> std::pair<bool, std::string> {
        std::ostringstream got;
        bool pass = true;
        for (long n = 0; n <= 6; ++n) {
          long h1 = h1_dim(FinCodimSubalgebra::submodule(
              Poly::monomial(n + 1), one));
          if (n) got << ",";
          got << h1;
          if (h1 != n) pass = false;
        }
        return {pass, got.str()};
      });

  run.claim(
      "A02-h1-general",
      "normalizer linear algebra matches deg f - deg rad f on 25 random f",
      "25/25 agree", [&]() -> std::pair<bool, std::string> {
        std::mt19937_64 rng(1201);
        int agree = 0;
        for (int i = 0; i < 25; ++i) {
          std::uniform_int_distribution<long> deg_dist(1, 6);
          Poly f = random_factored_poly(rng, deg_dist(rng));
          FinCodimSubalgebra l = FinCodimSubalgebra::submodule(f, one);
          long lin = h1_dim(l);
          long formula = f.degree() - squarefree_part(f).degree();
          if (lin == formula) ++agree;
        }
        return {agree == 25, std::to_string(agree) + "/25 agree"};
      });

  run.claim(
      "A03-graded-solver",
      "graded derivation space is the ad_{e_k} line for n in 0..5, k in "
      "-1..10, window -1..40",
      "72 cells, each 1-dimensional with lambda_m = (m-k)c",
      [&]() -> std::pair<bool, std::string> {
        int cells = 0;
        for (long n = 0; n <= 5; ++n)
          for (long k = -1; k <= 10; ++k) {
            auto basis = graded_derivation_space(n, k, GradedWindow{-1, 40});
            if (basis.size() != 1) return {false, "cell not 1-dimensional"};
            for (long m = n; m <= n + 20; ++m)
              if (basis[0].lambda(m) != Rational(m - k) * basis[0].constant)
                return {false, "closed form mismatch"};
            ++cells;
          }
        return {cells == 72, std::to_string(cells) + " cells verified"};
      });

  run.claim(
      "A04-relation", "degree-5 bracket relation vanishes for 1 <= n < m <= 12",
      "all zero", [&]() -> std::pair<bool, std::string> {
        for (long n = 1; n <= 12; ++n)
          for (long m = n + 1; m <= 12; ++m)
            if (!verify_relation(n, m).is_zero())
              return {false, "nonzero at (" + std::to_string(n) + "," +
                                 std::to_string(m) + ")"};
        return {true, "all zero"};
      });

  run.claim(
      "A05-derived-series",
      "D(W(f)) = W(f^2) and W(f)_{(2)} = W(gcd(f',f) f^2) for 15 random f",
      "15/15 canonical equalities", [&]() -> std::pair<bool, std::string> {
        std::mt19937_64 rng(1205);
        int good = 0;
        for (int i = 0; i < 15; ++i) {
          std::uniform_int_distribution<long> deg_dist(1, 5);
          Poly f = random_factored_poly(rng, deg_dist(rng));
          FinCodimSubalgebra l = FinCodimSubalgebra::submodule(f, one);
          bool ok = derived_series_term(l, 1) ==
                    FinCodimSubalgebra::submodule(f * f, one);
          Poly expected2 = gcd(f.derivative(), f) * f * f;
          ok = ok && lower_central_term(l, 2) ==
                         FinCodimSubalgebra::submodule(expected2, one);
          if (ok) ++good;
        }
        return {good == 15, std::to_string(good) + "/15"};
      });

  run.claim(
      "A06-ext-classification",
      "Ext^1 classification for t(t-1)(t-2), t^2 and t^2(t-1)",
      "{3 simple roots x1, trivial 0}; {trivial 1 -> W(t)}; {trivial 1, "
      "root 1 -> W(t^2)}",
      [&]() -> std::pair<bool, std::string> {
        bool pass = true;
        std::ostringstream got;

        ClassifyResult a = classify_characters(parse_poly("t*(t-1)*(t-2)"), one);
        pass &= a.reports.size() == 4;
        pass &= a.reports[0].character.variant == Character::Variant::Trivial &&
                a.reports[0].ext_dim == 0;
        for (std::size_t i = 1; i < a.reports.size() && i < 4; ++i)
          pass &= a.reports[i].ext_dim == 1;
        got << "t(t-1)(t-2): trivial " << a.reports[0].ext_dim << ", "
            << a.reports.size() - 1 << " simple roots; ";

        ClassifyResult b = classify_characters(parse_poly("t^2"), one);
        pass &= b.reports.size() == 1;
        pass &= b.reports[0].ext_dim == 1;
        pass &= b.reports[0].canonical_extensions.size() == 1 &&
                b.reports[0].canonical_extensions[0] ==
                    FinCodimSubalgebra::submodule(parse_poly("t"), one);
        got << "t^2: trivial " << b.reports[0].ext_dim << " -> "
            << format_subalgebra(b.reports[0].canonical_extensions[0]) << "; ";

        ClassifyResult c = classify_characters(parse_poly("t^2*(t-1)"), one);
        pass &= c.reports.size() == 2;
        pass &= c.reports[0].ext_dim == 1;
        pass &= c.reports[1].character.variant ==
                    Character::Variant::SimpleRoot &&
                c.reports[1].character.xi == 1 && c.reports[1].ext_dim == 1;
        pass &= c.reports[1].canonical_extensions.size() == 1 &&
                c.reports[1].canonical_extensions[0] ==
                    FinCodimSubalgebra::submodule(parse_poly("t^2"), one);
        got << "t^2(t-1): trivial " << c.reports[0].ext_dim << ", root 1 -> "
            << format_subalgebra(c.reports[1].canonical_extensions[0]);
        return {pass, got.str()};
      });

  run.claim(
      "A07-embedding",
      "the extension of W(t) where e_0 acts as -1 embeds as e_{-1}, "
      "rebuilding the whole algebra",
      "witness d, reconstruction = W(1)",
      [&]() -> std::pair<bool, std::string> {
        FinCodimSubalgebra l =
            FinCodimSubalgebra::submodule(parse_poly("t"), one);
        EmbedResult embed =
            embed_extension(l, Character::simple_root(Rational(0)));
        bool pass = embed.witness == WittElement::basis(-1, one);
        pass &= embed.unique_mod_l;
        std::vector<WittElement> extras = {embed.witness};
        FinCodimSubalgebra rebuilt =
            canonicalize_known(one, l.conductor(), extras);
        pass &= rebuilt == FinCodimSubalgebra::full(one);
        return {pass, "witness " + format_witt(embed.witness) +
                          ", reconstruction " + format_subalgebra(rebuilt)};
      });

  run.claim(
      "A08-isomorphism",
      "W(t^2(t-1)) ~ W(t^2(t-2)) via x=0, alpha=1/2, gamma=1/8; "
      "W(t^2) !~ W(t(t-1))",
      "witness (0, 1/2, 1/8); not isomorphic",
      [&]() -> std::pair<bool, std::string> {
        IsoResult pos = decide_isomorphic(parse_poly("t^2*(t-1)"),
                                          parse_poly("t^2*(t-2)"), one);
        const IsoWitness* w = std::get_if<IsoWitness>(&pos);
        bool pass = w != nullptr;
        std::ostringstream got;
        if (w) {
          pass &= w->automorphism.x == 0 &&
                  w->automorphism.alpha == Rational(1, 2) &&
                  w->gamma == Rational(1, 8);
          got << "witness (x=" << to_string(w->automorphism.x)
              << ", alpha=" << to_string(w->automorphism.alpha)
              << ", gamma=" << to_string(w->gamma) << "); ";
        } else {
          got << "no witness; ";
        }
        IsoResult neg =
            decide_isomorphic(parse_poly("t^2"), parse_poly("t*(t-1)"), one);
        pass &= std::holds_alternative<NotIsomorphic>(neg);
        got << (std::holds_alternative<NotIsomorphic>(neg)
                    ? "not isomorphic"
                    : "unexpected verdict");
        return {pass, got.str()};
      });

  run.claim(
      "A09-transport",
      "the witness of A08 transports W(f) onto W(g) in canonical form",
      "transport equality", [&]() -> std::pair<bool, std::string> {
        Poly f = parse_poly("t^2*(t-1)");
        Poly g = parse_poly("t^2*(t-2)");
        IsoResult pos = decide_isomorphic(f, g, one);
        const IsoWitness* w = std::get_if<IsoWitness>(&pos);
        if (!w) return {false, "no witness found"};
        FinCodimSubalgebra image = transport_subalgebra(
            FinCodimSubalgebra::submodule(f, one), w->automorphism);
        bool pass = image == FinCodimSubalgebra::submodule(g, one);
        return {pass, "image " + format_subalgebra(image)};
      });

  run.claim(
      "A10-chains",
      "extension_chain(W(t^4)) has length 4 ending at the full algebra; "
      "chain length = codim on 15 random subalgebras of codim <= 5",
      "length 4; 15/15 lengths match",
      [&]() -> std::pair<bool, std::string> {
        ExtensionChain chain = extension_chain(
            FinCodimSubalgebra::submodule(Poly::monomial(4), one));
        bool pass = chain.steps.size() == 4;
        pass &= !chain.steps.empty() &&
                chain.steps.back().algebra == FinCodimSubalgebra::full(one);
        for (const ChainStep& s : chain.steps) pass &= s.nonsplit_certified;

        std::mt19937_64 rng(1210);
        int good = 0;
        for (int i = 0; i < 15; ++i) {
          FinCodimSubalgebra l = random_subalgebra(rng, 5);
          ExtensionChain c = extension_chain(l);
          bool ok = static_cast<long>(c.steps.size()) == l.codim();
          for (const ChainStep& s : c.steps) ok &= s.nonsplit_certified;
          ok &= c.steps.empty() ||
                c.steps.back().algebra == FinCodimSubalgebra::full(one);
          if (ok) ++good;
        }
        pass &= good == 15;
        return {pass, "W(t^4) length " + std::to_string(chain.steps.size()) +
                          "; " + std::to_string(good) + "/15 random"};
      });

  run.claim(
      "A11-lfg",
      "I(t^2) = (t) with g = t; I(t^2(t-1)) = (t(t+4/27)) verified by "
      "division; generators squarefree; iso transcripts exact; "
      "H1(L(f)) = 0",
      "all exact", [&]() -> std::pair<bool, std::string> {
        bool pass = true;
        std::ostringstream got;
        IfIdeal i1 = ideal_generator(parse_poly("t^2"));
        pass &= i1.generator == parse_poly("t");
        pass &= minimal_g(parse_poly("t^2")) == parse_poly("t");
        IfIdeal i2 = ideal_generator(parse_poly("t^2*(t-1)"));
        pass &= i2.generator == parse_poly("t^2+4/27*t");
        pass &= divides(parse_poly("t^2*(t-1)").derivative(),
                        poly_compose(i2.generator, parse_poly("t^2*(t-1)")));
        got << "h(t^2)=" << format_poly(i1.generator)
            << ", h(t^2(t-1))=" << format_poly(i2.generator) << "; ";

        std::mt19937_64 rng(1211);
        int squarefree_ok = 0;
        for (int i = 0; i < 25; ++i) {
          std::uniform_int_distribution<long> deg_dist(2, 6);
          Poly f = random_factored_poly(rng, deg_dist(rng));
          if (is_squarefree(ideal_generator(f).generator)) ++squarefree_ok;
        }
        pass &= squarefree_ok == 25;
        got << squarefree_ok << "/25 squarefree; ";

        int transcripts = 0;
        for (const char* fs : {"t^2", "t^3", "t^2*(t-1)"}) {
          LfgAlgebra a = LfgAlgebra::maximal(parse_poly(fs));
          if (lfg_iso(a, 10).all_exact) ++transcripts;
          if (lfg_derivation_space(a).h1_dim != 0) pass = false;
        }
        pass &= transcripts == 3;
        got << transcripts << "/3 transcripts exact, H1(L(f)) = 0";
        return {pass, got.str()};
      });

  run.claim(
      "A12-submodule-criterion",
      "direct t-stability agrees with the abelianisation criterion on 10 "
      "random W(f) and on span{e_0+e_1} + W(t^3)",
      "10/10 (true,true); non-submodule (false,false)",
      [&]() -> std::pair<bool, std::string> {
        std::mt19937_64 rng(1212);
        int good = 0;
        for (int i = 0; i < 10; ++i) {
          std::uniform_int_distribution<long> deg_dist(1, 5);
          Poly f = random_factored_poly(rng, deg_dist(rng));
          SubmoduleCheck check =
              is_submodule_check(FinCodimSubalgebra::submodule(f, one));
          if (check.direct && check.criterion) ++good;
        }
        std::vector<WittElement> gens;
        gens.push_back(parse_witt("e_0+e_1", one));
        for (long n = 2; n <= 8; ++n) gens.push_back(WittElement::basis(n, one));
        FinCodimSubalgebra l = from_generators(gens);
        SubmoduleCheck check = is_submodule_check(l);
        bool pass = good == 10 && !check.direct && !check.criterion;
        return {pass, std::to_string(good) + "/10 submodules agree; "
                      "non-submodule -> (" +
                          std::string(check.direct ? "true" : "false") + "," +
                          (check.criterion ? "true" : "false") + ")"};
      });

  run.claim(
      "A13-properties",
      "antisymmetry/Jacobi fuzz (1000), Leibniz for derivation witnesses, "
      "ord bracket law fuzz, JSON text round-trips",
      "all hold", [&]() -> std::pair<bool, std::string> {
        std::mt19937_64 rng(1213);
        for (int i = 0; i < 1000; ++i) {
          WittElement u = random_one_sided_element(rng, 6);
          WittElement v = random_one_sided_element(rng, 6);
          WittElement w = random_one_sided_element(rng, 6);
          if (!(bracket(u, v) == -bracket(v, u)))
            return {false, "antisymmetry failed"};
          WittElement jac = bracket(u, bracket(v, w)) +
                            bracket(v, bracket(w, u)) +
                            bracket(w, bracket(u, v));
          if (!jac.is_zero()) return {false, "Jacobi failed"};
        }

        // Leibniz for every witness of a few derivation spaces.
        for (const char* fs : {"t^2", "t^3*(t-1)", "t^2*(t-3)^2"}) {
          FinCodimSubalgebra l =
              FinCodimSubalgebra::submodule(parse_poly(fs), one);
          DerivationSpaceReport rep = derivation_space(l);
          std::mt19937_64 rng2(7);
          for (const WittElement& w : rep.normalizer_basis)
            for (int i = 0; i < 20; ++i) {
              WittElement u = random_element_of(rng2, l.conductor(), 3);
              WittElement v = random_element_of(rng2, l.conductor(), 3);
              WittElement lhs = bracket(w, bracket(u, v));
              WittElement rhs =
                  bracket(bracket(w, u), v) + bracket(u, bracket(w, v));
              if (!(lhs == rhs)) return {false, "Leibniz failed"};
            }
        }

        // ord law: ord([f d, g d]) = ord f + ord g - 1 when the orders differ.
        std::uniform_int_distribution<long> xi_dist(-2, 2);
        for (int i = 0; i < 300; ++i) {
          WittElement u = random_one_sided_element(rng, 5);
          WittElement v = random_one_sided_element(rng, 5);
          if (u.is_zero() || v.is_zero()) continue;
          Rational xi(xi_dist(rng));
          long ou = *ord_at(u.coeff(), xi);
          long ov = *ord_at(v.coeff(), xi);
          WittElement b = bracket(u, v);
          auto ob = ord_at(b.coeff(), xi);
          if (ou != ov) {
            if (!ob || *ob != ou + ov - 1) return {false, "ord law failed"};
          } else if (ob && *ob < 2 * ou) {
            return {false, "ord law lower bound failed"};
          }
        }

        // Round-trips through the text forms.
        for (int i = 0; i < 100; ++i) {
          WittElement w = random_one_sided_element(rng, 6);
          if (!(parse_witt(format_witt(w), one) == w))
            return {false, "witt round-trip failed"};
        }
        std::mt19937_64 rng3(8);
        for (int i = 0; i < 8; ++i) {
          FinCodimSubalgebra l = random_subalgebra(rng3, 4);
          if (!(parse_subalgebra(format_subalgebra(l), one) == l))
            return {false, "subalgebra round-trip failed"};
        }
        return {true, "all hold"};
      });

  std::sort(run.report.claims.begin(), run.report.claims.end(),
            [](const ClaimResult& a, const ClaimResult& b) { return a.id < b.id; });
  return run.report;
}

Json json_of(const VerifyReport& report) {
  Json j;
  Json claims = Json::array();
  for (const ClaimResult& c : report.claims) {
    Json e;
    e["id"] = c.id;
    e["statement"] = c.statement;
    e["expected"] = c.expected;
    e["computed"] = c.computed;
    e["pass"] = c.pass;
    e["millis"] = c.millis;
    claims.push_back(e);
  }
  j["claims"] = claims;
  j["all_pass"] = report.all_pass;
  return j;
}

}  // namespace witt
