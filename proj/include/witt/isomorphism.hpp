#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "witt/subalgebra.hpp"

namespace witt {

/// Ambient automorphism. One-sided: rho_{x;alpha} sends e_n to
/// alpha^n (t-x)^{n+1} d, i.e. p d -> alpha^{-1} p(alpha (t - x)) d.
/// Two-sided: sigma_alpha (e_n -> alpha^n e_n) optionally composed with the
/// inversion tau (e_n -> -e_{-n}), applied first.
struct Automorphism {
  AlgebraKind kind = AlgebraKind::OneSided;
  Rational x;                   ///< shift, one-sided only
  Rational alpha = Rational(1); ///< nonzero scaling
  bool inverted = false;        ///< two-sided only: apply tau first

  static Automorphism identity(AlgebraKind kind) {
    Automorphism a;
    a.kind = kind;
    return a;
  }
  static Automorphism one_sided(const Rational& x, const Rational& alpha);
  static Automorphism two_sided(const Rational& alpha, bool inverted);
};

WittElement apply_automorphism(const Automorphism& a, const WittElement& w);
Automorphism compose(const Automorphism& a, const Automorphism& b);  ///< a after b
Automorphism inverse(const Automorphism& a);

/// Witness of W(f) ≅ W(g): the automorphism together with the scale gamma in
/// conductor(f) ∘ substitution = gamma * conductor(g).
struct IsoWitness {
  Automorphism automorphism;
  Rational gamma;
};

struct NotIsomorphic {
  std::string reason;
};

/// Rational witness may not exist although one does over the closure; the
/// remaining freedom in alpha is the root set of this polynomial.
struct NoRationalWitness {
  Poly constraint;
};

using IsoResult = std::variant<IsoWitness, NotIsomorphic, NoRationalWitness>;

/// Decides W(f) ≅ W(g) over the rationals; complete over the closure in the
/// sense that NotIsomorphic is a proof and NoRationalWitness carries the
/// exact algebraic constraint on alpha. Witnesses are re-verified by
/// substitution before being returned.
IsoResult decide_isomorphic(const Poly& f, const Poly& g, AlgebraKind kind);

/// Rational points of {automorphisms fixing W(f)}. For one-sided monomial-type
/// conductors (a single root) the stabiliser is a full torus line, reported
/// symbolically rather than element by element.
struct AutGroupDescription {
  std::vector<Automorphism> elements;  ///< always contains the identity
  bool torus = false;                  ///< x = root (1 - 1/alpha), alpha free
  Rational torus_root;
  std::string summary;
};

AutGroupDescription automorphism_group(const Poly& f, AlgebraKind kind);

FinCodimSubalgebra transport_subalgebra(const FinCodimSubalgebra& l,
                                        const Automorphism& a);

}  // namespace witt
