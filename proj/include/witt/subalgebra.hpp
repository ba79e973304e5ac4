#pragma once

#include <optional>
#include <string>
#include <vector>

#include "witt/linalg.hpp"
#include "witt/witt_element.hpp"

namespace witt {

/// deg(L) = sporadic ∪ Z_{>= threshold}; every finite-codimension subalgebra
/// of the one-sided algebra has a degree set of this shape.
struct DegreeSet {
  long threshold;
  std::vector<long> sporadic;  ///< ascending, all < threshold
};

/// Verification record attached to every canonical form. All three checks are
/// symbolic (window-independent); a canonical form with a false flag is never
/// returned by the public constructors.
struct SubalgebraCertificate {
  bool sandwich = false;   ///< rad(conductor) divides every coset representative
  bool closure = false;    ///< brackets of coset representatives land back inside
  bool conductor = false;  ///< W(conductor) certified inside the algebra
};

/// Explicit membership witness: w = sum a_i c_i + (conductor * q) d.
struct Decomposition {
  std::vector<Rational> coset_coords;
  LaurentPoly quotient;
};

/// Canonical form of a finite-codimension subalgebra L: the minimal monic
/// conductor f with W(f) ⊆ L ⊆ W(rad f), together with a reduced-echelon
/// basis of L/W(f). Equality of subalgebras is representational equality.
class FinCodimSubalgebra {
 public:
  /// W(f), the submodule-subalgebra. f is normalised (monic; nonzero constant
  /// term for the two-sided algebra).
  static FinCodimSubalgebra submodule(const Poly& f, AlgebraKind kind);
  static FinCodimSubalgebra full(AlgebraKind kind);

  AlgebraKind kind() const { return kind_; }
  const Poly& conductor() const { return conductor_; }
  const std::vector<WittElement>& coset_basis() const { return coset_; }
  const SubalgebraCertificate& certificate() const { return cert_; }

  long codim() const {
    return conductor_.degree() - static_cast<long>(coset_.size());
  }
  bool is_full() const { return conductor_.degree() == 0; }

  bool contains(const WittElement& w) const;
  std::optional<Decomposition> decompose(const WittElement& w) const;

  /// Canonical representative of w + L: coefficient supported on the
  /// non-pivot exponents below deg(conductor).
  WittElement reduce(const WittElement& w) const;

  /// Exponents of the canonical complement; its size equals codim().
  std::vector<long> quotient_exponents() const;

  /// A finite Lie-algebra generating set: conductor module generators over a
  /// bootstrap seed range, plus the coset representatives.
  std::vector<WittElement> generators() const;

  /// Smallest degree of a nonzero element (one-sided only).
  long min_degree() const;
  DegreeSet degree_set() const;  ///< one-sided only

  bool operator==(const FinCodimSubalgebra& rhs) const {
    return kind_ == rhs.kind_ && conductor_ == rhs.conductor_ &&
           coset_ == rhs.coset_;
  }

  /// Defaults to the full one-sided algebra.
  FinCodimSubalgebra();

 private:
  friend FinCodimSubalgebra canonicalize_known(AlgebraKind,
                                               const Poly&,
                                               const std::vector<WittElement>&);
  AlgebraKind kind_;
  Poly conductor_;
  std::vector<WittElement> coset_;
  SubalgebraCertificate cert_;
};

/// Canonicalises the span W(known_multiple) + span(extras). The caller
/// guarantees W(known_multiple) lies inside the intended algebra and that the
/// extras belong to it; the conductor is then computed exactly (largest
/// t-multiplication-invariant subspace inside the coset span, then a gcd), so
/// the output needs no window at all.
FinCodimSubalgebra canonicalize_known(AlgebraKind kind,
                                      const Poly& known_multiple,
                                      const std::vector<WittElement>& extras);

/// Smallest window guaranteed safe for the given generators when none is
/// supplied explicitly.
GradedWindow default_window(const std::vector<WittElement>& gens);

/// The subalgebra generated by gens, in canonical form. Candidates are found
/// by bracket closure inside the window; the returned form is certified
/// symbolically, so a successful return is exact regardless of the window.
FinCodimSubalgebra from_generators(const std::vector<WittElement>& gens,
                                   std::optional<GradedWindow> window = {});

/// The monic generator of {p : p W ⊆ L}; idempotent on canonical forms.
Poly minimal_conductor(const FinCodimSubalgebra& l);

struct MembershipResult {
  bool member;
  std::optional<Decomposition> decomposition;
};

MembershipResult membership(const FinCodimSubalgebra& l, const WittElement& w);

/// [a, b] in canonical form. Meant for ideals of a common algebra (derived
/// series, lower central series), where the bracket span is closed.
FinCodimSubalgebra bracket_subalgebra(const FinCodimSubalgebra& a,
                                      const FinCodimSubalgebra& b);

FinCodimSubalgebra derived_series_term(const FinCodimSubalgebra& l, unsigned n,
                                       std::optional<GradedWindow> window = {});
FinCodimSubalgebra lower_central_term(const FinCodimSubalgebra& l, unsigned n,
                                      std::optional<GradedWindow> window = {});

/// N(L) = {w in W(rad f) : [w, L] ⊆ L}, computed exactly: W(f) is an ideal of
/// W(rad f), so only the finitely many coset conditions need solving.
FinCodimSubalgebra normalizer(const FinCodimSubalgebra& l);

long abelianisation_dim(const FinCodimSubalgebra& l,
                        std::optional<GradedWindow> window = {});

struct SubmoduleCheck {
  bool direct;     ///< t L ⊆ L tested on the coset basis
  bool criterion;  ///< dim L^ab == codim L
};

SubmoduleCheck is_submodule_check(const FinCodimSubalgebra& l,
                                  std::optional<GradedWindow> window = {});

/// Least m with D^m(L) ⊆ I; I must be an ideal of L contained in L.
long solvable_quotient_depth(const FinCodimSubalgebra& l,
                             const FinCodimSubalgebra& i,
                             std::optional<GradedWindow> window = {});

bool subalgebra_contains(const FinCodimSubalgebra& outer,
                         const FinCodimSubalgebra& inner);

/// Text forms: `W(f)` and `span{w1,...,wk} + W(f)`.
FinCodimSubalgebra parse_subalgebra(const std::string& text, AlgebraKind kind);
std::string format_subalgebra(const FinCodimSubalgebra& l);

/// Canonical residue of a coefficient modulo the conductor ideal: degree
/// below deg f, with negative exponents folded in through the inverse of t
/// mod f in the two-sided case.
Poly reduce_mod_conductor(const LaurentPoly& c, const Poly& f, AlgebraKind kind);

}  // namespace witt
