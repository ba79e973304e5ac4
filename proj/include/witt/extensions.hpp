#pragma once

#include <optional>
#include <string>
#include <vector>

#include "witt/subalgebra.hpp"

namespace witt {

/// A one-dimensional module of a finite-codimension subalgebra L ⊆ W(rad f):
/// trivial, or the quotient W / W(t - xi) attached to a simple root xi of the
/// conductor. Both kill [L, L], and on s d the simple-root action is -s'(xi).
struct Character {
  enum class Variant { Trivial, SimpleRoot };
  Variant variant = Variant::Trivial;
  Rational xi;

  static Character trivial() { return {}; }
  static Character simple_root(const Rational& xi) {
    return {Variant::SimpleRoot, xi};
  }

  /// Action scalar of t^k f d on the module.
  Rational lambda(const Poly& f, long k) const;
  /// Action scalar of a general element of L.
  Rational lambda_of(const WittElement& u) const;
};

struct ExtensionReport {
  Character character;
  long ext_dim = 0;
  std::vector<FinCodimSubalgebra> canonical_extensions;
};

struct ClassifyResult {
  std::vector<ExtensionReport> reports;  ///< trivial first, then roots ascending
  long nonrational_simple_roots = 0;     ///< counted symbolically, no witnesses
};

/// Ext^1(M, W(f)) for every one-dimensional module M: the trivial character
/// carries deg f - deg rad f, each simple root carries 1 (with canonical
/// extension W(f / (t - xi))), everything else is zero.
ClassifyResult classify_characters(const Poly& f,
                                   AlgebraKind kind = AlgebraKind::OneSided);

/// The unique Lie bracket on L ⊕ kx extending a module action. The action is
/// either realised by an ambient element w (u.x = [u, w] rewritten through
/// x ↔ w) or is a pure character (u.x = lambda(u) x).
struct ExtensionBracketEntry {
  WittElement generator;
  WittElement inside;  ///< the L-component of [generator, x]
  Rational on_x;       ///< the x-coefficient of [generator, x]
};

struct ExtensionBracketTable {
  std::vector<ExtensionBracketEntry> action;
  bool jacobi_verified = false;
};

ExtensionBracketTable extension_bracket(const FinCodimSubalgebra& l,
                                        const WittElement& ambient_x);
ExtensionBracketTable extension_bracket(const FinCodimSubalgebra& l,
                                        const Character& chi);

struct EmbedResult {
  WittElement witness;    ///< canonical representative modulo L
  bool unique_mod_l = false;
};

/// Canonically embeds the non-split one-dimensional extension of L with
/// quotient character chi: returns w with [u, w] ≡ chi(u) w (mod L), found by
/// exact eigen-analysis of the quotient action and certified non-split.
/// Throws domain_error("split: ...") when only the split extension exists.
EmbedResult embed_extension(const FinCodimSubalgebra& l, const Character& chi);

struct ChainStep {
  FinCodimSubalgebra algebra;        ///< L_{i+1}
  WittElement witness;               ///< canonical lift spanning L_{i+1}/L_i
  std::vector<Rational> action;      ///< character value per generator of L_i
  bool nonsplit_certified = false;
};

struct ExtensionChain {
  FinCodimSubalgebra base;
  std::vector<ChainStep> steps;  ///< ends at the full algebra; empty iff base is full
};

/// A completely non-split chain from L to the full algebra, one dimension at
/// a time; each step is found as a rational eigenline of the quotient action
/// and certified non-split by exact linear algebra.
ExtensionChain extension_chain(const FinCodimSubalgebra& l);

/// Split test for the extension spanned by w over L with per-generator
/// character values: searches for a true common eigenvector y ≡ w (mod L).
/// Returns the section when one exists.
std::optional<WittElement> split_section(const FinCodimSubalgebra& l,
                                         const WittElement& w,
                                         const std::vector<Rational>& lambdas);

}  // namespace witt
