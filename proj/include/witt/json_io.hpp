#pragma once

#include "json.hpp"

#include "witt/derivations.hpp"
#include "witt/extensions.hpp"
#include "witt/isomorphism.hpp"
#include "witt/lfg.hpp"
#include "witt/subalgebra.hpp"

namespace witt {

/// All JSON output is ordered and deterministic; rationals are emitted as
/// "p/q" strings so consumers never round.
using Json = nlohmann::ordered_json;

std::string kind_name(AlgebraKind kind);
AlgebraKind kind_of_name(const std::string& name);

Json json_of(const Rational& r);
Json json_of(const Poly& p);
Json json_of(const LaurentPoly& p);
Json json_of(const WittElement& w);
Json json_of(const FinCodimSubalgebra& l);
Json json_of(const DegreeSet& d);
Json json_of(const GradedDerivation& d);
Json json_of(const DerivationSpaceReport& r);
Json json_of(const Character& c);
Json json_of(const ExtensionReport& r);
Json json_of(const ClassifyResult& r);
Json json_of(const ExtensionChain& c);
Json json_of(const Automorphism& a);
Json json_of(const IsoWitness& w);
Json json_of(const IsoResult& r);
Json json_of(const AutGroupDescription& d);
Json json_of(const IfIdeal& i);
Json json_of(const LfgIsoReport& r);
Json json_of(const SubmoduleCheck& c);

}  // namespace witt
