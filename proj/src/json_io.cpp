#include "witt/json_io.hpp"

#include "witt/errors.hpp"
#include "witt/parse.hpp"

namespace witt {

std::string kind_name(AlgebraKind kind) {
  return kind == AlgebraKind::OneSided ? "one-sided" : "witt";
}

AlgebraKind kind_of_name(const std::string& name) {
  if (name == "one-sided") return AlgebraKind::OneSided;
  if (name == "witt" || name == "two-sided") return AlgebraKind::TwoSided;
  throw domain_error("unknown algebra kind: " + name);
}

Json json_of(const Rational& r) { return to_string(r); }

Json json_of(const Poly& p) { return format_poly(p); }

Json json_of(const LaurentPoly& p) { return format_laurent(p); }

Json json_of(const WittElement& w) { return format_witt(w); }

Json json_of(const FinCodimSubalgebra& l) {
  Json j;
  j["kind"] = kind_name(l.kind());
  j["conductor"] = format_poly(l.conductor());
  Json basis = Json::array();
  for (const WittElement& c : l.coset_basis()) basis.push_back(format_witt(c));
  j["coset_basis"] = basis;
  j["codim"] = l.codim();
  j["text"] = format_subalgebra(l);
  const SubalgebraCertificate& cert = l.certificate();
  j["certificate"] = Json{{"sandwich", cert.sandwich},
                          {"closure", cert.closure},
                          {"conductor", cert.conductor}};
  return j;
}

Json json_of(const DegreeSet& d) {
  Json j;
  j["threshold"] = d.threshold;
  j["sporadic"] = d.sporadic;
  return j;
}

Json json_of(const GradedDerivation& d) {
  Json j;
  j["source_min"] = d.source_min;
  j["degree"] = d.degree;
  j["constant"] = json_of(d.constant);
  j["lambda"] = "(m - " + std::to_string(d.degree) + ") * " +
                to_string(d.constant);
  return j;
}

Json json_of(const DerivationSpaceReport& r) {
  Json j;
  Json w = Json::array();
  for (const WittElement& e : r.normalizer_basis) w.push_back(format_witt(e));
  j["normalizer_basis"] = w;
  j["h1_dim"] = r.h1_dim;
  j["inner_dim"] = r.inner_dim;
  return j;
}

Json json_of(const Character& c) {
  Json j;
  if (c.variant == Character::Variant::Trivial) {
    j["variant"] = "trivial";
  } else {
    j["variant"] = "simple-root";
    j["xi"] = json_of(c.xi);
  }
  return j;
}

Json json_of(const ExtensionReport& r) {
  Json j;
  j["character"] = json_of(r.character);
  j["ext_dim"] = r.ext_dim;
  Json exts = Json::array();
  for (const FinCodimSubalgebra& l : r.canonical_extensions)
    exts.push_back(format_subalgebra(l));
  j["extensions"] = exts;
  return j;
}

Json json_of(const ClassifyResult& r) {
  Json j;
  Json reports = Json::array();
  for (const ExtensionReport& rep : r.reports) reports.push_back(json_of(rep));
  j["reports"] = reports;
  j["nonrational_simple_roots"] = r.nonrational_simple_roots;
  j["other_characters"] = "Ext^1 = 0";
  return j;
}

Json json_of(const ExtensionChain& c) {
  Json j;
  j["base"] = format_subalgebra(c.base);
  j["length"] = c.steps.size();
  Json steps = Json::array();
  for (const ChainStep& s : c.steps) {
    Json step;
    step["algebra"] = format_subalgebra(s.algebra);
    step["witness"] = format_witt(s.witness);
    Json action = Json::array();
    for (const Rational& v : s.action) action.push_back(to_string(v));
    step["action"] = action;
    step["nonsplit_certified"] = s.nonsplit_certified;
    steps.push_back(step);
  }
  j["steps"] = steps;
  return j;
}

Json json_of(const Automorphism& a) {
  Json j;
  j["kind"] = kind_name(a.kind);
  if (a.kind == AlgebraKind::OneSided) {
    j["x"] = json_of(a.x);
    j["alpha"] = json_of(a.alpha);
  } else {
    j["alpha"] = json_of(a.alpha);
    j["inverted"] = a.inverted;
  }
  return j;
}

Json json_of(const IsoWitness& w) {
  Json j;
  j["witness"] = json_of(w.automorphism);
  j["gamma"] = json_of(w.gamma);
  return j;
}

Json json_of(const IsoResult& r) {
  Json j;
  if (const auto* w = std::get_if<IsoWitness>(&r)) {
    j["verdict"] = "isomorphic";
    j["witness"] = json_of(w->automorphism);
    j["gamma"] = json_of(w->gamma);
  } else if (const auto* n = std::get_if<NotIsomorphic>(&r)) {
    j["verdict"] = "not-isomorphic";
    j["reason"] = n->reason;
  } else {
    j["verdict"] = "no-rational-witness";
    j["constraint"] = format_poly(std::get<NoRationalWitness>(r).constraint);
  }
  return j;
}

Json json_of(const AutGroupDescription& d) {
  Json j;
  Json elements = Json::array();
  for (const Automorphism& a : d.elements) elements.push_back(json_of(a));
  j["elements"] = elements;
  j["torus"] = d.torus;
  if (d.torus) j["torus_root"] = json_of(d.torus_root);
  j["summary"] = d.summary;
  return j;
}

Json json_of(const IfIdeal& i) {
  Json j;
  j["f"] = format_poly(i.f);
  j["h"] = format_poly(i.generator);
  j["reduced"] = is_squarefree(i.generator);
  return j;
}

Json json_of(const LfgIsoReport& r) {
  Json j;
  j["h"] = format_poly(r.h);
  j["image_conductor"] = format_poly(r.image_conductor);
  Json pairs = Json::array();
  for (const LfgIsoPair& p : r.transcript) {
    Json entry;
    entry["i"] = p.i;
    entry["j"] = p.j;
    entry["source_bracket"] = format_witt(p.source_bracket);
    entry["mapped"] = format_witt(p.mapped);
    entry["exact"] = p.exact;
    pairs.push_back(entry);
  }
  j["transcript"] = pairs;
  j["all_exact"] = r.all_exact;
  return j;
}

Json json_of(const SubmoduleCheck& c) {
  Json j;
  j["direct"] = c.direct;
  j["criterion"] = c.criterion;
  j["agree"] = c.direct == c.criterion;
  return j;
}

}  // namespace witt
