#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "witt/errors.hpp"
#include "witt/json_io.hpp"
#include "witt/parse.hpp"
#include "witt/verify.hpp"

namespace {

using witt::Json;

struct Output {
  bool json = false;
  std::string out_file;

  void emit(const std::string& command, const Json& result,
            const std::string& text) const {
    if (json) {
      Json wrapper;
      wrapper["schema"] = 1;
      wrapper["command"] = command;
      wrapper["result"] = result;
      write(wrapper.dump(2) + "\n");
    } else {
      write(text + "\n");
    }
  }

  void write(const std::string& s) const {
    if (out_file.empty()) {
      std::cout << s;
      return;
    }
    std::ofstream f(out_file);
    if (!f) throw witt::domain_error("cannot open output file: " + out_file);
    f << s;
  }
};

std::optional<witt::GradedWindow> parse_window(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw witt::parse_error("window must be lo:hi", 0);
  try {
    return witt::GradedWindow{std::stol(text.substr(0, colon)),
                              std::stol(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw witt::parse_error("window must be lo:hi with integer bounds", 0);
  }
}

Json error_json(const std::string& code, const std::string& message) {
  Json j;
  j["schema"] = 1;
  j["error"] = Json{{"code", code}, {"message", message}};
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with subalgebras of the Witt algebras"};
  app.require_subcommand(1);

  std::string algebra = "one-sided";
  std::string window_text;
  Output output;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--algebra", algebra,
                    "one-sided (default) or witt (two-sided)");
    cmd->add_flag("--json", output.json, "emit JSON");
    cmd->add_option("--out", output.out_file, "write the output to a file");
    cmd->add_option("--window", window_text, "degree window lo:hi");
  };

  std::string arg_u, arg_v, arg_f, arg_g, arg_sub, arg_conductor, arg_scope = "all";
  std::vector<std::string> arg_gens;
  long arg_n = 0, arg_m = 0, arg_k = 0;
  std::string arg_x = "0", arg_alpha = "1";
  bool arg_tau = false;

  CLI::App* c_bracket = app.add_subcommand("bracket", "Lie bracket of two elements");
  c_bracket->add_option("--u", arg_u)->required();
  c_bracket->add_option("--v", arg_v)->required();
  add_common(c_bracket);

  CLI::App* c_conductor =
      app.add_subcommand("conductor", "canonical form of a generated subalgebra");
  c_conductor->add_option("--gen", arg_gens, "generator (repeatable)")->required();
  add_common(c_conductor);

  CLI::App* c_der = app.add_subcommand("derivations", "derivation space report");
  c_der->add_option("--subalgebra", arg_sub)->required();
  add_common(c_der);

  CLI::App* c_graded =
      app.add_subcommand("graded-der", "graded derivation component");
  c_graded->add_option("-n", arg_n)->required();
  c_graded->add_option("-k", arg_k)->required();
  add_common(c_graded);

  CLI::App* c_rel = app.add_subcommand("relation", "degree-5 bracket relation");
  c_rel->add_option("-n", arg_n)->required();
  c_rel->add_option("-m", arg_m)->required();
  add_common(c_rel);

  CLI::App* c_h1 = app.add_subcommand("h1", "first cohomology dimension");
  c_h1->add_option("--conductor", arg_conductor);
  c_h1->add_option("--subalgebra", arg_sub);
  add_common(c_h1);

  CLI::App* c_ext = app.add_subcommand("ext", "one-dimensional extension classes");
  c_ext->add_option("--conductor", arg_conductor)->required();
  add_common(c_ext);

  CLI::App* c_chain =
      app.add_subcommand("chain", "completely non-split chain to the full algebra");
  c_chain->add_option("--subalgebra", arg_sub)->required();
  add_common(c_chain);

  CLI::App* c_iso = app.add_subcommand("iso", "decide W(f) isomorphic to W(g)");
  c_iso->add_option("--f", arg_f)->required();
  c_iso->add_option("--g", arg_g)->required();
  add_common(c_iso);

  CLI::App* c_aut = app.add_subcommand("aut", "automorphism group of W(f)");
  c_aut->add_option("--f", arg_f)->required();
  add_common(c_aut);

  CLI::App* c_gf = app.add_subcommand("gf", "ideal I(f), its generator h and g_f");
  c_gf->add_option("--f", arg_f)->required();
  add_common(c_gf);

  CLI::App* c_lfg = app.add_subcommand("lfg-iso", "isomorphism L(f,g) -> W(h)");
  c_lfg->add_option("--f", arg_f)->required();
  c_lfg->add_option("--g", arg_g, "defaults to the minimal g_f");
  add_common(c_lfg);

  CLI::App* c_tr = app.add_subcommand("transport", "apply an automorphism to a subalgebra");
  c_tr->add_option("--subalgebra", arg_sub)->required();
  c_tr->add_option("--x", arg_x, "shift (one-sided)");
  c_tr->add_option("--alpha", arg_alpha, "scaling");
  c_tr->add_flag("--tau", arg_tau, "compose with the inversion (witt)");
  add_common(c_tr);

  CLI::App* c_verify = app.add_subcommand("verify", "run the verification suite");
  c_verify->add_option("--scope", arg_scope, "claim tag filter (default all)");
  add_common(c_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    witt::AlgebraKind kind = witt::kind_of_name(algebra);
    std::optional<witt::GradedWindow> window = parse_window(window_text);

    if (c_bracket->parsed()) {
      witt::WittElement result = witt::bracket(witt::parse_witt(arg_u, kind),
                                               witt::parse_witt(arg_v, kind));
      output.emit("bracket", witt::json_of(result), witt::format_witt(result));
    } else if (c_conductor->parsed()) {
      std::vector<witt::WittElement> gens;
      for (const std::string& g : arg_gens)
        gens.push_back(witt::parse_witt(g, kind));
      witt::FinCodimSubalgebra l = witt::from_generators(gens, window);
      output.emit("conductor", witt::json_of(l), witt::format_subalgebra(l));
    } else if (c_der->parsed()) {
      witt::FinCodimSubalgebra l = witt::parse_subalgebra(arg_sub, kind);
      witt::DerivationSpaceReport rep = witt::derivation_space(l);
      std::string text = "h1_dim " + std::to_string(rep.h1_dim);
      for (const witt::WittElement& w : rep.normalizer_basis)
        text += "\nwitness " + witt::format_witt(w);
      output.emit("derivations", witt::json_of(rep), text);
    } else if (c_graded->parsed()) {
      auto basis = witt::graded_derivation_space(arg_n, arg_k, window, kind);
      Json arr = Json::array();
      std::string text;
      for (const auto& d : basis) {
        arr.push_back(witt::json_of(d));
        text += "lambda_m = (m - " + std::to_string(d.degree) + ") * " +
                witt::to_string(d.constant);
      }
      output.emit("graded-der", arr, text);
    } else if (c_rel->parsed()) {
      witt::WittElement r = witt::verify_relation(arg_n, arg_m);
      output.emit("relation", witt::json_of(r), witt::format_witt(r));
    } else if (c_h1->parsed()) {
      witt::FinCodimSubalgebra l =
          !arg_conductor.empty()
              ? witt::FinCodimSubalgebra::submodule(
                    witt::parse_poly(arg_conductor), kind)
              : witt::parse_subalgebra(arg_sub, kind);
      long h1 = witt::h1_dim(l);
      output.emit("h1", Json(h1), std::to_string(h1));
    } else if (c_ext->parsed()) {
      witt::ClassifyResult r =
          witt::classify_characters(witt::parse_poly(arg_conductor), kind);
      std::string text;
      for (const auto& rep : r.reports) {
        text += rep.character.variant == witt::Character::Variant::Trivial
                    ? std::string("trivial")
                    : "simple-root " + witt::to_string(rep.character.xi);
        text += ": ext_dim " + std::to_string(rep.ext_dim);
        for (const auto& e : rep.canonical_extensions)
          text += " -> " + witt::format_subalgebra(e);
        text += "\n";
      }
      text += "non-rational simple roots: " +
              std::to_string(r.nonrational_simple_roots);
      output.emit("ext", witt::json_of(r), text);
    } else if (c_chain->parsed()) {
      witt::ExtensionChain chain =
          witt::extension_chain(witt::parse_subalgebra(arg_sub, kind));
      std::string text = "length " + std::to_string(chain.steps.size());
      for (const auto& s : chain.steps)
        text += "\n-> " + witt::format_subalgebra(s.algebra) + "  (witness " +
                witt::format_witt(s.witness) + ")";
      output.emit("chain", witt::json_of(chain), text);
    } else if (c_iso->parsed()) {
      witt::IsoResult r = witt::decide_isomorphic(
          witt::parse_poly(arg_f), witt::parse_poly(arg_g), kind);
      std::string text;
      if (const auto* w = std::get_if<witt::IsoWitness>(&r)) {
        text = "isomorphic";
        if (kind == witt::AlgebraKind::OneSided)
          text += ": x = " + witt::to_string(w->automorphism.x);
        text += ", alpha = " + witt::to_string(w->automorphism.alpha);
        if (w->automorphism.inverted) text += ", inverted";
        text += ", gamma = " + witt::to_string(w->gamma);
      } else if (const auto* n = std::get_if<witt::NotIsomorphic>(&r)) {
        text = "not isomorphic: " + n->reason;
      } else {
        text = "no rational witness; constraint " +
               witt::format_poly(std::get<witt::NoRationalWitness>(r).constraint);
      }
      output.emit("iso", witt::json_of(r), text);
    } else if (c_aut->parsed()) {
      witt::AutGroupDescription d =
          witt::automorphism_group(witt::parse_poly(arg_f), kind);
      output.emit("aut", witt::json_of(d), d.summary);
    } else if (c_gf->parsed()) {
      witt::Poly f = witt::parse_poly(arg_f);
      witt::IfIdeal ideal = witt::ideal_generator(f);
      witt::Poly gf = witt::minimal_g(f);
      Json j = witt::json_of(ideal);
      j["g_f"] = witt::format_poly(gf);
      output.emit("gf", j,
                  "h = " + witt::format_poly(ideal.generator) +
                      ", g_f = " + witt::format_poly(gf) + ", reduced = " +
                      (witt::is_squarefree(ideal.generator) ? "true" : "false"));
    } else if (c_lfg->parsed()) {
      witt::Poly f = witt::parse_poly(arg_f);
      witt::LfgAlgebra a = arg_g.empty()
                               ? witt::LfgAlgebra::maximal(f)
                               : witt::LfgAlgebra(f, witt::parse_poly(arg_g));
      witt::LfgIsoReport r = witt::lfg_iso(a);
      output.emit("lfg-iso", witt::json_of(r),
                  "image W(" + witt::format_poly(r.image_conductor) +
                      "), transcript " +
                      (r.all_exact ? "exact" : "INEXACT"));
    } else if (c_tr->parsed()) {
      witt::FinCodimSubalgebra l = witt::parse_subalgebra(arg_sub, kind);
      witt::Automorphism a =
          kind == witt::AlgebraKind::OneSided
              ? witt::Automorphism::one_sided(witt::parse_rational(arg_x),
                                              witt::parse_rational(arg_alpha))
              : witt::Automorphism::two_sided(witt::parse_rational(arg_alpha),
                                              arg_tau);
      witt::FinCodimSubalgebra image = witt::transport_subalgebra(l, a);
      output.emit("transport", witt::json_of(image),
                  witt::format_subalgebra(image));
    } else if (c_verify->parsed()) {
      witt::VerifyReport report = witt::verify_suite(arg_scope);
      std::string text;
      for (const auto& c : report.claims)
        text += (c.pass ? "PASS " : "FAIL ") + c.id + "  " + c.computed + "\n";
      text += report.all_pass ? "all claims pass" : "SOME CLAIMS FAILED";
      output.emit("verify", witt::json_of(report), text);
      if (!report.all_pass) return 1;
    }
    return 0;
  } catch (const witt::parse_error& e) {
    if (output.json)
      std::cout << error_json("E_PARSE", e.what()).dump(2) << "\n";
    else
      std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const witt::window_error& e) {
    if (output.json) {
      Json j = error_json("E_WINDOW", e.what());
      j["error"]["suggested_window"] = std::to_string(e.suggested_lo) + ":" +
                                       std::to_string(e.suggested_hi);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cerr << "window exhausted: " << e.what() << " (retry with --window "
                << e.suggested_lo << ":" << e.suggested_hi << ")\n";
    }
    return 1;
  } catch (const witt::domain_error& e) {
    if (output.json)
      std::cout << error_json("E_DOMAIN", e.what()).dump(2) << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    if (output.json)
      std::cout << error_json("E_INTERNAL", e.what()).dump(2) << "\n";
    else
      std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
