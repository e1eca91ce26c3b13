// instkit: load institution / pi-institution / comorphism / logic documents,
// run the law checkers, apply the F/G constructions, and emit deterministic
// reports. Exit codes: 0 pass, 1 violations found, 2 usage or parse error,
// 3 resource bound exceeded.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "instkit/adjunction.hpp"
#include "instkit/generator.hpp"
#include "instkit/io.hpp"
#include "instkit/proplogic.hpp"

namespace {

using namespace instkit;
using instkit::io::json;

struct Options {
  std::string format = "text";
  std::optional<std::string> out_path;
  std::size_t cap = kSubsetCap;
  std::uint64_t seed = 0;
};

std::size_t default_cap() {
  if (const char* env = std::getenv("INSTKIT_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw ParseError("INSTKIT_CAP is not a number: " + std::string(env));
    }
  }
  return kSubsetCap;
}

void add_common_flags(CLI::App* cmd, Options& opt, bool with_output = false) {
  cmd->add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--cap", opt.cap, "Enumeration cap (subset sweeps)");
  if (with_output)
    cmd->add_option("-o,--output", opt.out_path, "Write the result here");
}

int emit_report(const ValidationReport& report, const Options& opt) {
  std::cout << io::render_report(report, opt.format == "json");
  return report.ok() ? 0 : 1;
}

void emit_document(const json& doc, const Options& opt) {
  std::string text = doc.dump(2) + "\n";
  if (opt.out_path)
    io::write_file_atomic(*opt.out_path, text);
  else
    std::cout << text;
}

Institution expect_institution(const std::string& path) {
  io::Document doc = io::load_document(path);
  if (auto* inst = std::get_if<Institution>(&doc.body)) return *inst;
  throw ParseError(path + ": expected an institution document, got '" +
                   doc.kind + "'");
}

PiInstitution expect_pi(const std::string& path) {
  io::Document doc = io::load_document(path);
  if (auto* j = std::get_if<PiInstitution>(&doc.body)) return *j;
  throw ParseError(path + ": expected a pi-institution document, got '" +
                   doc.kind + "'");
}

io::InstComorphismDoc expect_inst_comorphism(const std::string& path) {
  io::Document doc = io::load_document(path);
  if (auto* f = std::get_if<io::InstComorphismDoc>(&doc.body)) return *f;
  throw ParseError(path + ": expected an inst-comorphism document, got '" +
                   doc.kind + "'");
}

io::PiComorphismDoc expect_pi_comorphism(const std::string& path) {
  io::Document doc = io::load_document(path);
  if (auto* g = std::get_if<io::PiComorphismDoc>(&doc.body)) return *g;
  throw ParseError(path + ": expected a pi-comorphism document, got '" +
                   doc.kind + "'");
}

LogicPresentation expect_logic(const std::string& path) {
  io::Document doc = io::load_document(path);
  if (auto* l = std::get_if<LogicPresentation>(&doc.body)) return *l;
  throw ParseError(path + ": expected a logic document, got '" + doc.kind +
                   "'");
}

io::TranslationDoc expect_translation(const std::string& path) {
  io::Document doc = io::load_document(path);
  if (auto* t = std::get_if<io::TranslationDoc>(&doc.body)) return *t;
  throw ParseError(path + ": expected a translation document, got '" +
                   doc.kind + "'");
}

// "src:dst:translation.json" -> LogicArrow against already loaded logics.
LogicArrow parse_arrow(const std::string& text,
                       const std::vector<LogicPresentation>& logics) {
  auto first = text.find(':');
  auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw ParseError("bad --arrow '" + text + "', want <src>:<dst>:<file>");
  LogicArrow arrow;
  try {
    arrow.src = std::stoull(text.substr(0, first));
    arrow.dst = std::stoull(text.substr(first + 1, second - first - 1));
  } catch (const std::exception&) {
    throw ParseError("bad --arrow indices in '" + text + "'");
  }
  if (arrow.src >= logics.size() || arrow.dst >= logics.size())
    throw ParseError("--arrow '" + text + "' points past the logic list");
  io::TranslationDoc t = expect_translation(text.substr(second + 1));
  arrow.translation = io::resolve_translation(
      t, logics[arrow.src].signature, logics[arrow.dst].signature);
  return arrow;
}

json sentence_set_json(const SentSet& s) {
  json out = json::array();
  for (const auto& x : s) out.push_back(x);
  return out;
}

// Parses "a=b" pairs into a finite map.
Fn parse_pairs(const std::vector<std::string>& pairs, const char* what) {
  Fn out;
  for (const auto& p : pairs) {
    auto eq = p.find('=');
    if (eq == std::string::npos)
      throw ParseError(std::string("bad ") + what + " mapping '" + p +
                       "', want a=b");
    out[p.substr(0, eq)] = p.substr(eq + 1);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finitely presented institutions: checkers and constructions"};
  app.require_subcommand(1);

  Options opt;
  try {
    opt.cap = default_cap();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::string path, path2, path3, formula_text, kind_name = "strict";
  std::vector<std::string> logic_paths, arrow_specs, sentences, obj_pairs,
      mor_pairs;
  std::string what;

  // --- check ---
  auto* check = app.add_subcommand("check", "Run a law checker on a document");
  check->require_subcommand(1);
  auto add_check = [&](const std::string& name, const std::string& desc) {
    auto* c = check->add_subcommand(name, desc);
    c->add_option("file", path, "Input document")->required();
    add_common_flags(c, opt);
    return c;
  };
  auto* chk_category = add_check("category", "Category laws of the signature");
  auto* chk_inst = add_check("institution", "Full institution validation");
  auto* chk_pi = add_check("pi", "Full pi-institution validation");
  auto* chk_icom = add_check("inst-comorphism", "Institution comorphism laws");
  auto* chk_imor = add_check("inst-morphism", "Institution morphism laws");
  auto* chk_pcom = add_check("pi-comorphism", "Pi-comorphism compatibility");
  auto* chk_lemma1 = add_check("lemma1", "Star inclusions along a comorphism");
  auto* chk_galois =
      add_check("galois", "Galois-connection laws at every signature");

  // --- apply ---
  auto* apply = app.add_subcommand("apply", "Apply F or G to a document");
  apply->require_subcommand(1);
  auto* apply_f = apply->add_subcommand(
      "F", "Semantic-closure pi-institution of an institution (or of a "
           "comorphism)");
  apply_f->add_option("file", path, "Input document")->required();
  add_common_flags(apply_f, opt, true);
  auto* apply_g = apply->add_subcommand(
      "G", "Closed-theory institution of a pi-institution (or of a "
           "pi-comorphism)");
  apply_g->add_option("file", path, "Input document")->required();
  add_common_flags(apply_g, opt, true);

  // --- adjunction ---
  auto* adj = app.add_subcommand("adjunction", "Unit, counit and their laws");
  adj->require_subcommand(1);
  auto* adj_unit = adj->add_subcommand(
      "unit", "Unit validity, closure agreement, and the G-side triangle");
  adj_unit->add_option("pi", path, "Pi-institution document")->required();
  add_common_flags(adj_unit, opt);
  auto* adj_transpose = adj->add_subcommand(
      "transpose", "Adjoint transpose of a pi-comorphism J -> F(I)");
  adj_transpose->add_option("picom", path, "Pi-comorphism document")
      ->required();
  adj_transpose->add_option("inst", path2, "Institution document for I")
      ->required();
  add_common_flags(adj_transpose, opt, true);
  auto* adj_fg =
      adj->add_subcommand("fg-identity", "F(G(J)) = J componentwise");
  adj_fg->add_option("pi", path, "Pi-institution document")->required();
  add_common_flags(adj_fg, opt);
  auto* adj_universal = adj->add_subcommand(
      "universal", "Existence and uniqueness of the transpose's beta");
  adj_universal->add_option("picom", path, "Pi-comorphism document")
      ->required();
  adj_universal->add_option("inst", path2, "Institution document for I")
      ->required();
  add_common_flags(adj_universal, opt);
  auto* adj_counit = adj->add_subcommand(
      "counit", "Counit validity and the F-side triangle");
  adj_counit->add_option("inst", path, "Institution document")->required();
  add_common_flags(adj_counit, opt, true);

  // --- logic ---
  auto* logic = app.add_subcommand("logic", "Matrix-logic constructions");
  logic->require_subcommand(1);
  auto* logic_inst = logic->add_subcommand(
      "build-institution", "Institution of a diagram of matrix logics");
  logic_inst->add_option("logics", logic_paths, "Logic documents")->required();
  logic_inst->add_option("--arrow", arrow_specs,
                         "Signature morphism <src>:<dst>:<translation.json>");
  logic_inst->add_option("--kind", kind_name, "Translation kind")
      ->check(CLI::IsMember({"strict", "flexible"}));
  add_common_flags(logic_inst, opt, true);
  auto* logic_pi = logic->add_subcommand(
      "build-pi", "Pi-institution of a diagram of matrix logics");
  logic_pi->add_option("logics", logic_paths, "Logic documents")->required();
  logic_pi->add_option("--arrow", arrow_specs,
                       "Signature morphism <src>:<dst>:<translation.json>");
  logic_pi->add_option("--kind", kind_name, "Translation kind")
      ->check(CLI::IsMember({"strict", "flexible"}));
  add_common_flags(logic_pi, opt, true);
  auto* logic_check = logic->add_subcommand(
      "check-morphism", "Consequence preservation of a translation");
  logic_check->add_option("translation", path, "Translation document")
      ->required();
  logic_check->add_option("from", path2, "Source logic document")->required();
  logic_check->add_option("to", path3, "Target logic document")->required();
  add_common_flags(logic_check, opt);
  auto* logic_closure = logic->add_subcommand(
      "closure", "Matrix-consequence closure of a formula set");
  logic_closure->add_option("logic", path, "Logic document")->required();
  logic_closure->add_option("formulas", sentences, "Premise formulas");
  add_common_flags(logic_closure, opt);
  auto* logic_translate =
      logic->add_subcommand("translate", "Translate one formula");
  logic_translate->add_option("translation", path, "Translation document")
      ->required();
  logic_translate->add_option("from", path2, "Source logic document")
      ->required();
  logic_translate->add_option("to", path3, "Target logic document")
      ->required();
  logic_translate->add_option("formula", formula_text, "Formula text")
      ->required();
  add_common_flags(logic_translate, opt);
  auto* logic_plus = logic->add_subcommand(
      "plus", "Inclusion comorphism from a strict diagram into a flexible one");
  logic_plus->add_option("strict", path, "Strict-side pi-institution")
      ->required();
  logic_plus->add_option("flexible", path2, "Flexible-side pi-institution")
      ->required();
  logic_plus->add_option("--obj", obj_pairs, "Object embedding a=b");
  logic_plus->add_option("--mor", mor_pairs, "Morphism embedding a=b");
  add_common_flags(logic_plus, opt, true);

  // --- closure ---
  auto* closure_cmd = app.add_subcommand(
      "closure", "Closure of a sentence set in a pi-institution");
  closure_cmd->add_option("pi", path, "Pi-institution document")->required();
  closure_cmd->add_option("sig", what, "Signature object id")->required();
  closure_cmd->add_option("sentences", sentences, "Premise sentences");
  add_common_flags(closure_cmd, opt);

  // --- generate ---
  auto* gen = app.add_subcommand(
      "generate", "Seeded random institutions and comorphisms");
  gen->require_subcommand(1);
  auto* gen_inst = gen->add_subcommand("institution", "One small institution");
  gen_inst->add_option("--seed", opt.seed, "Generator seed");
  add_common_flags(gen_inst, opt, true);
  auto* gen_com = gen->add_subcommand("comorphism", "One valid comorphism");
  gen_com->add_option("--seed", opt.seed, "Generator seed");
  add_common_flags(gen_com, opt, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (chk_category->parsed()) {
      io::Document doc = io::load_document(path);
      if (auto* inst = std::get_if<Institution>(&doc.body))
        return emit_report(check_category(inst->sig), opt);
      if (auto* j = std::get_if<PiInstitution>(&doc.body))
        return emit_report(check_category(j->sig), opt);
      throw ParseError(path + ": document kind '" + doc.kind +
                       "' has no signature category");
    }
    if (chk_inst->parsed())
      return emit_report(validate_institution(expect_institution(path)), opt);
    if (chk_pi->parsed())
      return emit_report(validate_pi_institution(expect_pi(path), opt.cap),
                         opt);
    if (chk_icom->parsed()) {
      auto doc = expect_inst_comorphism(path);
      return emit_report(check_inst_comorphism(doc.f, doc.source, doc.target),
                         opt);
    }
    if (chk_imor->parsed()) {
      io::Document doc = io::load_document(path);
      auto* m = std::get_if<io::InstMorphismDoc>(&doc.body);
      if (!m)
        throw ParseError(path + ": expected an inst-morphism document, got '" +
                         doc.kind + "'");
      return emit_report(check_inst_morphism(m->h, m->source, m->target), opt);
    }
    if (chk_pcom->parsed()) {
      auto doc = expect_pi_comorphism(path);
      return emit_report(
          check_pi_comorphism(doc.g, doc.source, doc.target, opt.cap), opt);
    }
    if (chk_lemma1->parsed()) {
      auto doc = expect_inst_comorphism(path);
      return emit_report(check_lemma1(doc.f, doc.source, doc.target, opt.cap),
                         opt);
    }
    if (chk_galois->parsed())
      return emit_report(check_galois_laws(expect_institution(path), opt.cap),
                         opt);

    if (apply_f->parsed()) {
      io::Document doc = io::load_document(path);
      if (auto* inst = std::get_if<Institution>(&doc.body)) {
        PiInstitution j = F_object(*inst);
        emit_document(io::pi_to_json(j, opt.cap), opt);
        return emit_report(validate_pi_institution(j, opt.cap), opt);
      }
      if (auto* f = std::get_if<io::InstComorphismDoc>(&doc.body)) {
        io::PiComorphismDoc out{F_object(f->source), F_object(f->target),
                                F_morphism(f->f, f->source, f->target)};
        emit_document(io::pi_comorphism_to_json(out, opt.cap), opt);
        return emit_report(
            check_pi_comorphism(out.g, out.source, out.target, opt.cap), opt);
      }
      throw ParseError(path + ": apply F wants an institution or an "
                              "inst-comorphism, got '" + doc.kind + "'");
    }
    if (apply_g->parsed()) {
      io::Document doc = io::load_document(path);
      if (auto* j = std::get_if<PiInstitution>(&doc.body)) {
        Institution out = G_object(*j, opt.cap);
        emit_document(io::institution_to_json(out), opt);
        ValidationReport report = validate_institution(out);
        for (const auto& [f, arrow] : j->sig.morphisms)
          report.merge(check_preimage_closed(*j, f, opt.cap));
        return emit_report(report, opt);
      }
      if (auto* h = std::get_if<io::PiComorphismDoc>(&doc.body)) {
        io::InstComorphismDoc out{
            G_object(h->source, opt.cap), G_object(h->target, opt.cap),
            G_morphism(h->g, h->source, h->target, opt.cap)};
        emit_document(io::inst_comorphism_to_json(out), opt);
        return emit_report(
            check_inst_comorphism(out.f, out.source, out.target), opt);
      }
      throw ParseError(path + ": apply G wants a pi-institution or a "
                              "pi-comorphism, got '" + doc.kind + "'");
    }

    if (adj_unit->parsed()) {
      PiInstitution j = expect_pi(path);
      ValidationReport report = check_unit(j, opt.cap);
      report.merge(check_triangle_G(j, opt.cap));
      return emit_report(report, opt);
    }
    if (adj_transpose->parsed()) {
      auto h = expect_pi_comorphism(path);
      Institution i = expect_institution(path2);
      io::InstComorphismDoc out{G_object(h.source, opt.cap), i,
                                transpose(h.g, h.source, i, opt.cap)};
      emit_document(io::inst_comorphism_to_json(out), opt);
      return emit_report(
          check_inst_comorphism(out.f, out.source, out.target), opt);
    }
    if (adj_fg->parsed())
      return emit_report(check_FG_identity(expect_pi(path), opt.cap), opt);
    if (adj_universal->parsed()) {
      auto h = expect_pi_comorphism(path);
      Institution i = expect_institution(path2);
      return emit_report(check_universal_property(h.g, h.source, i, opt.cap),
                         opt);
    }
    if (adj_counit->parsed()) {
      Institution i = expect_institution(path);
      InstComorphism eps = counit(i, opt.cap);
      io::InstComorphismDoc out{G_object(F_object(i), opt.cap), i, eps};
      if (opt.out_path) emit_document(io::inst_comorphism_to_json(out), opt);
      ValidationReport report =
          check_inst_comorphism(eps, out.source, out.target);
      report.merge(check_triangle_F(i, opt.cap));
      return emit_report(report, opt);
    }

    if (logic_inst->parsed() || logic_pi->parsed()) {
      std::vector<LogicPresentation> logics;
      for (const auto& p : logic_paths) logics.push_back(expect_logic(p));
      std::vector<LogicArrow> arrows;
      for (const auto& a : arrow_specs) arrows.push_back(parse_arrow(a, logics));
      if (logic_inst->parsed()) {
        Institution out = build_matrix_institution(logics, arrows);
        emit_document(io::institution_to_json(out), opt);
        return emit_report(validate_institution(out), opt);
      }
      TranslationKind kind = kind_name == "flexible" ? TranslationKind::flexible
                                                     : TranslationKind::strict;
      PiInstitution out = build_logics_pi_institution(kind, logics, arrows);
      emit_document(io::pi_to_json(out, opt.cap), opt);
      return emit_report(validate_pi_institution(out, opt.cap), opt);
    }
    if (logic_check->parsed()) {
      LogicPresentation from = expect_logic(path2), to = expect_logic(path3);
      SigTranslation t = io::resolve_translation(expect_translation(path),
                                                 from.signature, to.signature);
      return emit_report(check_logic_morphism(t, from, to, opt.cap), opt);
    }
    if (logic_closure->parsed()) {
      LogicPresentation l = expect_logic(path);
      PiInstitution j =
          build_logics_pi_institution(TranslationKind::strict, {l}, {});
      std::set<std::string> vars(l.variables.begin(), l.variables.end());
      SentSet gamma;
      for (const auto& s : sentences)
        gamma.insert(render_formula(parse_formula(s, l.signature, vars)));
      json out = sentence_set_json(closure_of(j, "L0", gamma));
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (logic_translate->parsed()) {
      LogicPresentation from = expect_logic(path2), to = expect_logic(path3);
      SigTranslation t = io::resolve_translation(expect_translation(path),
                                                 from.signature, to.signature);
      std::set<std::string> vars(from.variables.begin(), from.variables.end());
      Formula f = parse_formula(formula_text, from.signature, vars);
      std::cout << render_formula(translate_formula(t, f)) << "\n";
      return 0;
    }
    if (logic_plus->parsed()) {
      PiInstitution js = expect_pi(path), jf = expect_pi(path2);
      Fn objs = parse_pairs(obj_pairs, "--obj");
      Fn mors = parse_pairs(mor_pairs, "--mor");
      if (objs.empty())
        for (const auto& o : js.sig.objects) objs[o] = o;
      if (mors.empty())
        for (const auto& [m, arrow] : js.sig.morphisms) mors[m] = m;
      PiComorphism plus = build_plus_comorphism(js, jf, objs, mors);
      if (opt.out_path)
        emit_document(io::pi_comorphism_to_json({js, jf, plus}, opt.cap), opt);
      return emit_report(check_pi_comorphism(plus, js, jf, opt.cap), opt);
    }

    if (closure_cmd->parsed()) {
      PiInstitution j = expect_pi(path);
      SentSet gamma(sentences.begin(), sentences.end());
      json out = sentence_set_json(closure_of(j, what, gamma));
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (gen_inst->parsed()) {
      emit_document(io::institution_to_json(random_institution(opt.seed)),
                    opt);
      return 0;
    }
    if (gen_com->parsed()) {
      GeneratedComorphism g = random_comorphism(opt.seed);
      emit_document(
          io::inst_comorphism_to_json({g.from, g.to, g.f}), opt);
      return 0;
    }
  } catch (const UniverseTooLarge& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return 3;
  } catch (const SearchSpaceTooLarge& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return 3;
  } catch (const ExplosionGuard& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return 3;
  } catch (const DepthOverflow& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cerr << "error: no command selected\n";
  return 2;
}
