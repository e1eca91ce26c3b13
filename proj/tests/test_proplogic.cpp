#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "instkit/galois.hpp"
#include "instkit/proplogic.hpp"

using namespace instkit;
using fixtures::has_law;

namespace {

const std::set<std::string> kOneVar = {"p"};
const std::set<std::string> kTwoVar = {"p", "q"};

LogicPresentation cpl2() {
  LogicPresentation l = cpl1_presentation();
  l.variables = {"p", "q"};
  return l;
}

LogicPresentation boolean_or(int depth_cap,
                             std::vector<std::string> variables) {
  LogicPresentation l = cpl1_presentation();
  l.signature.connectives.erase("and");
  l.signature.connectives["or"] = 2;
  auto and_table = l.matrix.interp.at("and");
  l.matrix.interp.erase("and");
  auto& or_table = l.matrix.interp["or"];
  for (const auto& [args, val] : and_table)
    or_table[args] = (args[0] == "T" || args[1] == "T") ? "T" : "F";
  l.variables = std::move(variables);
  l.depth_cap = depth_cap;
  return l;
}

}  // namespace

TEST_CASE("parse_formula handles atoms, nesting, and errors") {
  PropSignature sig = cpl1_presentation().signature;
  CHECK(parse_formula("p", sig, kOneVar) == Formula::var("p"));
  Formula f = parse_formula("and(p,not(p))", sig, kOneVar);
  CHECK(f == Formula::conn("and", {Formula::var("p"),
                                   Formula::conn("not", {Formula::var("p")})}));
  CHECK_THROWS_AS(parse_formula("and(p)", sig, kOneVar), ArityMismatch);
  CHECK_THROWS_AS(parse_formula("xor(p,p)", sig, kOneVar), UnknownSymbol);
  CHECK_THROWS_AS(parse_formula("and(p", sig, kOneVar), SyntaxError);
  CHECK_THROWS_AS(parse_formula("", sig, kOneVar), SyntaxError);
}

TEST_CASE("render_formula round-trips with the parser") {
  PropSignature sig = cpl1_presentation().signature;
  for (const std::string text : {"p", "and(p,not(p))", "not(not(p))"}) {
    Formula f = parse_formula(text, sig, kOneVar);
    CHECK(render_formula(f) == text);
    CHECK(parse_formula(render_formula(f), sig, kOneVar) == f);
  }
}

TEST_CASE("enumerate_formulas produces the truncated universe in order") {
  LogicPresentation l = cpl1_presentation();
  std::vector<std::string> rendered;
  for (const auto& f : enumerate_formulas(l.signature, l.variables, 1))
    rendered.push_back(render_formula(f));
  CHECK(rendered ==
        std::vector<std::string>{"p", "and(p,p)", "not(p)"});

  auto atoms = enumerate_formulas(l.signature, {"p", "q"}, 0);
  CHECK(atoms == std::vector<Formula>{Formula::var("p"), Formula::var("q")});

  auto depth2 = enumerate_formulas(l.signature, l.variables, 2);
  CHECK(depth2.size() == 13);
  CHECK(depth2 == enumerate_formulas(l.signature, l.variables, 2));

  CHECK_THROWS_AS(enumerate_formulas(l.signature, l.variables, 2, 5),
                  ExplosionGuard);
}

TEST_CASE("rendering is injective on an enumeration sample") {
  LogicPresentation l = cpl1_presentation();
  auto formulas = enumerate_formulas(l.signature, l.variables, 3);
  std::set<std::string> rendered;
  for (const auto& f : formulas) rendered.insert(render_formula(f));
  CHECK(rendered.size() == formulas.size());
}

TEST_CASE("eval_formula over the boolean and three-valued matrices") {
  LogicPresentation cpl = cpl1_presentation();
  Formula contradiction = parse_formula("and(p,not(p))", cpl.signature, kOneVar);
  CHECK(eval_formula(cpl.matrix, {{"p", "T"}}, contradiction) == "F");

  LogicPresentation luk = luk3_presentation();
  Formula neg = parse_formula("not(p)", luk.signature, kOneVar);
  CHECK(eval_formula(luk.matrix, {{"p", "half"}}, neg) == "half");
  Formula self = parse_formula("imp(p,p)", luk.signature, kOneVar);
  CHECK(eval_formula(luk.matrix, {{"p", "half"}}, self) == "1");
  CHECK_THROWS_AS(eval_formula(luk.matrix, {}, neg), UnassignedVariable);
}

TEST_CASE("matrix_consequence by brute force over valuations") {
  LogicPresentation cpl = cpl1_presentation();
  Formula p = Formula::var("p");
  Formula pp = parse_formula("and(p,p)", cpl.signature, kOneVar);
  CHECK(matrix_consequence(cpl, {p}, pp));
  CHECK_FALSE(matrix_consequence(cpl, {}, p));

  LogicPresentation luk = luk3_presentation();
  luk.variables = {"p", "q"};
  Formula q = Formula::var("q");
  Formula mp = parse_formula("imp(p,q)", luk.signature, kTwoVar);
  CHECK(matrix_consequence(luk, {p, mp}, q));
}

TEST_CASE("translate_formula: strict renaming and flexible substitution") {
  PropSignature and_sig = cpl2().signature;
  Formula conj = parse_formula("and(p,q)", and_sig, kTwoVar);

  SigTranslation swap;
  swap.kind = TranslationKind::strict;
  swap.strict_map = {{"and", "or"}, {"not", "not"}};
  CHECK(render_formula(translate_formula(swap, conj)) == "or(p,q)");

  PropSignature or_sig = boolean_or(1, {"p"}).signature;
  SigTranslation dm;
  dm.kind = TranslationKind::flexible;
  dm.flexible_map = {
      {"and", parse_formula("not(or(not(x1),not(x2)))", or_sig, {"x1", "x2"})},
      {"not", parse_formula("not(x1)", or_sig, {"x1"})}};
  CHECK(render_formula(translate_formula(dm, conj)) ==
        "not(or(not(p),not(q)))");
  CHECK(translation_growth(dm) == 3);
  CHECK(translation_growth(swap) == 1);
}

TEST_CASE("check_logic_morphism accepts De Morgan and rejects the swap") {
  LogicPresentation cpl = cpl1_presentation();
  SigTranslation ident;
  ident.kind = TranslationKind::strict;
  for (const auto& [name, arity] : cpl.signature.connectives)
    ident.strict_map[name] = name;
  CHECK(check_logic_morphism(ident, cpl, cpl).ok());

  LogicPresentation target = boolean_or(3, {"p"});
  SigTranslation dm;
  dm.kind = TranslationKind::flexible;
  dm.flexible_map = {
      {"and", parse_formula("not(or(not(x1),not(x2)))", target.signature,
                            {"x1", "x2"})},
      {"not", parse_formula("not(x1)", target.signature, {"x1"})}};
  CHECK(check_logic_morphism(dm, cpl, target).ok());

  SigTranslation swap;
  swap.kind = TranslationKind::strict;
  swap.strict_map = {{"and", "or"}, {"not", "not"}};
  ValidationReport r =
      check_logic_morphism(swap, cpl2(), boolean_or(1, {"p", "q"}));
  REQUIRE_FALSE(r.ok());
  CHECK(has_law(r, "logic-morphism"));
  CHECK(r.violations[0].witness ==
        std::vector<std::string>{"{and(p,q)}", "p"});

  // The De Morgan image has depth 3, so a depth-1 target cannot host it.
  CHECK_THROWS_AS(check_logic_morphism(dm, cpl, boolean_or(1, {"p"})),
                  DepthOverflow);
}

TEST_CASE("build_matrix_institution realizes the fixtures") {
  Institution cpl = build_matrix_institution(cpl1_presentation());
  CHECK(cpl.sen.on_objects.at("L0").size() == 3);
  CHECK(cpl.mod_objects.at("L0").size() == 2);
  CHECK(validate_institution(cpl).ok());
  CHECK(closure_of(F_object(cpl), "L0", {}) == SentSet{});

  Institution luk = build_matrix_institution(luk3_presentation());
  CHECK(luk.mod_objects.at("L0").size() == 3);
  CHECK(validate_institution(luk).ok());
}

TEST_CASE("build_logics_pi_institution: strict and flexible diagrams") {
  LogicPresentation cpl = cpl1_presentation();
  LogicPresentation renamed;
  renamed.signature.connectives = {{"et", 2}, {"non", 1}};
  renamed.matrix = cpl.matrix;
  renamed.matrix.interp.clear();
  renamed.matrix.interp["et"] = cpl.matrix.interp.at("and");
  renamed.matrix.interp["non"] = cpl.matrix.interp.at("not");
  renamed.variables = cpl.variables;
  renamed.depth_cap = cpl.depth_cap;

  SigTranslation rename;
  rename.kind = TranslationKind::strict;
  rename.strict_map = {{"and", "et"}, {"not", "non"}};
  PiInstitution js = build_logics_pi_institution(
      TranslationKind::strict, {cpl, renamed}, {{0, 1, rename}});
  CHECK(validate_pi_institution(js).ok());

  SigTranslation rename_flex;
  rename_flex.kind = TranslationKind::flexible;
  rename_flex.flexible_map = {
      {"and", parse_formula("et(x1,x2)", renamed.signature, {"x1", "x2"})},
      {"not", parse_formula("non(x1)", renamed.signature, {"x1"})}};
  PiInstitution jf = build_logics_pi_institution(
      TranslationKind::flexible, {cpl, renamed}, {{0, 1, rename_flex}});
  CHECK(validate_pi_institution(jf).ok());

  PiInstitution single =
      build_logics_pi_institution(TranslationKind::strict, {cpl}, {});
  CHECK(single.sig.objects == IdSet{"L0"});
  CHECK(check_coherence(single).ok());

  // The inclusion comorphism from the strict diagram into the flexible one.
  Fn objs = {{"L0", "L0"}, {"L1", "L1"}};
  Fn mors;
  for (const auto& [m, arrow] : js.sig.morphisms) mors[m] = m;
  PiComorphism plus = build_plus_comorphism(js, jf, objs, mors);
  CHECK(check_pi_comorphism(plus, js, jf).ok());

  // Omitting a required arrow from the embedding is rejected.
  Fn missing = mors;
  missing.erase("t0");
  CHECK_THROWS_AS(build_plus_comorphism(js, jf, objs, missing),
                  NotASubcategory);
}

TEST_CASE("objects-only diagrams embed trivially") {
  LogicPresentation cpl = cpl1_presentation();
  PiInstitution js =
      build_logics_pi_institution(TranslationKind::strict, {cpl}, {});
  PiInstitution jf =
      build_logics_pi_institution(TranslationKind::flexible, {cpl}, {});
  Fn objs = {{"L0", "L0"}};
  Fn mors = {{"id_L0", "id_L0"}};
  PiComorphism plus = build_plus_comorphism(js, jf, objs, mors);
  CHECK(check_pi_comorphism(plus, js, jf).ok());
}

TEST_CASE("matrix consequence agrees with the institution-side closure") {
  LogicPresentation l = cpl1_presentation();
  PiInstitution via_matrix =
      build_logics_pi_institution(TranslationKind::strict, {l}, {});
  PiInstitution via_stars = F_object(build_matrix_institution(l));
  const IdSet& universe = via_matrix.sen.on_objects.at("L0");
  std::vector<Id> list(universe.begin(), universe.end());
  for (std::uint32_t mask = 0; mask < (1u << list.size()); ++mask) {
    SentSet gamma;
    for (std::size_t i = 0; i < list.size(); ++i)
      if (mask & (1u << i)) gamma.insert(list[i]);
    CHECK(closure_of(via_matrix, "L0", gamma) ==
          closure_of(via_stars, "L0", gamma));
  }
}

TEST_CASE("translation commutes with variable substitution on samples") {
  PropSignature and_sig = cpl2().signature;
  PropSignature or_sig = boolean_or(1, {"p", "q"}).signature;
  SigTranslation dm;
  dm.kind = TranslationKind::flexible;
  dm.flexible_map = {
      {"and", parse_formula("not(or(not(x1),not(x2)))", or_sig, {"x1", "x2"})},
      {"not", parse_formula("not(x1)", or_sig, {"x1"})}};

  // Substituting q for p and then translating equals translating and then
  // substituting, for every formula of depth up to 2.
  auto substitute = [](const Formula& f, const Formula& image) {
    auto rec = [&](auto&& self, const Formula& g) -> Formula {
      if (g.is_var) return g.name == "p" ? image : g;
      std::vector<Formula> kids;
      for (const auto& k : g.children) kids.push_back(self(self, k));
      return Formula::conn(g.name, kids);
    };
    return rec(rec, f);
  };
  Formula q = Formula::var("q");
  for (const auto& f : enumerate_formulas(and_sig, {"p"}, 2)) {
    CHECK(translate_formula(dm, substitute(f, q)) ==
          substitute(translate_formula(dm, f), q));
  }
}
