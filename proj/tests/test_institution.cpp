#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "instkit/generator.hpp"
#include "instkit/institution.hpp"

using namespace instkit;
using fixtures::has_law;

TEST_CASE("validate_institution accepts the fixtures") {
  CHECK(validate_institution(fixtures::twoval()).ok());
  CHECK(validate_institution(fixtures::rename_fix()).ok());
}

TEST_CASE("satisfaction condition holds and flags a flipped entry") {
  Institution i = fixtures::rename_fix();
  CHECK(check_satisfaction_condition(i).ok());

  // Dropping (qT_rF, q) at S2 breaks the biconditional at (h, qT_rF, p).
  i.sat["S2"].erase({"qT_rF", "q"});
  ValidationReport r = check_satisfaction_condition(i);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].law == "satisfaction-condition");
  CHECK(r.violations[0].witness ==
        std::vector<std::string>{"h", "qT_rF", "p"});
}

TEST_CASE("validate_institution flags a reduct that breaks contravariance") {
  Institution i = fixtures::rename_fix();
  i.mod_reduct["id_S2"] = {{"qF_rF", "qF_rT"}, {"qF_rT", "qF_rF"},
                           {"qT_rF", "qT_rF"}, {"qT_rT", "qT_rT"}};
  CHECK_FALSE(validate_institution(i).ok());
}

TEST_CASE("identity comorphism passes; a wrong beta is witnessed") {
  Institution i = fixtures::twoval();
  InstComorphism id = identity_inst_comorphism(i);
  CHECK(check_inst_comorphism(id, i, i).ok());

  InstComorphism bad = id;
  bad.beta["S0"] = {{"m1", "m2"}, {"m2", "m2"}};
  ValidationReport r = check_inst_comorphism(bad, i, i);
  REQUIRE_FALSE(r.ok());
  CHECK(has_law(r, "compatibility"));
  CHECK(r.violations[0].witness == std::vector<std::string>{"S0", "m1", "b"});
}

TEST_CASE("institution morphisms: identity passes, wrong beta is witnessed") {
  Institution i = fixtures::twoval();
  InstMorphism id;
  id.phi = identity_functor(i.sig);
  id.alpha["S0"] = identity_fn(i.sen.on_objects.at("S0"));
  id.beta["S0"] = identity_fn(i.mod_objects.at("S0"));
  CHECK(check_inst_morphism(id, i, i).ok());

  InstMorphism bad = id;
  bad.beta["S0"] = {{"m1", "m1"}, {"m2", "m1"}};
  ValidationReport r = check_inst_morphism(bad, i, i);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].witness == std::vector<std::string>{"S0", "m2", "b"});
}

TEST_CASE("comorphism composition: unit laws and checker closure") {
  GeneratedComorphism g = random_comorphism(7);
  REQUIRE(check_inst_comorphism(g.f, g.from, g.to).ok());

  InstComorphism left =
      compose_inst_comorphisms(identity_inst_comorphism(g.from), g.f);
  InstComorphism right =
      compose_inst_comorphisms(g.f, identity_inst_comorphism(g.to));
  CHECK(left == g.f);
  CHECK(right == g.f);
  CHECK(check_inst_comorphism(left, g.from, g.to).ok());

  InstComorphism id = identity_inst_comorphism(g.from);
  CHECK(compose_inst_comorphisms(id, id) == id);
}

TEST_CASE("composition requires matching endpoints") {
  Institution a = fixtures::twoval();
  Institution b = fixtures::rename_fix();
  CHECK_THROWS_AS(
      compose_inst_comorphisms(identity_inst_comorphism(a),
                               identity_inst_comorphism(b)),
      DomainMismatch);
}

TEST_CASE("generated institutions always validate") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Institution i = random_institution(seed);
    CAPTURE(seed);
    CHECK(validate_institution(i).ok());
  }
}
