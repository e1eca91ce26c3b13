#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "instkit/adjunction.hpp"
#include "instkit/proplogic.hpp"

using namespace instkit;
using fixtures::has_law;

TEST_CASE("the unit is lawful and the closures agree everywhere") {
  CHECK(check_unit(F_object(fixtures::twoval())).ok());
  CHECK(check_unit(F_object(fixtures::rename_fix())).ok());
  CHECK(check_unit(fixtures::identity_closure_pi({"x", "y"})).ok());
}

TEST_CASE("the transpose of the identity is the theory map") {
  Institution i = fixtures::twoval();
  PiInstitution fi = F_object(i);
  InstComorphism eps = transpose(identity_pi_comorphism(fi), fi, i);
  CHECK(apply_fn(eps.beta.at("S0"), "m1") == theory_id({"a"}));
  CHECK(apply_fn(eps.beta.at("S0"), "m2") == theory_id({"a", "b"}));
  CHECK(check_inst_comorphism(eps, G_object(fi), i).ok());
  CHECK(eps == counit(i));
  // F of the transpose recovers the original pi-comorphism.
  CHECK(F_morphism_unchecked(eps) == identity_pi_comorphism(fi));
}

TEST_CASE("universal property: existence and uniqueness by enumeration") {
  Institution i = fixtures::twoval();
  PiInstitution fi = F_object(i);
  ValidationReport r =
      check_universal_property(identity_pi_comorphism(fi), fi, i);
  CHECK(r.ok());
  CHECK(r.status() == ValidationReport::Status::pass);
}

TEST_CASE("universal property flags an alpha admitting no beta") {
  // alpha sends a and b to sentences with different theories, so the model
  // m1 (which satisfies a but not b) has no admissible closed-theory image.
  Institution i = fixtures::twoval();
  PiInstitution j = F_object(i);
  PiComorphism h;
  h.phi = identity_functor(j.sig);
  h.alpha["S0"] = {{"a", "b"}, {"b", "a"}};
  ValidationReport r = check_universal_property(h, j, i);
  REQUIRE_FALSE(r.ok());
  CHECK(has_law(r, "no-transpose"));
}

TEST_CASE("F after G is the identity on pi-institutions") {
  CHECK(check_FG_identity(F_object(fixtures::twoval())).ok());
  CHECK(check_FG_identity(F_object(fixtures::rename_fix())).ok());
  CHECK(check_FG_identity(fixtures::identity_closure_pi({"x", "y"})).ok());
}

TEST_CASE("both triangle identities hold on fixtures") {
  Institution twoval = fixtures::twoval();
  Institution rename = fixtures::rename_fix();
  CHECK(check_triangle_F(twoval).ok());
  CHECK(check_triangle_F(rename).ok());
  CHECK(check_triangle_G(F_object(twoval)).ok());
  CHECK(check_triangle_G(F_object(rename)).ok());
  CHECK(check_triangle_G(fixtures::identity_closure_pi({"x"})).ok());
}

TEST_CASE("counit of a closed-theory institution is an isomorphism-like map") {
  // For I already of the form G(J), the counit's beta sends each closed
  // theory to the theory of its singleton model class, which is itself.
  Institution i = G_object(F_object(fixtures::twoval()));
  InstComorphism eps = counit(i);
  CHECK(check_inst_comorphism(eps, G_object(F_object(i)), i).ok());
  CHECK(check_triangle_F(i).ok());
}

TEST_CASE("triangle and unit checks on the propositional fixture") {
  Institution cpl1 = build_matrix_institution(cpl1_presentation());
  CHECK(check_triangle_F(cpl1).ok());
  CHECK(check_unit(F_object(cpl1)).ok());
  CHECK(check_FG_identity(F_object(cpl1)).ok());
}
