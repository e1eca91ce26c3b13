#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "instkit/fincat.hpp"

using namespace instkit;
using fixtures::has_law;

TEST_CASE("check_category accepts lawful presentations") {
  CHECK(check_category(fixtures::twoval().sig).ok());
  CHECK(check_category(fixtures::rename_fix().sig).ok());
}

TEST_CASE("check_category flags a corrupted identity law") {
  // A second parallel arrow keeps endpoints consistent while breaking the
  // left identity law on h.
  FinCat c = fixtures::rename_fix().sig;
  c.morphisms["h2"] = {"S1", "S2"};
  c.compose[{"id_S1", "h2"}] = "h2";
  c.compose[{"h2", "id_S2"}] = "h2";
  c.compose[{"id_S1", "h"}] = "h2";
  ValidationReport r = check_category(c);
  CHECK_FALSE(r.ok());
  CHECK(has_law(r, "left-identity"));
}

TEST_CASE("compose_mor follows the table and rejects bad pairs") {
  FinCat c = fixtures::rename_fix().sig;
  CHECK(compose_mor(c, "id_S1", "h") == "h");
  CHECK(compose_mor(c, "h", "id_S2") == "h");
  CHECK_THROWS_AS(compose_mor(c, "h", "h"), NotComposable);
}

TEST_CASE("check_functor on identity, collapse, and corrupted functors") {
  FinCat rename = fixtures::rename_fix().sig;
  CHECK(check_functor(identity_functor(rename)).ok());

  FinCat point = fixtures::twoval().sig;
  FinFunctor collapse;
  collapse.source = rename;
  collapse.target = point;
  for (const auto& o : rename.objects) collapse.on_objects[o] = "S0";
  for (const auto& [m, arrow] : rename.morphisms)
    collapse.on_morphisms[m] = "id_S0";
  CHECK(check_functor(collapse).ok());

  FinFunctor bad = identity_functor(rename);
  bad.on_morphisms["h"] = "id_S2";  // src S2 but phi(src h) = S1
  ValidationReport r = check_functor(bad);
  CHECK_FALSE(r.ok());
  CHECK(has_law(r, "src-preservation"));
}

TEST_CASE("functor composition preserves lawfulness") {
  FinCat rename = fixtures::rename_fix().sig;
  FinFunctor id = identity_functor(rename);
  CHECK(check_functor(compose_functors(id, id)).ok());
}

TEST_CASE("check_set_functor on the renaming sentence functor") {
  Institution i = fixtures::rename_fix();
  CHECK(check_set_functor(i.sen).ok());
  CHECK(check_set_functor(fixtures::twoval().sen).ok());

  SetFunctor bad = i.sen;
  bad.on_morphisms["h"] = {{"p", "z"}};
  CHECK_FALSE(check_set_functor(bad).ok());
}

TEST_CASE("check_naturality accepts identity components and finds witnesses") {
  Institution i = fixtures::rename_fix();
  NatTransSet n;
  n.source_functor = i.sen;
  n.target_functor = i.sen;
  for (const auto& o : i.sig.objects)
    n.components[o] = identity_fn(i.sen.on_objects.at(o));
  CHECK(check_naturality(n).ok());

  // Sending p to r at S1's image breaks the square at (h, p).
  NatTransSet bad = n;
  bad.components["S1"] = {{"p", "p"}};
  bad.target_functor.on_morphisms["h"] = {{"p", "r"}};
  ValidationReport r = check_naturality(bad);
  CHECK_FALSE(r.ok());
  bool witnessed = false;
  for (const auto& v : r.violations)
    for (const auto& w : v.witness)
      if (w == "h") witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("helpers: image, preimage, apply_fn") {
  Fn f = {{"p", "q"}};
  CHECK(apply_fn(f, "p") == "q");
  CHECK_THROWS_AS(apply_fn(f, "missing"), DanglingReference);
  CHECK(image(f, {"p"}) == IdSet{"q"});
  CHECK(preimage(f, {"q"}) == IdSet{"p"});
  CHECK(preimage(f, {"r"}).empty());
}
