#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "instkit/report.hpp"

namespace instkit {

// Ids are opaque strings everywhere; equality is string equality.
using Id = std::string;
using IdSet = std::set<Id>;

// A total function between finite id sets, stored as its graph.
using Fn = std::map<Id, Id>;

struct MorArrow {
  Id src;
  Id dst;

  auto operator<=>(const MorArrow&) const = default;
};

// A finitely presented category: objects, morphisms with endpoints, chosen
// identities, and an explicit composition table in diagrammatic order
// (compose(f,g) = "f then g", defined exactly when dst(f) = src(g)).
struct FinCat {
  IdSet objects;
  std::map<Id, MorArrow> morphisms;
  std::map<Id, Id> identity;               // object -> identity morphism
  std::map<std::pair<Id, Id>, Id> compose; // (f,g) -> f;g

  bool has_morphism(const Id& m) const { return morphisms.count(m) != 0; }
  bool composable(const Id& f, const Id& g) const;

  auto operator<=>(const FinCat&) const = default;
};

// A functor into Set, presented over a finite source category.
struct SetFunctor {
  FinCat source;
  std::map<Id, IdSet> on_objects;
  std::map<Id, Fn> on_morphisms;

  auto operator<=>(const SetFunctor&) const = default;
};

struct FinFunctor {
  FinCat source;
  FinCat target;
  Fn on_objects;
  Fn on_morphisms;

  auto operator<=>(const FinFunctor&) const = default;
};

// A natural transformation between two set-valued functors over the same
// finite base category. A functor of shape Sen' ∘ φ is represented by
// precomposing first (see precompose below).
struct NatTransSet {
  SetFunctor source_functor;
  SetFunctor target_functor;
  std::map<Id, Fn> components;

  auto operator<=>(const NatTransSet&) const = default;
};

// Looks up f(x); throws DanglingReference when x is outside the graph.
const Id& apply_fn(const Fn& f, const Id& x);

// Image of a set under a total function.
IdSet image(const Fn& f, const IdSet& xs);

// Preimage of a set (no totality requirement on the target side).
IdSet preimage(const Fn& f, const IdSet& ys);

Fn identity_fn(const IdSet& xs);

// g ∘ f, i.e. x -> g(f(x)).
Fn compose_fns(const Fn& f, const Fn& g);

Id compose_mor(const FinCat& c, const Id& f, const Id& g);

FinFunctor identity_functor(const FinCat& c);

// Diagrammatic order: first f, then g.
FinFunctor compose_functors(const FinFunctor& f, const FinFunctor& g);

// The functor s ∘ phi, presented over phi's source category.
SetFunctor precompose(const FinFunctor& phi, const SetFunctor& s);

ValidationReport check_category(const FinCat& c);
ValidationReport check_functor(const FinFunctor& f);
ValidationReport check_set_functor(const SetFunctor& s);
ValidationReport check_naturality(const NatTransSet& n);

}  // namespace instkit
