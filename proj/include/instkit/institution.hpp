#pragma once

#include <map>
#include <set>
#include <utility>

#include "instkit/fincat.hpp"

namespace instkit {

using SatPair = std::pair<Id, Id>;  // (model, sentence)
using OrderRel = std::set<std::pair<Id, Id>>;  // pairs (a,b) meaning a <= b

// An institution over a finite signature category: sentence functor,
// contravariant model data (finite sets with an optional partial order),
// and an explicit satisfaction matrix per signature.
struct Institution {
  FinCat sig;
  SetFunctor sen;  // over sig
  std::map<Id, IdSet> mod_objects;
  std::map<Id, OrderRel> mod_order;  // absent/empty entries mean discrete
  std::map<Id, Fn> mod_reduct;  // h: S -> S'  |->  Mod(S') -> Mod(S)
  std::map<Id, std::set<SatPair>> sat;

  bool satisfies(const Id& sigma, const Id& model, const Id& sentence) const {
    auto it = sat.find(sigma);
    return it != sat.end() && it->second.count({model, sentence}) != 0;
  }

  auto operator<=>(const Institution&) const = default;
};

// Comorphism ⟨φ, α, β⟩ : I -> I'. alpha goes forward on sentences,
// beta backward on models (beta_S : Mod'(φ(S)) -> Mod(S)).
struct InstComorphism {
  FinFunctor phi;
  std::map<Id, Fn> alpha;
  std::map<Id, Fn> beta;

  auto operator<=>(const InstComorphism&) const = default;
};

// Morphism ⟨Φ, α, β⟩ : I -> I' with both directions reversed relative to a
// comorphism: alpha_S : Sen'(Φ(S)) -> Sen(S), beta_S : Mod(S) -> Mod'(Φ(S)).
struct InstMorphism {
  FinFunctor phi;
  std::map<Id, Fn> alpha;
  std::map<Id, Fn> beta;

  auto operator<=>(const InstMorphism&) const = default;
};

ValidationReport check_satisfaction_condition(const Institution& inst);

// Category + sentence functor + contravariant reduct laws + model order
// sanity + satisfaction condition, concatenated.
ValidationReport validate_institution(const Institution& inst);

ValidationReport check_inst_comorphism(const InstComorphism& f,
                                       const Institution& from,
                                       const Institution& to);

ValidationReport check_inst_morphism(const InstMorphism& h,
                                     const Institution& from,
                                     const Institution& to);

InstComorphism compose_inst_comorphisms(const InstComorphism& f,
                                        const InstComorphism& g);

InstComorphism identity_inst_comorphism(const Institution& inst);

}  // namespace instkit
