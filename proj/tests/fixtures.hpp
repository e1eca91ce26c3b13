// Shared in-code fixtures mirrored by the JSON files under fixtures/.
#pragma once

#include <string>

#include "instkit/institution.hpp"
#include "instkit/pi_institution.hpp"
#include "instkit/report.hpp"

namespace fixtures {

inline std::string path(const std::string& name) {
  return std::string(INSTKIT_FIXTURE_DIR) + "/" + name;
}

inline bool has_law(const instkit::ValidationReport& r, const std::string& law) {
  for (const auto& v : r.violations)
    if (v.law == law) return true;
  return false;
}

// One object S0, sentences {a,b}, models {m1,m2}; m1 satisfies only a,
// m2 satisfies both.
inline instkit::Institution twoval() {
  using namespace instkit;
  Institution i;
  i.sig.objects = {"S0"};
  i.sig.morphisms["id_S0"] = {"S0", "S0"};
  i.sig.identity["S0"] = "id_S0";
  i.sig.compose[{"id_S0", "id_S0"}] = "id_S0";
  i.sen.source = i.sig;
  i.sen.on_objects["S0"] = {"a", "b"};
  i.sen.on_morphisms["id_S0"] = identity_fn(i.sen.on_objects["S0"]);
  i.mod_objects["S0"] = {"m1", "m2"};
  i.mod_reduct["id_S0"] = identity_fn(i.mod_objects["S0"]);
  i.sat["S0"] = {{"m1", "a"}, {"m2", "a"}, {"m2", "b"}};
  return i;
}

// Two objects S1, S2 with one arrow h renaming p to q; models are the
// valuations of the respective variable sets and the reduct restricts along
// the renaming.
inline instkit::Institution rename_fix() {
  using namespace instkit;
  Institution i;
  i.sig.objects = {"S1", "S2"};
  i.sig.morphisms["id_S1"] = {"S1", "S1"};
  i.sig.morphisms["id_S2"] = {"S2", "S2"};
  i.sig.morphisms["h"] = {"S1", "S2"};
  i.sig.identity["S1"] = "id_S1";
  i.sig.identity["S2"] = "id_S2";
  i.sig.compose[{"id_S1", "id_S1"}] = "id_S1";
  i.sig.compose[{"id_S2", "id_S2"}] = "id_S2";
  i.sig.compose[{"id_S1", "h"}] = "h";
  i.sig.compose[{"h", "id_S2"}] = "h";
  i.sen.source = i.sig;
  i.sen.on_objects["S1"] = {"p"};
  i.sen.on_objects["S2"] = {"q", "r"};
  i.sen.on_morphisms["id_S1"] = identity_fn(i.sen.on_objects["S1"]);
  i.sen.on_morphisms["id_S2"] = identity_fn(i.sen.on_objects["S2"]);
  i.sen.on_morphisms["h"] = {{"p", "q"}};
  i.mod_objects["S1"] = {"pF", "pT"};
  i.mod_objects["S2"] = {"qF_rF", "qF_rT", "qT_rF", "qT_rT"};
  i.mod_reduct["id_S1"] = identity_fn(i.mod_objects["S1"]);
  i.mod_reduct["id_S2"] = identity_fn(i.mod_objects["S2"]);
  i.mod_reduct["h"] = {{"qF_rF", "pF"}, {"qF_rT", "pF"},
                       {"qT_rF", "pT"}, {"qT_rT", "pT"}};
  i.sat["S1"] = {{"pT", "p"}};
  i.sat["S2"] = {{"qT_rF", "q"}, {"qT_rT", "q"}, {"qF_rT", "r"},
                 {"qT_rT", "r"}};
  return i;
}

// One-object pi-institution whose closure is the identity on the given
// universe (every set is closed).
inline instkit::PiInstitution identity_closure_pi(const instkit::IdSet& universe) {
  using namespace instkit;
  PiInstitution j;
  j.sig.objects = {"S0"};
  j.sig.morphisms["id_S0"] = {"S0", "S0"};
  j.sig.identity["S0"] = "id_S0";
  j.sig.compose[{"id_S0", "id_S0"}] = "id_S0";
  j.sen.source = j.sig;
  j.sen.on_objects["S0"] = universe;
  j.sen.on_morphisms["id_S0"] = identity_fn(universe);
  j.closure["S0"] = [](const SentSet& gamma) { return gamma; };
  return j;
}

// Same shape with a table-backed closure over universe {a,b}.
inline instkit::PiInstitution table_closure_pi(
    std::map<instkit::SentSet, instkit::SentSet> table) {
  using namespace instkit;
  IdSet universe;
  for (const auto& [k, v] : table)
    for (const auto& s : k) universe.insert(s);
  PiInstitution j = identity_closure_pi(universe);
  j.closure["S0"] = [table = std::move(table)](const SentSet& gamma) {
    return table.at(gamma);
  };
  return j;
}

}  // namespace fixtures
