#include "instkit/io.hpp"

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

namespace instkit::io {

namespace {

json fn_to_json(const Fn& f) {
  json out = json::object();
  for (const auto& [x, y] : f) out[x] = y;
  return out;
}

Fn fn_from_json(const json& doc) {
  Fn out;
  for (const auto& [x, y] : doc.items()) out[x] = y.get<std::string>();
  return out;
}

json idset_to_json(const IdSet& s) {
  json out = json::array();
  for (const auto& x : s) out.push_back(x);
  return out;
}

IdSet idset_from_json(const json& doc) {
  IdSet out;
  for (const auto& x : doc) out.insert(x.get<std::string>());
  return out;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw ParseError(what);
}

void require_ref(bool cond, const std::string& what) {
  if (!cond) throw DanglingReference(what);
}

FinCat category_from_json(const json& doc) {
  FinCat c;
  require(doc.contains("objects") && doc.contains("morphisms"),
          "missing objects/morphisms");
  c.objects = idset_from_json(doc.at("objects"));
  for (const auto& m : doc.at("morphisms")) {
    Id id = m.at("id").get<std::string>();
    Id src = m.at("src").get<std::string>();
    Id dst = m.at("dst").get<std::string>();
    require_ref(c.objects.count(src), "morphism '" + id + "' src unknown");
    require_ref(c.objects.count(dst), "morphism '" + id + "' dst unknown");
    c.morphisms[id] = {src, dst};
  }
  for (const auto& [o, idm] : doc.at("identity").items()) {
    require_ref(c.objects.count(o), "identity for unknown object '" + o + "'");
    require_ref(c.morphisms.count(idm.get<std::string>()),
                "identity names unknown morphism");
    c.identity[o] = idm.get<std::string>();
  }
  if (doc.contains("compose"))
    for (const auto& triple : doc.at("compose")) {
      require(triple.size() == 3, "compose entries are triples");
      Id f = triple[0].get<std::string>();
      Id g = triple[1].get<std::string>();
      Id fg = triple[2].get<std::string>();
      require_ref(c.morphisms.count(f) && c.morphisms.count(g) &&
                      c.morphisms.count(fg),
                  "compose entry names an unknown morphism");
      c.compose[{f, g}] = fg;
    }
  return c;
}

json category_to_json(const FinCat& c) {
  json out;
  out["objects"] = idset_to_json(c.objects);
  json mors = json::array();
  for (const auto& [id, arrow] : c.morphisms)
    mors.push_back({{"id", id}, {"src", arrow.src}, {"dst", arrow.dst}});
  out["morphisms"] = mors;
  json ids = json::object();
  for (const auto& [o, idm] : c.identity) ids[o] = idm;
  out["identity"] = ids;
  json comp = json::array();
  for (const auto& [pair, fg] : c.compose)
    comp.push_back({pair.first, pair.second, fg});
  out["compose"] = comp;
  return out;
}

SetFunctor sen_from_json(const json& doc, const FinCat& sig) {
  SetFunctor sen;
  sen.source = sig;
  for (const auto& [o, elems] : doc.at("sen").items()) {
    require_ref(sig.objects.count(o), "sen at unknown object '" + o + "'");
    sen.on_objects[o] = idset_from_json(elems);
  }
  for (const auto& o : sig.objects)
    require(sen.on_objects.count(o), "sen missing at object '" + o + "'");
  if (doc.contains("senMap"))
    for (const auto& [m, fn] : doc.at("senMap").items()) {
      require_ref(sig.morphisms.count(m), "senMap at unknown morphism");
      sen.on_morphisms[m] = fn_from_json(fn);
    }
  // Unlisted identity morphisms default to identity functions.
  for (const auto& [o, idm] : sig.identity)
    if (!sen.on_morphisms.count(idm))
      sen.on_morphisms[idm] = identity_fn(sen.on_objects.at(o));
  for (const auto& [m, arrow] : sig.morphisms) {
    (void)arrow;
    require(sen.on_morphisms.count(m), "senMap missing at morphism '" + m + "'");
  }
  for (const auto& [m, fn] : sen.on_morphisms) {
    const auto& arrow = sig.morphisms.at(m);
    for (const auto& [x, y] : fn) {
      require_ref(sen.on_objects.at(arrow.src).count(x),
                  "senMap '" + m + "' domain element '" + x + "' unknown");
      require_ref(sen.on_objects.at(arrow.dst).count(y),
                  "senMap '" + m + "' value '" + y + "' unknown");
    }
  }
  return sen;
}

json sen_to_json(const SetFunctor& sen) {
  json out;
  json objs = json::object();
  for (const auto& [o, elems] : sen.on_objects) objs[o] = idset_to_json(elems);
  out["sen"] = objs;
  json maps = json::object();
  for (const auto& [m, fn] : sen.on_morphisms) maps[m] = fn_to_json(fn);
  out["senMap"] = maps;
  return out;
}

}  // namespace

Institution institution_from_json(const json& doc) {
  Institution inst;
  inst.sig = category_from_json(doc);
  inst.sen = sen_from_json(doc, inst.sig);
  for (const auto& [o, models] : doc.at("mod").items()) {
    require_ref(inst.sig.objects.count(o), "mod at unknown object '" + o + "'");
    inst.mod_objects[o] = idset_from_json(models);
  }
  for (const auto& o : inst.sig.objects)
    require(inst.mod_objects.count(o), "mod missing at object '" + o + "'");
  if (doc.contains("modOrder"))
    for (const auto& [o, pairs] : doc.at("modOrder").items()) {
      require_ref(inst.mod_objects.count(o), "modOrder at unknown object");
      for (const auto& p : pairs)
        inst.mod_order[o].insert(
            {p[0].get<std::string>(), p[1].get<std::string>()});
    }
  if (doc.contains("reduct"))
    for (const auto& [m, fn] : doc.at("reduct").items()) {
      require_ref(inst.sig.morphisms.count(m), "reduct at unknown morphism");
      inst.mod_reduct[m] = fn_from_json(fn);
    }
  for (const auto& [o, idm] : inst.sig.identity)
    if (!inst.mod_reduct.count(idm))
      inst.mod_reduct[idm] = identity_fn(inst.mod_objects.at(o));
  for (const auto& [o, pairs] : doc.at("sat").items()) {
    require_ref(inst.sig.objects.count(o), "sat at unknown object '" + o + "'");
    inst.sat[o] = {};
    for (const auto& p : pairs) {
      Id m = p[0].get<std::string>();
      Id s = p[1].get<std::string>();
      require_ref(inst.mod_objects.at(o).count(m),
                  "sat names unknown model '" + m + "'");
      require_ref(inst.sen.on_objects.at(o).count(s),
                  "sat names unknown sentence '" + s + "'");
      inst.sat[o].insert({m, s});
    }
  }
  for (const auto& o : inst.sig.objects)
    if (!inst.sat.count(o)) inst.sat[o] = {};
  return inst;
}

json institution_to_json(const Institution& inst) {
  json out = category_to_json(inst.sig);
  out.update(sen_to_json(inst.sen));
  json mod = json::object();
  for (const auto& [o, models] : inst.mod_objects)
    mod[o] = idset_to_json(models);
  out["mod"] = mod;
  bool any_order = false;
  json order = json::object();
  for (const auto& [o, pairs] : inst.mod_order) {
    if (pairs.empty()) continue;
    any_order = true;
    json arr = json::array();
    for (const auto& [a, b] : pairs) arr.push_back({a, b});
    order[o] = arr;
  }
  if (any_order) out["modOrder"] = order;
  json reduct = json::object();
  for (const auto& [m, fn] : inst.mod_reduct) reduct[m] = fn_to_json(fn);
  out["reduct"] = reduct;
  json sat = json::object();
  for (const auto& [o, pairs] : inst.sat) {
    json arr = json::array();
    for (const auto& [m, s] : pairs) arr.push_back({m, s});
    sat[o] = arr;
  }
  out["sat"] = sat;
  out["kind"] = "institution";
  return out;
}

PiInstitution pi_from_json(const json& doc) {
  const json& closure = doc.at("closure");
  if (closure.contains("matrixLogic")) {
    LogicPresentation l = logic_from_json(closure.at("matrixLogic"));
    return build_logics_pi_institution(TranslationKind::flexible, {l}, {});
  }

  PiInstitution j;
  j.sig = category_from_json(doc);
  j.sen = sen_from_json(doc, j.sig);
  const json& table = closure.at("table");
  for (const auto& o : j.sig.objects) {
    require(table.contains(o), "closure table missing at object '" + o + "'");
    auto entries = std::make_shared<std::map<std::string, SentSet>>();
    for (const auto& [key, val] : table.at(o).items())
      (*entries)[key] = idset_from_json(val);
    for (const auto& [key, val] : *entries)
      for (const auto& s : val)
        require_ref(j.sen.on_objects.at(o).count(s),
                    "closure value names unknown sentence '" + s + "'");
    j.closure[o] = [entries](const SentSet& gamma) {
      auto it = entries->find(theory_id(gamma));
      if (it == entries->end())
        throw MissingMapping("closure table has no entry for " +
                             theory_id(gamma));
      return it->second;
    };
  }
  return j;
}

json pi_to_json(const PiInstitution& j, std::size_t cap) {
  json out = category_to_json(j.sig);
  out.update(sen_to_json(j.sen));
  json table = json::object();
  for (const auto& o : j.sig.objects) {
    const IdSet& universe = j.sen.on_objects.at(o);
    if (universe.size() > cap)
      throw UniverseTooLarge("Sen(" + o + ") exceeds the enumeration cap");
    std::vector<Id> list(universe.begin(), universe.end());
    json entries = json::object();
    for (std::uint32_t mask = 0; mask < (1u << list.size()); ++mask) {
      SentSet gamma;
      for (std::size_t i = 0; i < list.size(); ++i)
        if (mask & (1u << i)) gamma.insert(list[i]);
      entries[theory_id(gamma)] = idset_to_json(closure_of(j, o, gamma));
    }
    table[o] = entries;
  }
  out["closure"] = {{"table", table}};
  out["kind"] = "pi-institution";
  return out;
}

json logic_to_json(const LogicPresentation& l) {
  json out;
  json sig = json::object();
  for (const auto& [name, arity] : l.signature.connectives) sig[name] = arity;
  out["signature"] = sig;
  json matrix;
  matrix["values"] = json::array();
  for (const auto& v : l.matrix.values) matrix["values"].push_back(v);
  matrix["designated"] = json::array();
  for (const auto& v : l.matrix.designated) matrix["designated"].push_back(v);
  json interp = json::object();
  for (const auto& [name, table] : l.matrix.interp) {
    json entries = json::array();
    for (const auto& [args, val] : table) entries.push_back({args, val});
    interp[name] = entries;
  }
  matrix["interp"] = interp;
  out["matrix"] = matrix;
  out["variables"] = l.variables;
  out["depthCap"] = l.depth_cap;
  out["kind"] = "logic";
  return out;
}

LogicPresentation logic_from_json(const json& doc) {
  LogicPresentation l;
  for (const auto& [name, arity] : doc.at("signature").items())
    l.signature.connectives[name] = arity.get<int>();
  const json& matrix = doc.at("matrix");
  for (const auto& v : matrix.at("values"))
    l.matrix.values.insert(v.get<std::string>());
  for (const auto& v : matrix.at("designated")) {
    Id val = v.get<std::string>();
    require_ref(l.matrix.values.count(val),
                "designated value '" + val + "' not a matrix value");
    l.matrix.designated.insert(val);
  }
  for (const auto& [name, entries] : matrix.at("interp").items()) {
    require_ref(l.signature.connectives.count(name),
                "interpretation of unknown connective '" + name + "'");
    for (const auto& e : entries) {
      std::vector<std::string> args = e[0].get<std::vector<std::string>>();
      l.matrix.interp[name][args] = e[1].get<std::string>();
    }
  }
  l.variables = doc.at("variables").get<std::vector<std::string>>();
  l.depth_cap = doc.at("depthCap").get<int>();
  return l;
}

json translation_to_json(const TranslationDoc& t) {
  json out;
  out["translationKind"] =
      t.kind == TranslationKind::strict ? "strict" : "flexible";
  json map = json::object();
  for (const auto& [name, image] : t.images) map[name] = image;
  out["map"] = map;
  out["kind"] = "translation";
  return out;
}

TranslationDoc translation_from_json(const json& doc) {
  TranslationDoc t;
  std::string kind = doc.at("translationKind").get<std::string>();
  if (kind == "strict")
    t.kind = TranslationKind::strict;
  else if (kind == "flexible")
    t.kind = TranslationKind::flexible;
  else
    throw ParseError("translationKind must be strict or flexible");
  for (const auto& [name, image] : doc.at("map").items())
    t.images[name] = image.get<std::string>();
  return t;
}

SigTranslation resolve_translation(const TranslationDoc& t,
                                   const PropSignature& source,
                                   const PropSignature& target) {
  SigTranslation out;
  out.kind = t.kind;
  for (const auto& [name, arity] : source.connectives) {
    auto it = t.images.find(name);
    if (it == t.images.end())
      throw MissingMapping("translation undefined on '" + name + "'");
    if (t.kind == TranslationKind::strict) {
      auto ti = target.connectives.find(it->second);
      if (ti == target.connectives.end())
        throw UnknownSymbol("strict image '" + it->second +
                            "' not a target connective");
      if (ti->second != arity)
        throw ArityMismatch("strict image '" + it->second +
                            "' changes the arity of '" + name + "'");
      out.strict_map[name] = it->second;
    } else {
      std::set<std::string> marks;
      for (int i = 1; i <= arity; ++i) marks.insert("x" + std::to_string(i));
      out.flexible_map[name] = parse_formula(it->second, target, marks);
    }
  }
  return out;
}

json inst_comorphism_to_json(const InstComorphismDoc& doc) {
  json out;
  out["kind"] = "inst-comorphism";
  out["source"] = institution_to_json(doc.source);
  out["target"] = institution_to_json(doc.target);
  out["phi"] = {{"objects", fn_to_json(doc.f.phi.on_objects)},
                {"morphisms", fn_to_json(doc.f.phi.on_morphisms)}};
  json alpha = json::object();
  for (const auto& [o, fn] : doc.f.alpha) alpha[o] = fn_to_json(fn);
  out["alpha"] = alpha;
  json beta = json::object();
  for (const auto& [o, fn] : doc.f.beta) beta[o] = fn_to_json(fn);
  out["beta"] = beta;
  return out;
}

InstComorphismDoc inst_comorphism_from_json(const json& doc) {
  InstComorphismDoc out;
  out.source = institution_from_json(doc.at("source"));
  out.target = institution_from_json(doc.at("target"));
  out.f.phi.source = out.source.sig;
  out.f.phi.target = out.target.sig;
  out.f.phi.on_objects = fn_from_json(doc.at("phi").at("objects"));
  out.f.phi.on_morphisms = fn_from_json(doc.at("phi").at("morphisms"));
  for (const auto& [o, fn] : doc.at("alpha").items())
    out.f.alpha[o] = fn_from_json(fn);
  for (const auto& [o, fn] : doc.at("beta").items())
    out.f.beta[o] = fn_from_json(fn);
  return out;
}

json inst_morphism_to_json(const InstMorphismDoc& doc) {
  json out;
  out["kind"] = "inst-morphism";
  out["source"] = institution_to_json(doc.source);
  out["target"] = institution_to_json(doc.target);
  out["phi"] = {{"objects", fn_to_json(doc.h.phi.on_objects)},
                {"morphisms", fn_to_json(doc.h.phi.on_morphisms)}};
  json alpha = json::object();
  for (const auto& [o, fn] : doc.h.alpha) alpha[o] = fn_to_json(fn);
  out["alpha"] = alpha;
  json beta = json::object();
  for (const auto& [o, fn] : doc.h.beta) beta[o] = fn_to_json(fn);
  out["beta"] = beta;
  return out;
}

InstMorphismDoc inst_morphism_from_json(const json& doc) {
  InstMorphismDoc out;
  out.source = institution_from_json(doc.at("source"));
  out.target = institution_from_json(doc.at("target"));
  out.h.phi.source = out.source.sig;
  out.h.phi.target = out.target.sig;
  out.h.phi.on_objects = fn_from_json(doc.at("phi").at("objects"));
  out.h.phi.on_morphisms = fn_from_json(doc.at("phi").at("morphisms"));
  for (const auto& [o, fn] : doc.at("alpha").items())
    out.h.alpha[o] = fn_from_json(fn);
  for (const auto& [o, fn] : doc.at("beta").items())
    out.h.beta[o] = fn_from_json(fn);
  return out;
}

json pi_comorphism_to_json(const PiComorphismDoc& doc, std::size_t cap) {
  json out;
  out["kind"] = "pi-comorphism";
  out["source"] = pi_to_json(doc.source, cap);
  out["target"] = pi_to_json(doc.target, cap);
  out["phi"] = {{"objects", fn_to_json(doc.g.phi.on_objects)},
                {"morphisms", fn_to_json(doc.g.phi.on_morphisms)}};
  json alpha = json::object();
  for (const auto& [o, fn] : doc.g.alpha) alpha[o] = fn_to_json(fn);
  out["alpha"] = alpha;
  return out;
}

PiComorphismDoc pi_comorphism_from_json(const json& doc) {
  PiComorphismDoc out;
  out.source = pi_from_json(doc.at("source"));
  out.target = pi_from_json(doc.at("target"));
  out.g.phi.source = out.source.sig;
  out.g.phi.target = out.target.sig;
  out.g.phi.on_objects = fn_from_json(doc.at("phi").at("objects"));
  out.g.phi.on_morphisms = fn_from_json(doc.at("phi").at("morphisms"));
  for (const auto& [o, fn] : doc.at("alpha").items())
    out.g.alpha[o] = fn_from_json(fn);
  return out;
}

Document document_from_json(const json& doc) {
  std::string kind = doc.value("kind", "");
  if (kind == "institution") return {kind, institution_from_json(doc)};
  if (kind == "pi-institution") return {kind, pi_from_json(doc)};
  if (kind == "inst-comorphism") return {kind, inst_comorphism_from_json(doc)};
  if (kind == "inst-morphism") return {kind, inst_morphism_from_json(doc)};
  if (kind == "pi-comorphism") return {kind, pi_comorphism_from_json(doc)};
  if (kind == "logic") return {kind, logic_from_json(doc)};
  if (kind == "translation") return {kind, translation_from_json(doc)};
  throw ParseError("unknown or missing document kind '" + kind + "'");
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  }
}

Document load_document(const std::string& path) {
  return document_from_json(load_json(path));
}

json report_to_json(const ValidationReport& report) {
  json out;
  out["status"] = status_name(report.status());
  json vs = json::array();
  for (const auto& v : report.violations)
    vs.push_back(
        {{"law", v.law}, {"witness", v.witness}, {"message", v.message}});
  out["violations"] = vs;
  return out;
}

ValidationReport report_from_json(const json& doc) {
  ValidationReport out;
  out.exhaustive = doc.at("status").get<std::string>() != "sampled";
  for (const auto& v : doc.at("violations"))
    out.add(v.at("law").get<std::string>(),
            v.at("witness").get<std::vector<std::string>>(),
            v.at("message").get<std::string>());
  return out;
}

std::string render_report(const ValidationReport& report, bool as_json) {
  if (as_json) return report_to_json(report).dump(2) + "\n";
  std::ostringstream out;
  switch (report.status()) {
    case ValidationReport::Status::pass:
      out << "PASS (0 violations)\n";
      break;
    case ValidationReport::Status::sampled:
      out << "SAMPLED (0 violations)\n";
      break;
    case ValidationReport::Status::fail:
      out << "FAIL (" << report.violations.size() << " violations)\n";
      break;
  }
  for (const auto& v : report.violations) {
    out << "  " << v.law << " [";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) out << ", ";
      out << v.witness[i];
    }
    out << "] " << v.message << "\n";
  }
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error("cannot write '" + tmp + "'");
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error("cannot rename '" + tmp + "' to '" + path + "'");
}

}  // namespace instkit::io
