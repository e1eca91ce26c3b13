#include "instkit/proplogic.hpp"

#include <algorithm>
#include <cctype>
#include <memory>

namespace instkit {

int Formula::depth() const {
  if (is_var) return 0;
  int d = 0;
  for (const auto& c : children) d = std::max(d, c.depth());
  return children.empty() ? 1 : 1 + d;
}

bool Formula::operator<(const Formula& other) const {
  int da = depth(), db = other.depth();
  if (da != db) return da < db;
  return render_formula(*this) < render_formula(other);
}

namespace {

struct Parser {
  const std::string& text;
  const PropSignature& sig;
  const std::set<std::string>& variables;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw SyntaxError(what + " at position " + std::to_string(pos));
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected an identifier");
    return text.substr(start, pos - start);
  }

  Formula formula() {
    std::string name = ident();
    skip_ws();
    if (pos < text.size() && text[pos] == '(') {
      auto ci = sig.connectives.find(name);
      if (ci == sig.connectives.end())
        throw UnknownSymbol("unknown connective '" + name + "'");
      ++pos;
      std::vector<Formula> children;
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
      } else {
        while (true) {
          children.push_back(formula());
          skip_ws();
          if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
          }
          if (pos < text.size() && text[pos] == ')') {
            ++pos;
            break;
          }
          fail("expected ',' or ')'");
        }
      }
      if (static_cast<int>(children.size()) != ci->second)
        throw ArityMismatch("'" + name + "' expects " +
                            std::to_string(ci->second) + " arguments, got " +
                            std::to_string(children.size()));
      return Formula::conn(name, std::move(children));
    }
    if (variables.count(name)) return Formula::var(name);
    auto ci = sig.connectives.find(name);
    if (ci != sig.connectives.end()) {
      if (ci->second != 0)
        throw ArityMismatch("'" + name + "' expects " +
                            std::to_string(ci->second) + " arguments, got 0");
      return Formula::conn(name, {});
    }
    throw UnknownSymbol("unknown symbol '" + name + "'");
  }
};

}  // namespace

Formula parse_formula(const std::string& text, const PropSignature& sig,
                      const std::set<std::string>& variables) {
  Parser p{text, sig, variables};
  Formula f = p.formula();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

std::string render_formula(const Formula& f) {
  if (f.is_var || f.children.empty()) return f.name;
  std::string out = f.name + "(";
  for (std::size_t i = 0; i < f.children.size(); ++i) {
    if (i) out += ",";
    out += render_formula(f.children[i]);
  }
  return out + ")";
}

std::vector<Formula> enumerate_formulas(const PropSignature& sig,
                                        const std::vector<std::string>& variables,
                                        int depth_cap, std::size_t guard) {
  std::vector<std::vector<Formula>> exact(depth_cap + 1);
  for (const auto& v : variables) exact[0].push_back(Formula::var(v));
  std::sort(exact[0].begin(), exact[0].end());

  std::size_t total = exact[0].size();
  std::vector<Formula> cumulative = exact[0];

  for (int d = 1; d <= depth_cap; ++d) {
    std::vector<Formula> batch;
    for (const auto& [name, arity] : sig.connectives) {
      if (arity == 0) {
        if (d == 1) batch.push_back(Formula::conn(name, {}));
        continue;
      }
      std::vector<std::size_t> idx(arity, 0);
      while (true) {
        std::vector<Formula> children;
        int max_depth = 0;
        for (int k = 0; k < arity; ++k) {
          children.push_back(cumulative[idx[k]]);
          max_depth = std::max(max_depth, children.back().depth());
        }
        if (max_depth == d - 1) {
          batch.push_back(Formula::conn(name, std::move(children)));
          if (total + batch.size() > guard)
            throw ExplosionGuard("formula enumeration exceeds the bound");
        }
        int k = 0;
        for (; k < arity; ++k) {
          if (++idx[k] < cumulative.size()) break;
          idx[k] = 0;
        }
        if (k == arity) break;
      }
    }
    std::sort(batch.begin(), batch.end());
    total += batch.size();
    cumulative.insert(cumulative.end(), batch.begin(), batch.end());
    exact[d] = std::move(batch);
  }

  std::vector<Formula> out;
  for (auto& b : exact) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string eval_formula(const LogicMatrix& m,
                         const std::map<std::string, std::string>& valuation,
                         const Formula& f) {
  if (f.is_var) {
    auto it = valuation.find(f.name);
    if (it == valuation.end())
      throw UnassignedVariable("no value for variable '" + f.name + "'");
    return it->second;
  }
  auto ci = m.interp.find(f.name);
  if (ci == m.interp.end())
    throw UnknownSymbol("matrix does not interpret '" + f.name + "'");
  std::vector<std::string> args;
  for (const auto& c : f.children) args.push_back(eval_formula(m, valuation, c));
  auto vi = ci->second.find(args);
  if (vi == ci->second.end())
    throw MissingMapping("no interpretation entry for '" + f.name + "'");
  return vi->second;
}

std::vector<std::map<std::string, std::string>> all_valuations(
    const std::vector<std::string>& variables,
    const std::set<std::string>& values) {
  std::vector<std::string> vals(values.begin(), values.end());
  std::vector<std::map<std::string, std::string>> out;
  std::vector<std::size_t> idx(variables.size(), 0);
  while (true) {
    std::map<std::string, std::string> v;
    for (std::size_t i = 0; i < variables.size(); ++i)
      v[variables[i]] = vals[idx[i]];
    out.push_back(std::move(v));
    std::size_t k = 0;
    for (; k < variables.size(); ++k) {
      if (++idx[k] < vals.size()) break;
      idx[k] = 0;
    }
    if (k == variables.size()) break;
  }
  return out;
}

bool matrix_consequence(const LogicPresentation& l,
                        const std::vector<Formula>& gamma, const Formula& psi) {
  for (const auto& v : all_valuations(l.variables, l.matrix.values)) {
    bool premises = true;
    for (const auto& g : gamma)
      if (!l.matrix.designated.count(eval_formula(l.matrix, v, g))) {
        premises = false;
        break;
      }
    if (premises && !l.matrix.designated.count(eval_formula(l.matrix, v, psi)))
      return false;
  }
  return true;
}

namespace {

Formula substitute_markers(const Formula& image,
                           const std::vector<Formula>& args) {
  if (image.is_var) {
    if (image.name.size() > 1 && image.name[0] == 'x') {
      std::size_t k = 0;
      bool numeric = true;
      for (std::size_t i = 1; i < image.name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(image.name[i]))) {
          numeric = false;
          break;
        }
        k = k * 10 + (image.name[i] - '0');
      }
      if (numeric && k >= 1 && k <= args.size()) return args[k - 1];
    }
    return image;
  }
  std::vector<Formula> children;
  for (const auto& c : image.children)
    children.push_back(substitute_markers(c, args));
  return Formula::conn(image.name, std::move(children));
}

std::vector<Formula> markers(int arity) {
  std::vector<Formula> out;
  for (int i = 1; i <= arity; ++i)
    out.push_back(Formula::var("x" + std::to_string(i)));
  return out;
}

}  // namespace

Formula translate_formula(const SigTranslation& t, const Formula& f) {
  if (f.is_var) return f;
  std::vector<Formula> args;
  for (const auto& c : f.children) args.push_back(translate_formula(t, c));
  if (t.kind == TranslationKind::strict) {
    auto it = t.strict_map.find(f.name);
    if (it == t.strict_map.end())
      throw MissingMapping("translation undefined on '" + f.name + "'");
    return Formula::conn(it->second, std::move(args));
  }
  auto it = t.flexible_map.find(f.name);
  if (it == t.flexible_map.end())
    throw MissingMapping("translation undefined on '" + f.name + "'");
  return substitute_markers(it->second, args);
}

int translation_growth(const SigTranslation& t) {
  if (t.kind == TranslationKind::strict) return 1;
  int d = 1;
  for (const auto& [name, image] : t.flexible_map)
    d = std::max(d, image.depth());
  return d;
}

ValidationReport check_logic_morphism(const SigTranslation& t,
                                      const LogicPresentation& from,
                                      const LogicPresentation& to,
                                      std::size_t cap) {
  int growth = std::max(1, translation_growth(t));
  if (to.depth_cap < from.depth_cap * growth)
    throw DepthOverflow("target depth cap " + std::to_string(to.depth_cap) +
                        " below required " +
                        std::to_string(from.depth_cap * growth));

  std::vector<Formula> universe =
      enumerate_formulas(from.signature, from.variables, from.depth_cap);
  if (universe.size() > cap)
    throw UniverseTooLarge("source universe exceeds the enumeration cap");
  std::vector<Formula> translated;
  for (const auto& f : universe) translated.push_back(translate_formula(t, f));

  // Designation tables, one row per valuation.
  auto table = [](const LogicPresentation& l,
                  const std::vector<Formula>& fs) {
    std::vector<std::vector<bool>> rows;
    for (const auto& v : all_valuations(l.variables, l.matrix.values)) {
      std::vector<bool> row;
      for (const auto& f : fs)
        row.push_back(l.matrix.designated.count(eval_formula(l.matrix, v, f)) !=
                      0);
      rows.push_back(std::move(row));
    }
    return rows;
  };
  auto src_rows = table(from, universe);
  auto dst_rows = table(to, translated);

  auto entails = [](const std::vector<std::vector<bool>>& rows,
                    std::uint32_t gamma, std::size_t psi) {
    for (const auto& row : rows) {
      bool premises = true;
      for (std::size_t i = 0; i < row.size(); ++i)
        if ((gamma & (1u << i)) && !row[i]) {
          premises = false;
          break;
        }
      if (premises && !row[psi]) return false;
    }
    return true;
  };

  ValidationReport report;
  for (std::uint32_t gamma = 0; gamma < (1u << universe.size()); ++gamma)
    for (std::size_t psi = 0; psi < universe.size(); ++psi)
      if (entails(src_rows, gamma, psi) && !entails(dst_rows, gamma, psi)) {
        std::string label = "{";
        bool first = true;
        for (std::size_t i = 0; i < universe.size(); ++i)
          if (gamma & (1u << i)) {
            if (!first) label += ",";
            label += render_formula(universe[i]);
            first = false;
          }
        label += "}";
        report.add("logic-morphism", {label, render_formula(universe[psi])},
                   "consequence not preserved by the translation");
      }
  return report;
}

namespace {

std::string valuation_id(const std::vector<std::string>& variables,
                         const std::map<std::string, std::string>& v) {
  std::string out;
  for (const auto& x : variables) {
    if (!out.empty()) out += ",";
    out += x + "=" + v.at(x);
  }
  return out;
}

SigTranslation normalize_translation(const SigTranslation& t,
                                     const PropSignature& src) {
  SigTranslation out;
  out.kind = TranslationKind::flexible;
  for (const auto& [name, arity] : src.connectives) {
    if (t.kind == TranslationKind::strict) {
      auto it = t.strict_map.find(name);
      if (it == t.strict_map.end())
        throw MissingMapping("translation undefined on '" + name + "'");
      out.flexible_map[name] = Formula::conn(it->second, markers(arity));
    } else {
      auto it = t.flexible_map.find(name);
      if (it == t.flexible_map.end())
        throw MissingMapping("translation undefined on '" + name + "'");
      out.flexible_map[name] = it->second;
    }
  }
  return out;
}

SigTranslation identity_translation(const PropSignature& sig) {
  SigTranslation out;
  out.kind = TranslationKind::flexible;
  for (const auto& [name, arity] : sig.connectives)
    out.flexible_map[name] = Formula::conn(name, markers(arity));
  return out;
}

SigTranslation compose_translations(const SigTranslation& first,
                                    const SigTranslation& second) {
  SigTranslation out;
  out.kind = TranslationKind::flexible;
  for (const auto& [name, image] : first.flexible_map)
    out.flexible_map[name] = translate_formula(second, image);
  return out;
}

constexpr std::size_t kDiagramMorphismBound = 64;

// A finite diagram of logics: the category generated by the declared arrows,
// explicitly closed under composition, with the induced sentence functor.
struct LogicDiagram {
  FinCat sig;
  SetFunctor sen;
  std::vector<Id> object_ids;
  std::map<Id, std::size_t> object_index;
  std::map<Id, std::vector<Formula>> universes;
};

struct DiagramArrow {
  Id id;
  std::size_t src;
  std::size_t dst;
  SigTranslation translation;  // normalized flexible form
};

LogicDiagram build_logic_diagram(const std::vector<LogicPresentation>& logics,
                                 const std::vector<LogicArrow>& arrows) {
  LogicDiagram d;
  for (std::size_t i = 0; i < logics.size(); ++i) {
    Id o = "L" + std::to_string(i);
    d.object_ids.push_back(o);
    d.object_index[o] = i;
    d.sig.objects.insert(o);
    d.sig.identity[o] = "id_" + o;
  }

  std::vector<DiagramArrow> mors;
  for (std::size_t i = 0; i < logics.size(); ++i)
    mors.push_back({"id_L" + std::to_string(i), i, i,
                    identity_translation(logics[i].signature)});
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    if (arrows[k].src >= logics.size() || arrows[k].dst >= logics.size())
      throw DanglingReference("arrow endpoints out of range");
    mors.push_back({"t" + std::to_string(k), arrows[k].src, arrows[k].dst,
                    normalize_translation(arrows[k].translation,
                                          logics[arrows[k].src].signature)});
  }

  auto find_same = [&](std::size_t src, std::size_t dst,
                       const SigTranslation& t) -> const DiagramArrow* {
    for (const auto& m : mors)
      if (m.src == src && m.dst == dst &&
          m.translation.flexible_map == t.flexible_map)
        return &m;
    return nullptr;
  };

  std::map<std::pair<Id, Id>, Id> compose;
  std::size_t fresh = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < mors.size(); ++a)
      for (std::size_t b = 0; b < mors.size(); ++b) {
        if (mors[a].dst != mors[b].src) continue;
        if (compose.count({mors[a].id, mors[b].id})) continue;
        SigTranslation comp =
            compose_translations(mors[a].translation, mors[b].translation);
        const DiagramArrow* existing =
            find_same(mors[a].src, mors[b].dst, comp);
        if (!existing) {
          if (mors.size() >= kDiagramMorphismBound)
            throw ExplosionGuard("composition closure exceeds the bound");
          mors.push_back({"c" + std::to_string(fresh++), mors[a].src,
                          mors[b].dst, comp});
          existing = &mors.back();
        }
        compose[{mors[a].id, mors[b].id}] = existing->id;
        changed = true;
      }
  }

  for (const auto& m : mors)
    d.sig.morphisms[m.id] = {d.object_ids[m.src], d.object_ids[m.dst]};
  d.sig.compose = compose;

  d.sen.source = d.sig;
  for (std::size_t i = 0; i < logics.size(); ++i) {
    const Id& o = d.object_ids[i];
    d.universes[o] = enumerate_formulas(logics[i].signature,
                                        logics[i].variables,
                                        logics[i].depth_cap);
    for (const auto& f : d.universes[o])
      d.sen.on_objects[o].insert(render_formula(f));
  }
  for (const auto& m : mors) {
    Fn g;
    const Id& dst = d.object_ids[m.dst];
    for (const auto& f : d.universes.at(d.object_ids[m.src])) {
      std::string im = render_formula(translate_formula(m.translation, f));
      if (!d.sen.on_objects.at(dst).count(im))
        throw InvalidLogicMorphism("translated formula '" + im +
                                   "' outside the target universe");
      g[render_formula(f)] = im;
    }
    d.sen.on_morphisms[m.id] = g;
  }

  return d;
}

}  // namespace

Institution build_matrix_institution(const LogicPresentation& l) {
  return build_matrix_institution(std::vector<LogicPresentation>{l}, {});
}

Institution build_matrix_institution(const std::vector<LogicPresentation>& logics,
                                     const std::vector<LogicArrow>& arrows) {
  LogicDiagram d = build_logic_diagram(logics, arrows);

  Institution inst;
  inst.sig = d.sig;
  inst.sen = d.sen;

  std::map<Id, std::vector<std::map<std::string, std::string>>> vals;
  for (std::size_t i = 0; i < logics.size(); ++i) {
    const Id& o = d.object_ids[i];
    vals[o] = all_valuations(logics[i].variables, logics[i].matrix.values);
    for (const auto& v : vals[o]) {
      Id m = valuation_id(logics[i].variables, v);
      inst.mod_objects[o].insert(m);
      for (const auto& f : d.universes.at(o))
        if (logics[i].matrix.designated.count(
                eval_formula(logics[i].matrix, v, f)))
          inst.sat[o].insert({m, render_formula(f)});
    }
    if (!inst.sat.count(o)) inst.sat[o] = {};
  }

  // Reducts: valuation precomposition, i.e. restriction to the source
  // variables. Meaningful when the diagram's matrices share value sets.
  for (const auto& [mid, arrow] : d.sig.morphisms) {
    const LogicPresentation& src = logics[d.object_index.at(arrow.src)];
    Fn reduct;
    for (const auto& v : vals.at(arrow.dst)) {
      std::map<std::string, std::string> restricted;
      for (const auto& x : src.variables) {
        auto it = v.find(x);
        if (it == v.end())
          throw DanglingReference("variable '" + x +
                                  "' missing in the target valuation");
        restricted[x] = it->second;
      }
      reduct[valuation_id(logics[d.object_index.at(arrow.dst)].variables, v)] =
          valuation_id(src.variables, restricted);
    }
    inst.mod_reduct[mid] = reduct;
  }

  return inst;
}

PiInstitution build_logics_pi_institution(TranslationKind kind,
                                          const std::vector<LogicPresentation>& logics,
                                          const std::vector<LogicArrow>& arrows) {
  for (const auto& a : arrows) {
    if (kind == TranslationKind::strict &&
        a.translation.kind != TranslationKind::strict)
      throw InvalidLogicMorphism("flexible arrow in a strict diagram");
    ValidationReport r =
        check_logic_morphism(a.translation, logics[a.src], logics[a.dst]);
    if (!r.ok())
      throw InvalidLogicMorphism("declared translation is not a logic "
                                 "morphism (witness " +
                                 r.violations.front().witness.front() + ")");
  }

  LogicDiagram d = build_logic_diagram(logics, arrows);

  PiInstitution j;
  j.sig = d.sig;
  j.sen = d.sen;
  for (std::size_t i = 0; i < logics.size(); ++i) {
    const Id& o = d.object_ids[i];
    auto logic = std::make_shared<const LogicPresentation>(logics[i]);
    auto universe = std::make_shared<const std::vector<Formula>>(d.universes.at(o));
    j.closure[o] = [logic, universe](const SentSet& gamma) {
      std::vector<Formula> premises;
      std::map<std::string, Formula> by_text;
      for (const auto& f : *universe) by_text.emplace(render_formula(f), f);
      for (const auto& s : gamma) {
        auto it = by_text.find(s);
        if (it == by_text.end())
          throw SentenceOutOfUniverse("sentence '" + s +
                                      "' not in the universe");
        premises.push_back(it->second);
      }
      SentSet out;
      for (const auto& f : *universe)
        if (matrix_consequence(*logic, premises, f))
          out.insert(render_formula(f));
      return out;
    };
  }
  return j;
}

PiComorphism build_plus_comorphism(const PiInstitution& js,
                                   const PiInstitution& jf,
                                   const Fn& object_embedding,
                                   const Fn& morphism_embedding) {
  PiComorphism out;
  out.phi.source = js.sig;
  out.phi.target = jf.sig;
  for (const auto& o : js.sig.objects) {
    if (!object_embedding.count(o))
      throw NotASubcategory("object '" + o + "' has no image");
    out.phi.on_objects[o] = object_embedding.at(o);
  }
  for (const auto& [m, arrow] : js.sig.morphisms) {
    (void)arrow;
    if (!morphism_embedding.count(m))
      throw NotASubcategory("morphism '" + m + "' has no image");
    out.phi.on_morphisms[m] = morphism_embedding.at(m);
  }
  if (!check_functor(out.phi).ok())
    throw NotASubcategory("embedding is not a functor");
  for (const auto& o : js.sig.objects) {
    const Id& im = out.phi.on_objects.at(o);
    if (js.sen.on_objects.at(o) != jf.sen.on_objects.at(im))
      throw NotASubcategory("sentence universes differ at '" + o + "'");
    out.alpha[o] = identity_fn(js.sen.on_objects.at(o));
  }
  for (const auto& [m, arrow] : js.sig.morphisms) {
    (void)arrow;
    if (js.sen.on_morphisms.at(m) !=
        jf.sen.on_morphisms.at(out.phi.on_morphisms.at(m)))
      throw NotASubcategory("sentence maps differ at '" + m + "'");
  }
  return out;
}

LogicPresentation cpl1_presentation() {
  LogicPresentation l;
  l.signature.connectives = {{"not", 1}, {"and", 2}};
  l.matrix.values = {"F", "T"};
  l.matrix.designated = {"T"};
  l.matrix.interp["not"] = {{{"F"}, "T"}, {{"T"}, "F"}};
  l.matrix.interp["and"] = {{{"F", "F"}, "F"},
                            {{"F", "T"}, "F"},
                            {{"T", "F"}, "F"},
                            {{"T", "T"}, "T"}};
  l.variables = {"p"};
  l.depth_cap = 1;
  return l;
}

LogicPresentation luk3_presentation() {
  LogicPresentation l;
  l.signature.connectives = {{"not", 1}, {"imp", 2}};
  l.matrix.values = {"0", "half", "1"};
  l.matrix.designated = {"1"};
  l.matrix.interp["not"] = {{{"0"}, "1"}, {{"half"}, "half"}, {{"1"}, "0"}};
  // Lukasiewicz implication min(1, 1 - x + y).
  l.matrix.interp["imp"] = {
      {{"0", "0"}, "1"},       {{"0", "half"}, "1"},    {{"0", "1"}, "1"},
      {{"half", "0"}, "half"}, {{"half", "half"}, "1"}, {{"half", "1"}, "1"},
      {{"1", "0"}, "0"},       {{"1", "half"}, "half"}, {{"1", "1"}, "1"}};
  l.variables = {"p"};
  l.depth_cap = 1;
  return l;
}

}  // namespace instkit
