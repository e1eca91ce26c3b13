#include "instkit/generator.hpp"

#include <random>
#include <vector>

namespace instkit {

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

FinCat chain_category(std::size_t n) {
  FinCat c;
  std::vector<Id> objs;
  for (std::size_t i = 0; i < n; ++i) {
    Id o = "S" + std::to_string(i);
    objs.push_back(o);
    c.objects.insert(o);
    Id idm = "id_" + o;
    c.morphisms[idm] = {o, o};
    c.identity[o] = idm;
  }
  // One generating arrow per consecutive pair, plus all composites.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      c.morphisms["h" + std::to_string(i) + std::to_string(k)] = {objs[i],
                                                                  objs[k]};
  for (const auto& [f, fa] : c.morphisms)
    for (const auto& [g, ga] : c.morphisms) {
      if (fa.dst != ga.src) continue;
      if (f == c.identity.at(fa.src)) {
        c.compose[{f, g}] = g;
      } else if (g == c.identity.at(ga.dst)) {
        c.compose[{f, g}] = f;
      } else {
        Id src_idx = fa.src.substr(1);
        Id dst_idx = ga.dst.substr(1);
        c.compose[{f, g}] = "h" + src_idx + dst_idx;
      }
    }
  return c;
}

}  // namespace

Institution random_institution(std::uint64_t seed) {
  Rng rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  std::size_t n = pick(rng, 1, 3);

  Institution inst;
  inst.sig = chain_category(n);
  inst.sen.source = inst.sig;

  std::vector<Id> objs;
  for (std::size_t i = 0; i < n; ++i) objs.push_back("S" + std::to_string(i));

  // Models per object, and reducts along the generating arrows.
  std::map<Id, std::vector<Id>> models;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t count = pick(rng, 1, 4);
    for (std::size_t k = 0; k < count; ++k) {
      Id m = "m" + std::to_string(i) + "_" + std::to_string(k);
      models[objs[i]].push_back(m);
      inst.mod_objects[objs[i]].insert(m);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    inst.mod_reduct["id_" + objs[i]] =
        identity_fn(inst.mod_objects.at(objs[i]));
  std::map<Id, Fn> step_reduct;  // h(i)(i+1) -> Mod(S(i+1)) -> Mod(S(i))
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Fn r;
    for (const auto& m : models.at(objs[i + 1]))
      r[m] = models.at(objs[i])[pick(rng, 0, models.at(objs[i]).size() - 1)];
    Id h = "h" + std::to_string(i) + std::to_string(i + 1);
    step_reduct[h] = r;
    inst.mod_reduct[h] = r;
  }
  if (n == 3)
    inst.mod_reduct["h02"] =
        compose_fns(inst.mod_reduct.at("h12"), inst.mod_reduct.at("h01"));

  // Truth sets: free at S0, then propagated forward as reduct preimages so
  // the satisfaction condition holds by construction. Sentences at each
  // later object are one representative per distinct propagated truth set,
  // plus random extras while room remains.
  std::map<Id, std::map<Id, IdSet>> truth;  // object -> sentence -> models
  auto random_truth = [&](const Id& obj) {
    IdSet t;
    for (const auto& m : models.at(obj))
      if (pick(rng, 0, 1)) t.insert(m);
    return t;
  };

  std::size_t s0_count = pick(rng, 1, 4);
  for (std::size_t k = 0; k < s0_count; ++k)
    truth[objs[0]]["s0_" + std::to_string(k)] = random_truth(objs[0]);

  std::map<Id, Fn> step_sen;  // generating arrow -> sentence map
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Id h = "h" + std::to_string(i) + std::to_string(i + 1);
    const Fn& r = step_reduct.at(h);
    std::map<IdSet, Id> by_truth;
    Fn sen_map;
    std::size_t fresh = 0;
    for (const auto& [s, t] : truth.at(objs[i])) {
      IdSet forced = preimage(r, t);
      auto it = by_truth.find(forced);
      if (it == by_truth.end()) {
        Id name = "s" + std::to_string(i + 1) + "_" + std::to_string(fresh++);
        by_truth[forced] = name;
        truth[objs[i + 1]][name] = forced;
        it = by_truth.find(forced);
      }
      sen_map[s] = it->second;
    }
    while (truth.at(objs[i + 1]).size() < 4 && pick(rng, 0, 1)) {
      IdSet t = random_truth(objs[i + 1]);
      if (by_truth.count(t)) break;
      Id name = "s" + std::to_string(i + 1) + "_" + std::to_string(fresh++);
      by_truth[t] = name;
      truth[objs[i + 1]][name] = t;
    }
    step_sen[h] = sen_map;
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [s, t] : truth.at(objs[i])) {
      inst.sen.on_objects[objs[i]].insert(s);
      for (const auto& m : t) inst.sat[objs[i]].insert({m, s});
    }
    if (!inst.sat.count(objs[i])) inst.sat[objs[i]] = {};
    inst.sen.on_morphisms["id_" + objs[i]] =
        identity_fn(inst.sen.on_objects.at(objs[i]));
  }
  for (const auto& [h, sen_map] : step_sen) inst.sen.on_morphisms[h] = sen_map;
  if (n == 3)
    inst.sen.on_morphisms["h02"] = compose_fns(
        inst.sen.on_morphisms.at("h01"), inst.sen.on_morphisms.at("h12"));

  return inst;
}

GeneratedComorphism random_comorphism(std::uint64_t seed) {
  Rng rng(seed * 0xd1342543de82ef95ULL + 7);
  Institution to = random_institution(seed ^ 0x5851f42d4c957f2dULL);

  GeneratedComorphism out;
  out.to = to;

  if (pick(rng, 0, 3) == 0 && to.sig.objects.size() > 1) {
    // Recipe: restrict to the first object; phi is the full-subcategory
    // inclusion on it.
    Id target_obj = *to.sig.objects.begin();
    Institution from;
    from.sig.objects = {"A0"};
    from.sig.morphisms["id_A0"] = {"A0", "A0"};
    from.sig.identity["A0"] = "id_A0";
    from.sig.compose[{"id_A0", "id_A0"}] = "id_A0";
    from.sen.source = from.sig;
    from.sen.on_objects["A0"] = to.sen.on_objects.at(target_obj);
    from.sen.on_morphisms["id_A0"] = identity_fn(from.sen.on_objects["A0"]);
    from.mod_objects["A0"] = to.mod_objects.at(target_obj);
    from.mod_reduct["id_A0"] = identity_fn(from.mod_objects["A0"]);
    from.sat["A0"] = to.sat.at(target_obj);

    InstComorphism f;
    f.phi.source = from.sig;
    f.phi.target = to.sig;
    f.phi.on_objects["A0"] = target_obj;
    f.phi.on_morphisms["id_A0"] = to.sig.identity.at(target_obj);
    f.alpha["A0"] = identity_fn(from.sen.on_objects.at("A0"));
    f.beta["A0"] = identity_fn(from.mod_objects.at("A0"));
    out.from = from;
    out.f = f;
    return out;
  }

  // Recipe: sub-institution of `to` under renamed sentence ids. Pick a
  // random sentence subset per object and close it forward under the
  // sentence maps so the restricted functor stays well defined.
  std::map<Id, IdSet> chosen;
  for (const auto& o : to.sig.objects) {
    IdSet sub;
    for (const auto& s : to.sen.on_objects.at(o))
      if (pick(rng, 0, 1)) sub.insert(s);
    if (sub.empty() && !to.sen.on_objects.at(o).empty())
      sub.insert(*to.sen.on_objects.at(o).begin());
    chosen[o] = sub;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [h, arrow] : to.sig.morphisms) {
      const Fn& sen_h = to.sen.on_morphisms.at(h);
      for (const auto& s : chosen.at(arrow.src)) {
        const Id& im = apply_fn(sen_h, s);
        if (!chosen.at(arrow.dst).count(im)) {
          chosen[arrow.dst].insert(im);
          changed = true;
        }
      }
    }
  }

  auto renamed = [](const Id& s) { return "u_" + s; };

  Institution from;
  from.sig = to.sig;
  from.sen.source = to.sig;
  from.mod_objects = to.mod_objects;
  from.mod_reduct = to.mod_reduct;
  InstComorphism f;
  f.phi = identity_functor(to.sig);
  for (const auto& o : to.sig.objects) {
    Fn a;
    for (const auto& s : chosen.at(o)) {
      from.sen.on_objects[o].insert(renamed(s));
      a[renamed(s)] = s;
    }
    f.alpha[o] = a;
    from.sat[o] = {};
    for (const auto& [m, s] : to.sat.at(o))
      if (chosen.at(o).count(s)) from.sat[o].insert({m, renamed(s)});
  }
  for (const auto& [h, arrow] : to.sig.morphisms) {
    Fn g;
    for (const auto& s : chosen.at(arrow.src))
      g[renamed(s)] = renamed(apply_fn(to.sen.on_morphisms.at(h), s));
    from.sen.on_morphisms[h] = g;
  }

  // Beta candidates: any model whose restricted theory matches. Try a few
  // random natural choices, fall back to the identity (always valid here).
  auto truth_equivalent = [&](const Id& o, const Id& m) {
    std::vector<Id> candidates;
    for (const auto& cand : to.mod_objects.at(o)) {
      bool same = true;
      for (const auto& s : chosen.at(o))
        if (to.satisfies(o, cand, s) != to.satisfies(o, m, s)) {
          same = false;
          break;
        }
      if (same) candidates.push_back(cand);
    }
    return candidates;
  };

  for (int attempt = 0; attempt < 8; ++attempt) {
    InstComorphism trial = f;
    for (const auto& o : to.sig.objects) {
      Fn b;
      for (const auto& m : to.mod_objects.at(o)) {
        auto candidates = truth_equivalent(o, m);
        b[m] = candidates[pick(rng, 0, candidates.size() - 1)];
      }
      trial.beta[o] = b;
    }
    if (check_inst_comorphism(trial, from, to).ok()) {
      out.from = from;
      out.f = trial;
      return out;
    }
  }

  for (const auto& o : to.sig.objects)
    f.beta[o] = identity_fn(to.mod_objects.at(o));
  out.from = from;
  out.f = f;
  return out;
}

}  // namespace instkit
