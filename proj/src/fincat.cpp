#include "instkit/fincat.hpp"

#include <algorithm>

namespace instkit {

bool FinCat::composable(const Id& f, const Id& g) const {
  auto fi = morphisms.find(f);
  auto gi = morphisms.find(g);
  if (fi == morphisms.end() || gi == morphisms.end()) return false;
  return fi->second.dst == gi->second.src;
}

const Id& apply_fn(const Fn& f, const Id& x) {
  auto it = f.find(x);
  if (it == f.end()) throw DanglingReference("function undefined on '" + x + "'");
  return it->second;
}

IdSet image(const Fn& f, const IdSet& xs) {
  IdSet out;
  for (const auto& x : xs) out.insert(apply_fn(f, x));
  return out;
}

IdSet preimage(const Fn& f, const IdSet& ys) {
  IdSet out;
  for (const auto& [x, y] : f)
    if (ys.count(y)) out.insert(x);
  return out;
}

Fn identity_fn(const IdSet& xs) {
  Fn out;
  for (const auto& x : xs) out[x] = x;
  return out;
}

Fn compose_fns(const Fn& f, const Fn& g) {
  Fn out;
  for (const auto& [x, y] : f) out[x] = apply_fn(g, y);
  return out;
}

Id compose_mor(const FinCat& c, const Id& f, const Id& g) {
  if (!c.composable(f, g))
    throw NotComposable("morphisms '" + f + "' and '" + g +
                        "' are not composable");
  auto it = c.compose.find({f, g});
  if (it == c.compose.end())
    throw NotComposable("composition table has no entry for ('" + f + "','" +
                        g + "')");
  return it->second;
}

FinFunctor identity_functor(const FinCat& c) {
  FinFunctor out;
  out.source = c;
  out.target = c;
  for (const auto& o : c.objects) out.on_objects[o] = o;
  for (const auto& [m, arrow] : c.morphisms) {
    (void)arrow;
    out.on_morphisms[m] = m;
  }
  return out;
}

FinFunctor compose_functors(const FinFunctor& f, const FinFunctor& g) {
  if (f.target != g.source)
    throw DomainMismatch("functor composition: target/source categories differ");
  FinFunctor out;
  out.source = f.source;
  out.target = g.target;
  out.on_objects = compose_fns(f.on_objects, g.on_objects);
  out.on_morphisms = compose_fns(f.on_morphisms, g.on_morphisms);
  return out;
}

SetFunctor precompose(const FinFunctor& phi, const SetFunctor& s) {
  SetFunctor out;
  out.source = phi.source;
  for (const auto& o : phi.source.objects) {
    const Id& im = apply_fn(phi.on_objects, o);
    auto it = s.on_objects.find(im);
    if (it == s.on_objects.end())
      throw DanglingReference("precompose: no object set at '" + im + "'");
    out.on_objects[o] = it->second;
  }
  for (const auto& [m, arrow] : phi.source.morphisms) {
    (void)arrow;
    const Id& im = apply_fn(phi.on_morphisms, m);
    auto it = s.on_morphisms.find(im);
    if (it == s.on_morphisms.end())
      throw DanglingReference("precompose: no function at morphism '" + im + "'");
    out.on_morphisms[m] = it->second;
  }
  return out;
}

ValidationReport check_category(const FinCat& c) {
  ValidationReport report;

  for (const auto& [m, arrow] : c.morphisms) {
    if (!c.objects.count(arrow.src))
      report.add("endpoints", {m, arrow.src},
                 "morphism source is not an object");
    if (!c.objects.count(arrow.dst))
      report.add("endpoints", {m, arrow.dst},
                 "morphism target is not an object");
  }

  for (const auto& o : c.objects) {
    auto it = c.identity.find(o);
    if (it == c.identity.end()) {
      report.add("identity-missing", {o}, "object has no identity morphism");
      continue;
    }
    auto mi = c.morphisms.find(it->second);
    if (mi == c.morphisms.end()) {
      report.add("identity-missing", {o, it->second},
                 "identity names an unknown morphism");
    } else if (mi->second.src != o || mi->second.dst != o) {
      report.add("identity-shape", {o, it->second},
                 "identity morphism is not an endomorphism of its object");
    }
  }

  // Composition table domain: exactly the composable pairs.
  for (const auto& [f, fa] : c.morphisms) {
    for (const auto& [g, ga] : c.morphisms) {
      bool comp = fa.dst == ga.src;
      auto it = c.compose.find({f, g});
      if (comp && it == c.compose.end()) {
        report.add("compose-total", {f, g},
                   "composable pair missing from the composition table");
      } else if (!comp && it != c.compose.end()) {
        report.add("compose-domain", {f, g},
                   "composition table entry for a non-composable pair");
      } else if (comp) {
        auto hi = c.morphisms.find(it->second);
        if (hi == c.morphisms.end()) {
          report.add("compose-endpoints", {f, g, it->second},
                     "composite names an unknown morphism");
        } else if (hi->second.src != fa.src || hi->second.dst != ga.dst) {
          report.add("compose-endpoints", {f, g, it->second},
                     "composite has wrong endpoints");
        }
      }
    }
  }

  if (!report.ok()) return report;  // law sweeps below assume a sane table

  for (const auto& [f, fa] : c.morphisms) {
    const Id& lid = c.identity.at(fa.src);
    const Id& rid = c.identity.at(fa.dst);
    if (c.compose.at({lid, f}) != f)
      report.add("left-identity", {f}, "compose(id, f) != f");
    if (c.compose.at({f, rid}) != f)
      report.add("right-identity", {f}, "compose(f, id) != f");
  }

  for (const auto& [f, fa] : c.morphisms)
    for (const auto& [g, ga] : c.morphisms) {
      if (fa.dst != ga.src) continue;
      for (const auto& [h, ha] : c.morphisms) {
        if (ga.dst != ha.src) continue;
        const Id& fg = c.compose.at({f, g});
        const Id& gh = c.compose.at({g, h});
        if (c.compose.at({fg, h}) != c.compose.at({f, gh}))
          report.add("associativity", {f, g, h},
                     "compose(compose(f,g),h) != compose(f,compose(g,h))");
      }
    }

  return report;
}

ValidationReport check_functor(const FinFunctor& f) {
  ValidationReport report;

  for (const auto& o : f.source.objects) {
    auto it = f.on_objects.find(o);
    if (it == f.on_objects.end())
      report.add("object-totality", {o}, "no image for object");
    else if (!f.target.objects.count(it->second))
      report.add("object-codomain", {o, it->second},
                 "object image is not a target object");
  }

  for (const auto& [m, arrow] : f.source.morphisms) {
    auto it = f.on_morphisms.find(m);
    if (it == f.on_morphisms.end()) {
      report.add("morphism-totality", {m}, "no image for morphism");
      continue;
    }
    auto ti = f.target.morphisms.find(it->second);
    if (ti == f.target.morphisms.end()) {
      report.add("morphism-codomain", {m, it->second},
                 "morphism image is not a target morphism");
      continue;
    }
    auto so = f.on_objects.find(arrow.src);
    auto to = f.on_objects.find(arrow.dst);
    if (so != f.on_objects.end() && ti->second.src != so->second)
      report.add("src-preservation", {m}, "image has wrong source");
    if (to != f.on_objects.end() && ti->second.dst != to->second)
      report.add("dst-preservation", {m}, "image has wrong target");
  }

  if (!report.ok()) return report;

  for (const auto& [o, idm] : f.source.identity) {
    const Id& im = f.on_morphisms.at(idm);
    if (im != f.target.identity.at(f.on_objects.at(o)))
      report.add("identity-preservation", {o, idm},
                 "identity not mapped to identity");
  }

  for (const auto& [pair, fg] : f.source.compose) {
    const auto& [a, b] = pair;
    const Id& ia = f.on_morphisms.at(a);
    const Id& ib = f.on_morphisms.at(b);
    auto it = f.target.compose.find({ia, ib});
    if (it == f.target.compose.end() || it->second != f.on_morphisms.at(fg))
      report.add("composition-preservation", {a, b},
                 "F(compose(a,b)) != compose(F(a),F(b))");
  }

  return report;
}

namespace {

// Checks that fn is a total function dom -> cod; appends violations.
void check_total_function(const Fn& fn, const IdSet& dom, const IdSet& cod,
                          const std::string& label, const Id& where,
                          ValidationReport& report) {
  for (const auto& x : dom)
    if (!fn.count(x))
      report.add(label + "-totality", {where, x}, "no value for element");
  for (const auto& [x, y] : fn) {
    if (!dom.count(x))
      report.add(label + "-domain", {where, x}, "graph entry outside domain");
    else if (!cod.count(y))
      report.add(label + "-codomain", {where, x, y},
                 "value outside codomain");
  }
}

}  // namespace

ValidationReport check_set_functor(const SetFunctor& s) {
  ValidationReport report;

  for (const auto& o : s.source.objects)
    if (!s.on_objects.count(o))
      report.add("object-totality", {o}, "no element set for object");

  for (const auto& [m, arrow] : s.source.morphisms) {
    auto it = s.on_morphisms.find(m);
    if (it == s.on_morphisms.end()) {
      report.add("morphism-totality", {m}, "no function for morphism");
      continue;
    }
    auto di = s.on_objects.find(arrow.src);
    auto ci = s.on_objects.find(arrow.dst);
    if (di == s.on_objects.end() || ci == s.on_objects.end()) continue;
    check_total_function(it->second, di->second, ci->second, "function", m,
                         report);
  }

  if (!report.ok()) return report;

  for (const auto& [o, idm] : s.source.identity) {
    if (s.on_morphisms.at(idm) != identity_fn(s.on_objects.at(o)))
      report.add("identity-law", {o, idm},
                 "image of identity is not the identity function");
  }

  for (const auto& [pair, fg] : s.source.compose) {
    const auto& [f, g] = pair;
    if (s.on_morphisms.at(fg) !=
        compose_fns(s.on_morphisms.at(f), s.on_morphisms.at(g)))
      report.add("composition-law", {f, g},
                 "S(compose(f,g)) != S(g) after S(f)");
  }

  return report;
}

ValidationReport check_naturality(const NatTransSet& n) {
  ValidationReport report;

  if (n.source_functor.source != n.target_functor.source) {
    report.add("base-category", {},
               "source and target functors live over different categories");
    return report;
  }
  const FinCat& base = n.source_functor.source;

  for (const auto& o : base.objects) {
    auto it = n.components.find(o);
    if (it == n.components.end()) {
      report.add("component-missing", {o}, "no component at object");
      continue;
    }
    check_total_function(it->second, n.source_functor.on_objects.at(o),
                         n.target_functor.on_objects.at(o), "component", o,
                         report);
  }

  if (!report.ok()) return report;

  for (const auto& [m, arrow] : base.morphisms) {
    const Fn& sf = n.source_functor.on_morphisms.at(m);
    const Fn& tf = n.target_functor.on_morphisms.at(m);
    const Fn& c1 = n.components.at(arrow.src);
    const Fn& c2 = n.components.at(arrow.dst);
    for (const auto& x : n.source_functor.on_objects.at(arrow.src)) {
      if (apply_fn(tf, apply_fn(c1, x)) != apply_fn(c2, apply_fn(sf, x)))
        report.add("naturality", {m, x}, "naturality square fails");
    }
  }

  return report;
}

}  // namespace instkit
