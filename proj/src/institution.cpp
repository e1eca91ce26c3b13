#include "instkit/institution.hpp"

namespace instkit {

ValidationReport check_satisfaction_condition(const Institution& inst) {
  ValidationReport report;

  for (const auto& [h, arrow] : inst.sig.morphisms) {
    auto ri = inst.mod_reduct.find(h);
    auto si = inst.sen.on_morphisms.find(h);
    if (ri == inst.mod_reduct.end() || si == inst.sen.on_morphisms.end())
      continue;  // missing data is reported by validate_institution
    const Fn& reduct = ri->second;
    const Fn& sen_h = si->second;
    for (const auto& model : inst.mod_objects.at(arrow.dst)) {
      const Id& reduced = apply_fn(reduct, model);
      for (const auto& phi : inst.sen.on_objects.at(arrow.src)) {
        bool lhs = inst.satisfies(arrow.dst, model, apply_fn(sen_h, phi));
        bool rhs = inst.satisfies(arrow.src, reduced, phi);
        if (lhs != rhs)
          report.add("satisfaction-condition", {h, model, phi},
                     "translated satisfaction disagrees with reduct");
      }
    }
  }

  return report;
}

namespace {

void check_reduct_laws(const Institution& inst, ValidationReport& report) {
  for (const auto& [h, arrow] : inst.sig.morphisms) {
    auto it = inst.mod_reduct.find(h);
    if (it == inst.mod_reduct.end()) {
      report.add("reduct-missing", {h}, "no reduct for morphism");
      continue;
    }
    for (const auto& m : inst.mod_objects.at(arrow.dst))
      if (!it->second.count(m))
        report.add("reduct-totality", {h, m}, "reduct undefined on model");
    for (const auto& [m, r] : it->second) {
      if (!inst.mod_objects.at(arrow.dst).count(m))
        report.add("reduct-domain", {h, m}, "reduct entry outside Mod(dst)");
      else if (!inst.mod_objects.at(arrow.src).count(r))
        report.add("reduct-codomain", {h, m, r},
                   "reduct value outside Mod(src)");
    }
  }
  if (!report.ok()) return;

  for (const auto& [o, idm] : inst.sig.identity) {
    if (inst.mod_reduct.at(idm) != identity_fn(inst.mod_objects.at(o)))
      report.add("contravariance", {idm},
                 "reduct of identity is not the identity");
  }

  // Contravariance: Mod(f;g) = Mod(f) after Mod(g).
  for (const auto& [pair, fg] : inst.sig.compose) {
    const auto& [f, g] = pair;
    if (inst.mod_reduct.at(fg) !=
        compose_fns(inst.mod_reduct.at(g), inst.mod_reduct.at(f)))
      report.add("contravariance", {f, g},
                 "reduct of composite disagrees with composed reducts");
  }
}

bool leq(const OrderRel& order, const Id& a, const Id& b) {
  return a == b || order.count({a, b}) != 0;
}

void check_order(const Institution& inst, ValidationReport& report) {
  for (const auto& [o, order] : inst.mod_order) {
    const IdSet& models = inst.mod_objects.at(o);
    for (const auto& [a, b] : order) {
      if (!models.count(a) || !models.count(b)) {
        report.add("order-elements", {o, a, b},
                   "order pair names an unknown model");
        continue;
      }
      if (a != b && order.count({b, a}))
        report.add("order-antisymmetry", {o, a, b},
                   "both (a,b) and (b,a) present");
      for (const auto& [c, d] : order)
        if (b == c && !leq(order, a, d))
          report.add("order-transitivity", {o, a, d},
                     "missing transitive pair");
    }
  }
  if (!report.ok()) return;

  for (const auto& [h, arrow] : inst.sig.morphisms) {
    auto oi = inst.mod_order.find(arrow.dst);
    if (oi == inst.mod_order.end()) continue;
    const OrderRel& src_order =
        inst.mod_order.count(arrow.src) ? inst.mod_order.at(arrow.src)
                                        : OrderRel{};
    const Fn& reduct = inst.mod_reduct.at(h);
    for (const auto& [a, b] : oi->second)
      if (!leq(src_order, apply_fn(reduct, a), apply_fn(reduct, b)))
        report.add("order-preservation", {h, a, b},
                   "reduct does not preserve the model order");
  }
}

void check_sat_references(const Institution& inst, ValidationReport& report) {
  for (const auto& [o, pairs] : inst.sat) {
    if (!inst.sig.objects.count(o)) {
      report.add("sat-signature", {o}, "satisfaction at unknown signature");
      continue;
    }
    for (const auto& [m, s] : pairs) {
      if (!inst.mod_objects.at(o).count(m))
        report.add("sat-model", {o, m}, "satisfaction names an unknown model");
      if (!inst.sen.on_objects.at(o).count(s))
        report.add("sat-sentence", {o, s},
                   "satisfaction names an unknown sentence");
    }
  }
}

}  // namespace

ValidationReport validate_institution(const Institution& inst) {
  ValidationReport report = check_category(inst.sig);
  if (inst.sen.source != inst.sig)
    report.add("sen-base", {}, "sentence functor is not over the signature");
  report.merge(check_set_functor(inst.sen));

  for (const auto& o : inst.sig.objects)
    if (!inst.mod_objects.count(o))
      report.add("mod-missing", {o}, "no model set for object");
  if (!report.ok()) return report;

  check_reduct_laws(inst, report);
  check_order(inst, report);
  check_sat_references(inst, report);
  if (!report.ok()) return report;

  report.merge(check_satisfaction_condition(inst));
  return report;
}

ValidationReport check_inst_comorphism(const InstComorphism& f,
                                       const Institution& from,
                                       const Institution& to) {
  ValidationReport report;
  if (f.phi.source != from.sig || f.phi.target != to.sig) {
    report.add("phi-endpoints", {},
               "phi does not run between the given signature categories");
    return report;
  }
  report.merge(check_functor(f.phi));
  if (!report.ok()) return report;

  NatTransSet alpha{from.sen, precompose(f.phi, to.sen), f.alpha};
  for (auto v : check_naturality(alpha).violations) {
    v.law = "alpha-" + v.law;
    report.violations.push_back(std::move(v));
  }

  for (const auto& o : from.sig.objects) {
    auto it = f.beta.find(o);
    if (it == f.beta.end()) {
      report.add("beta-missing", {o}, "no beta component at object");
      continue;
    }
    const Id& im = apply_fn(f.phi.on_objects, o);
    for (const auto& m : to.mod_objects.at(im))
      if (!it->second.count(m))
        report.add("beta-totality", {o, m}, "beta undefined on model");
    for (const auto& [m, r] : it->second)
      if (!from.mod_objects.at(o).count(r))
        report.add("beta-codomain", {o, m, r}, "beta value outside Mod");
  }
  if (!report.ok()) return report;

  // Naturality of beta: Mod(f) after beta_S2 equals beta_S1 after Mod'(phi f).
  for (const auto& [h, arrow] : from.sig.morphisms) {
    const Id& im = apply_fn(f.phi.on_morphisms, h);
    const Fn& reduct_from = from.mod_reduct.at(h);
    const Fn& reduct_to = to.mod_reduct.at(im);
    const Fn& b1 = f.beta.at(arrow.src);
    const Fn& b2 = f.beta.at(arrow.dst);
    for (const auto& m :
         to.mod_objects.at(apply_fn(f.phi.on_objects, arrow.dst))) {
      if (apply_fn(reduct_from, apply_fn(b2, m)) !=
          apply_fn(b1, apply_fn(reduct_to, m)))
        report.add("beta-naturality", {h, m}, "beta square fails");
    }
  }

  for (const auto& o : from.sig.objects) {
    const Id& im = apply_fn(f.phi.on_objects, o);
    const Fn& a = f.alpha.at(o);
    const Fn& b = f.beta.at(o);
    for (const auto& m : to.mod_objects.at(im))
      for (const auto& s : from.sen.on_objects.at(o)) {
        bool lhs = to.satisfies(im, m, apply_fn(a, s));
        bool rhs = from.satisfies(o, apply_fn(b, m), s);
        if (lhs != rhs)
          report.add("compatibility", {o, m, s},
                     "satisfaction biconditional fails");
      }
  }

  return report;
}

ValidationReport check_inst_morphism(const InstMorphism& h,
                                     const Institution& from,
                                     const Institution& to) {
  ValidationReport report;
  if (h.phi.source != from.sig || h.phi.target != to.sig) {
    report.add("phi-endpoints", {},
               "phi does not run between the given signature categories");
    return report;
  }
  report.merge(check_functor(h.phi));
  if (!report.ok()) return report;

  NatTransSet alpha{precompose(h.phi, to.sen), from.sen, h.alpha};
  for (auto v : check_naturality(alpha).violations) {
    v.law = "alpha-" + v.law;
    report.violations.push_back(std::move(v));
  }

  for (const auto& o : from.sig.objects) {
    auto it = h.beta.find(o);
    if (it == h.beta.end()) {
      report.add("beta-missing", {o}, "no beta component at object");
      continue;
    }
    const Id& im = apply_fn(h.phi.on_objects, o);
    for (const auto& m : from.mod_objects.at(o))
      if (!it->second.count(m))
        report.add("beta-totality", {o, m}, "beta undefined on model");
    for (const auto& [m, r] : it->second)
      if (!to.mod_objects.at(im).count(r))
        report.add("beta-codomain", {o, m, r}, "beta value outside Mod'");
  }
  if (!report.ok()) return report;

  for (const auto& [f, arrow] : from.sig.morphisms) {
    const Id& im = apply_fn(h.phi.on_morphisms, f);
    const Fn& reduct_from = from.mod_reduct.at(f);
    const Fn& reduct_to = to.mod_reduct.at(im);
    const Fn& b1 = h.beta.at(arrow.src);
    const Fn& b2 = h.beta.at(arrow.dst);
    for (const auto& m : from.mod_objects.at(arrow.dst)) {
      if (apply_fn(b1, apply_fn(reduct_from, m)) !=
          apply_fn(reduct_to, apply_fn(b2, m)))
        report.add("beta-naturality", {f, m}, "beta square fails");
    }
  }

  for (const auto& o : from.sig.objects) {
    const Id& im = apply_fn(h.phi.on_objects, o);
    const Fn& a = h.alpha.at(o);
    const Fn& b = h.beta.at(o);
    for (const auto& m : from.mod_objects.at(o))
      for (const auto& s : to.sen.on_objects.at(im)) {
        bool lhs = from.satisfies(o, m, apply_fn(a, s));
        bool rhs = to.satisfies(im, apply_fn(b, m), s);
        if (lhs != rhs)
          report.add("compatibility", {o, m, s},
                     "satisfaction biconditional fails");
      }
  }

  return report;
}

InstComorphism compose_inst_comorphisms(const InstComorphism& f,
                                        const InstComorphism& g) {
  if (f.phi.target != g.phi.source)
    throw DomainMismatch("comorphism composition: signatures do not line up");
  InstComorphism out;
  out.phi = compose_functors(f.phi, g.phi);
  for (const auto& o : f.phi.source.objects) {
    const Id& im = apply_fn(f.phi.on_objects, o);
    out.alpha[o] = compose_fns(f.alpha.at(o), g.alpha.at(im));
    out.beta[o] = compose_fns(g.beta.at(im), f.beta.at(o));
  }
  return out;
}

InstComorphism identity_inst_comorphism(const Institution& inst) {
  InstComorphism out;
  out.phi = identity_functor(inst.sig);
  for (const auto& o : inst.sig.objects) {
    out.alpha[o] = identity_fn(inst.sen.on_objects.at(o));
    out.beta[o] = identity_fn(inst.mod_objects.at(o));
  }
  return out;
}

}  // namespace instkit
