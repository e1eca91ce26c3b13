#include "instkit/g_functor.hpp"

#include <algorithm>

#include "json.hpp"

namespace instkit {

std::string theory_id(const SentSet& theory) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : theory) arr.push_back(s);
  return arr.dump();
}

SentSet theory_of_id(const std::string& id) {
  nlohmann::json arr = nlohmann::json::parse(id);
  SentSet out;
  for (const auto& s : arr) out.insert(s.get<std::string>());
  return out;
}

Institution G_object(const PiInstitution& j, std::size_t cap) {
  Institution out;
  out.sig = j.sig;
  out.sen = j.sen;

  std::map<Id, std::vector<SentSet>> theories;
  for (const auto& sigma : j.sig.objects) {
    theories[sigma] = closed_sets(j, sigma, cap);
    IdSet& models = out.mod_objects[sigma];
    OrderRel& order = out.mod_order[sigma];
    for (const auto& t : theories[sigma]) {
      Id m = theory_id(t);
      models.insert(m);
      for (const auto& s : t) out.sat[sigma].insert({m, s});
    }
    if (!out.sat.count(sigma)) out.sat[sigma] = {};
    for (const auto& a : theories[sigma])
      for (const auto& b : theories[sigma])
        if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end()))
          order.insert({theory_id(a), theory_id(b)});
  }

  for (const auto& [f, arrow] : j.sig.morphisms) {
    const Fn& sen_f = j.sen.on_morphisms.at(f);
    Fn reduct;
    for (const auto& t : theories.at(arrow.dst))
      reduct[theory_id(t)] = theory_id(preimage(sen_f, t));
    out.mod_reduct[f] = reduct;
  }

  return out;
}

ValidationReport check_preimage_closed(const PiInstitution& j, const Id& f,
                                       std::size_t cap) {
  ValidationReport report;
  auto mi = j.sig.morphisms.find(f);
  if (mi == j.sig.morphisms.end()) {
    report.add("unknown-morphism", {f}, "morphism not in the signature");
    return report;
  }
  const Fn& sen_f = j.sen.on_morphisms.at(f);
  for (const auto& t : closed_sets(j, mi->second.dst, cap)) {
    SentSet pre = preimage(sen_f, t);
    SentSet closed = closure_of(j, mi->second.src, pre);
    for (const auto& s : closed)
      if (!pre.count(s))
        report.add("preimage-closed", {f, theory_id(t), s},
                   "closure of a theory preimage escapes the preimage");
  }
  return report;
}

InstComorphism G_morphism_unchecked(const PiComorphism& h,
                                    const PiInstitution& from,
                                    const PiInstitution& to,
                                    std::size_t cap) {
  InstComorphism out;
  out.phi = h.phi;
  out.alpha = h.alpha;
  for (const auto& sigma : from.sig.objects) {
    const Id& im = apply_fn(h.phi.on_objects, sigma);
    const Fn& a = h.alpha.at(sigma);
    Fn b;
    for (const auto& t : closed_sets(to, im, cap))
      b[theory_id(t)] = theory_id(preimage(a, t));
    out.beta[sigma] = b;
  }
  return out;
}

InstComorphism G_morphism(const PiComorphism& h, const PiInstitution& from,
                          const PiInstitution& to, std::size_t cap) {
  ValidationReport report = check_pi_comorphism(h, from, to, cap);
  if (!report.ok())
    throw InvalidComorphism("G applied to a pi-comorphism failing its checker (" +
                            report.violations.front().law + ")");
  return G_morphism_unchecked(h, from, to, cap);
}

}  // namespace instkit
