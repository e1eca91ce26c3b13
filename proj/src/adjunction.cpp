#include "instkit/adjunction.hpp"

#include <algorithm>
#include <vector>

namespace instkit {

namespace {

std::string set_label(const SentSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& x : s) {
    if (!first) out += ",";
    out += x;
    first = false;
  }
  return out + "}";
}

std::vector<SentSet> all_subsets(const IdSet& universe, std::size_t cap,
                                 const Id& where) {
  if (universe.size() > cap)
    throw UniverseTooLarge("Sen(" + where + ") exceeds the enumeration cap");
  std::vector<Id> list(universe.begin(), universe.end());
  std::vector<SentSet> out;
  for (std::uint32_t mask = 0; mask < (1u << list.size()); ++mask) {
    SentSet s;
    for (std::size_t i = 0; i < list.size(); ++i)
      if (mask & (1u << i)) s.insert(list[i]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

PiComorphism unit(const PiInstitution& j) {
  return identity_pi_comorphism(j);
}

ValidationReport check_unit(const PiInstitution& j, std::size_t cap) {
  Institution gj = G_object(j, cap);
  PiInstitution fgj = F_object(gj);
  ValidationReport report = check_pi_comorphism(unit(j), j, fgj, cap);
  for (const auto& sigma : j.sig.objects) {
    for (const auto& gamma :
         all_subsets(j.sen.on_objects.at(sigma), cap, sigma)) {
      if (closure_of(j, sigma, gamma) != closure_of(fgj, sigma, gamma))
        report.add("unit-closure-agreement", {sigma, set_label(gamma)},
                   "C and C^{G(J)} disagree");
    }
  }
  return report;
}

InstComorphism transpose(const PiComorphism& h, const PiInstitution& j,
                         const Institution& i, std::size_t) {
  InstComorphism out;
  out.phi = h.phi;
  out.alpha = h.alpha;
  for (const auto& sigma : j.sig.objects) {
    const Id& im = apply_fn(h.phi.on_objects, sigma);
    const Fn& a = h.alpha.at(sigma);
    Fn b;
    for (const auto& m : i.mod_objects.at(im))
      b[m] = theory_id(preimage(a, models_star(i, im, {m})));
    out.beta[sigma] = b;
  }
  return out;
}

ValidationReport check_universal_property(const PiComorphism& h,
                                          const PiInstitution& j,
                                          const Institution& i,
                                          std::size_t cap,
                                          std::size_t bound) {
  ValidationReport report;
  Institution gj = G_object(j, cap);
  InstComorphism hbar = transpose(h, j, i, cap);

  if (F_morphism_unchecked(hbar) != h)
    report.add("triangle", {}, "F(transpose(h)) differs from h");

  // Flatten the beta search space: one slot per (object, model of I).
  struct Slot {
    Id object;
    Id model;
    std::vector<Id> choices;
  };
  std::vector<Slot> slots;
  std::size_t total = 1;
  for (const auto& sigma : j.sig.objects) {
    const Id& im = apply_fn(h.phi.on_objects, sigma);
    std::vector<Id> choices(gj.mod_objects.at(sigma).begin(),
                            gj.mod_objects.at(sigma).end());
    for (const auto& m : i.mod_objects.at(im)) {
      if (choices.empty())
        throw SearchSpaceTooLarge("no candidate theories at '" + sigma + "'");
      if (total > bound / choices.size())
        throw SearchSpaceTooLarge(
            "beta family enumeration exceeds the configured bound");
      total *= choices.size();
      slots.push_back({sigma, m, choices});
    }
  }

  std::size_t valid_count = 0;
  bool found_transpose = false;
  std::vector<std::size_t> idx(slots.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    InstComorphism candidate;
    candidate.phi = h.phi;
    candidate.alpha = h.alpha;
    for (const auto& sigma : j.sig.objects) candidate.beta[sigma] = {};
    for (std::size_t k = 0; k < slots.size(); ++k)
      candidate.beta[slots[k].object][slots[k].model] =
          slots[k].choices[idx[k]];
    if (check_inst_comorphism(candidate, gj, i).ok()) {
      ++valid_count;
      if (candidate.beta == hbar.beta) found_transpose = true;
    }
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (++idx[k] < slots[k].choices.size()) break;
      idx[k] = 0;
    }
  }

  if (valid_count == 0)
    report.add("no-transpose", {},
               "no beta family yields a comorphism; h fails its precondition");
  else if (valid_count > 1)
    report.add("transpose-nonunique", {std::to_string(valid_count)},
               "more than one valid beta family");
  else if (!found_transpose)
    report.add("transpose-mismatch", {},
               "the unique valid beta family is not the transpose's");

  return report;
}

ValidationReport check_FG_identity(const PiInstitution& j, std::size_t cap) {
  ValidationReport report;
  Institution gj = G_object(j, cap);
  PiInstitution fgj = F_object(gj);
  if (fgj.sig != j.sig) report.add("fg-signature", {}, "signature changed");
  if (fgj.sen != j.sen) report.add("fg-sentences", {}, "sentences changed");
  if (!report.ok()) return report;
  for (const auto& sigma : j.sig.objects)
    for (const auto& gamma :
         all_subsets(j.sen.on_objects.at(sigma), cap, sigma))
      if (closure_of(j, sigma, gamma) != closure_of(fgj, sigma, gamma))
        report.add("fg-closure", {sigma, set_label(gamma)},
                   "closures of J and F(G(J)) disagree");
  return report;
}

InstComorphism counit(const Institution& i, std::size_t cap) {
  PiInstitution fi = F_object(i);
  return transpose(identity_pi_comorphism(fi), fi, i, cap);
}

ValidationReport check_triangle_F(const Institution& i, std::size_t cap) {
  ValidationReport report;
  PiInstitution fi = F_object(i);
  InstComorphism eps = counit(i, cap);
  PiComorphism f_eps = F_morphism_unchecked(eps);
  PiComorphism composite = compose_pi_comorphisms(unit(fi), f_eps);
  if (composite != identity_pi_comorphism(fi))
    report.add("triangle-F", {}, "F(counit) after unit(F(I)) is not the identity");
  return report;
}

ValidationReport check_triangle_G(const PiInstitution& j, std::size_t cap) {
  ValidationReport report;
  Institution gj = G_object(j, cap);
  PiInstitution fgj = F_object(gj);
  InstComorphism g_unit = G_morphism_unchecked(unit(j), j, fgj, cap);
  InstComorphism eps = counit(gj, cap);
  InstComorphism composite = compose_inst_comorphisms(g_unit, eps);
  if (composite != identity_inst_comorphism(gj))
    report.add("triangle-G", {},
               "counit(G(J)) after G(unit) is not the identity");
  return report;
}

}  // namespace instkit
