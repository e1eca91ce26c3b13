#include "instkit/galois.hpp"

#include <algorithm>
#include <memory>

namespace instkit {

namespace {

std::vector<Id> as_list(const IdSet& s) { return {s.begin(), s.end()}; }

IdSet subset_of(const std::vector<Id>& universe, std::uint32_t mask) {
  IdSet out;
  for (std::size_t i = 0; i < universe.size(); ++i)
    if (mask & (1u << i)) out.insert(universe[i]);
  return out;
}

std::string set_label(const IdSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& x : s) {
    if (!first) out += ",";
    out += x;
    first = false;
  }
  return out + "}";
}

bool subset_leq(const IdSet& a, const IdSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

IdSet sentences_star(const Institution& inst, const Id& sigma,
                     const SentSet& gamma) {
  auto mi = inst.mod_objects.find(sigma);
  if (mi == inst.mod_objects.end())
    throw UnknownSignature("unknown signature '" + sigma + "'");
  IdSet out;
  for (const auto& m : mi->second) {
    bool all = true;
    for (const auto& s : gamma)
      if (!inst.satisfies(sigma, m, s)) {
        all = false;
        break;
      }
    if (all) out.insert(m);
  }
  return out;
}

SentSet models_star(const Institution& inst, const Id& sigma,
                    const IdSet& models) {
  auto si = inst.sen.on_objects.find(sigma);
  if (si == inst.sen.on_objects.end())
    throw UnknownSignature("unknown signature '" + sigma + "'");
  SentSet out;
  for (const auto& s : si->second) {
    bool all = true;
    for (const auto& m : models)
      if (!inst.satisfies(sigma, m, s)) {
        all = false;
        break;
      }
    if (all) out.insert(s);
  }
  return out;
}

PiInstitution F_object(const Institution& inst) {
  PiInstitution out;
  out.sig = inst.sig;
  out.sen = inst.sen;
  auto shared = std::make_shared<const Institution>(inst);
  for (const auto& sigma : inst.sig.objects) {
    out.closure[sigma] = [shared, sigma](const SentSet& gamma) {
      return models_star(*shared, sigma,
                         sentences_star(*shared, sigma, gamma));
    };
  }
  return out;
}

PiComorphism F_morphism(const InstComorphism& f, const Institution& from,
                        const Institution& to) {
  ValidationReport report = check_inst_comorphism(f, from, to);
  if (!report.ok())
    throw InvalidComorphism("F applied to a comorphism failing its checker (" +
                            report.violations.front().law + ")");
  return F_morphism_unchecked(f);
}

PiComorphism F_morphism_unchecked(const InstComorphism& f) {
  return {f.phi, f.alpha};
}

ValidationReport check_galois_laws(const Institution& inst, const Id& sigma,
                                   std::size_t cap) {
  std::vector<Id> sen = as_list(inst.sen.on_objects.at(sigma));
  std::vector<Id> mod = as_list(inst.mod_objects.at(sigma));
  if (sen.size() > cap || mod.size() > cap)
    throw UniverseTooLarge("universe at '" + sigma +
                           "' exceeds the enumeration cap");

  ValidationReport report;

  for (std::uint32_t mask = 0; mask < (1u << sen.size()); ++mask) {
    SentSet gamma = subset_of(sen, mask);
    IdSet star = sentences_star(inst, sigma, gamma);
    SentSet star2 = models_star(inst, sigma, star);
    if (!subset_leq(gamma, star2))
      report.add("unit-inclusion", {sigma, set_label(gamma)},
                 "gamma not contained in gamma**");
    if (sentences_star(inst, sigma, star2) != star)
      report.add("triple-star", {sigma, set_label(gamma)},
                 "gamma* differs from gamma***");
    // Antitonicity on single-element extensions.
    for (const auto& x : sen) {
      if (gamma.count(x)) continue;
      SentSet bigger = gamma;
      bigger.insert(x);
      if (!subset_leq(sentences_star(inst, sigma, bigger), star))
        report.add("antitonicity-sentences", {sigma, set_label(gamma), x},
                   "star grows on a superset");
    }
  }

  for (std::uint32_t mask = 0; mask < (1u << mod.size()); ++mask) {
    IdSet models = subset_of(mod, mask);
    SentSet star = models_star(inst, sigma, models);
    IdSet star2 = sentences_star(inst, sigma, star);
    if (!subset_leq(models, star2))
      report.add("unit-inclusion-models", {sigma, set_label(models)},
                 "M not contained in M**");
    for (const auto& x : mod) {
      if (models.count(x)) continue;
      IdSet bigger = models;
      bigger.insert(x);
      if (!subset_leq(models_star(inst, sigma, bigger), star))
        report.add("antitonicity-models", {sigma, set_label(models), x},
                   "star grows on a superset");
    }
  }

  return report;
}

ValidationReport check_galois_laws(const Institution& inst, std::size_t cap) {
  ValidationReport report;
  for (const auto& sigma : inst.sig.objects)
    report.merge(check_galois_laws(inst, sigma, cap));
  return report;
}

ValidationReport check_lemma1(const InstComorphism& f, const Institution& from,
                              const Institution& to, std::size_t cap) {
  ValidationReport report;

  for (const auto& sigma : from.sig.objects) {
    const Id& im = apply_fn(f.phi.on_objects, sigma);
    const Fn& a = f.alpha.at(sigma);
    const Fn& b = f.beta.at(sigma);

    std::vector<Id> sen = as_list(from.sen.on_objects.at(sigma));
    std::vector<Id> mod = as_list(to.mod_objects.at(im));
    if (sen.size() > cap || mod.size() > cap)
      throw UniverseTooLarge("universe at '" + sigma +
                             "' exceeds the enumeration cap");

    for (std::uint32_t mask = 0; mask < (1u << sen.size()); ++mask) {
      SentSet gamma = subset_of(sen, mask);
      IdSet lhs = image(b, sentences_star(to, im, image(a, gamma)));
      IdSet rhs = sentences_star(from, sigma, gamma);
      for (const auto& m : lhs)
        if (!rhs.count(m))
          report.add("lemma1-models", {sigma, set_label(gamma), m},
                     "beta[(alpha[gamma])*] escapes gamma*");
    }

    for (std::uint32_t mask = 0; mask < (1u << mod.size()); ++mask) {
      IdSet models = subset_of(mod, mask);
      SentSet lhs = image(a, models_star(from, sigma, image(b, models)));
      SentSet rhs = models_star(to, im, models);
      for (const auto& s : lhs)
        if (!rhs.count(s))
          report.add("lemma1-sentences", {sigma, set_label(models), s},
                     "alpha[(beta[M])*] escapes M*");
    }
  }

  return report;
}

}  // namespace instkit
