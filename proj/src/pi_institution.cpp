#include "instkit/pi_institution.hpp"

#include <algorithm>
#include <set>

namespace instkit {

namespace {

std::vector<Id> universe_list(const SetFunctor& sen, const Id& sigma) {
  const IdSet& u = sen.on_objects.at(sigma);
  return {u.begin(), u.end()};
}

SentSet subset_of(const std::vector<Id>& universe, std::uint32_t mask) {
  SentSet out;
  for (std::size_t i = 0; i < universe.size(); ++i)
    if (mask & (1u << i)) out.insert(universe[i]);
  return out;
}

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

bool subset_leq(const SentSet& a, const SentSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

const ClosureFn& closure_at(const PiInstitution& j, const Id& sigma) {
  auto it = j.closure.find(sigma);
  if (it == j.closure.end())
    throw UnknownSignature("no closure operator at '" + sigma + "'");
  return it->second;
}

// Deterministic sample family used above the subset cap: the empty set and
// singletons, in universe order.
std::vector<SentSet> sample_subsets(const std::vector<Id>& universe,
                                    std::size_t budget) {
  std::vector<SentSet> out;
  out.push_back({});
  for (const auto& x : universe) {
    if (out.size() >= budget) break;
    out.push_back({x});
  }
  return out;
}

constexpr std::size_t kSampleBudget = 64;
constexpr std::size_t kSampleMonoProbes = 8;

void check_laws_on(const PiInstitution&, const Id& sigma,
                   const std::vector<Id>& universe, const SentSet& full,
                   const SentSet& gamma, const ClosureFn& close,
                   std::size_t mono_probes, ValidationReport& report) {
  SentSet c = close(gamma);
  if (!subset_leq(c, full)) {
    report.add("closure-universe", {sigma, set_label(gamma)},
               "closure leaves the sentence universe");
    return;
  }
  if (!subset_leq(gamma, c))
    report.add("extensivity", {sigma, set_label(gamma)},
               "gamma not contained in its closure");
  if (close(c) != c)
    report.add("idempotence", {sigma, set_label(gamma)},
               "closure is not idempotent");
  std::size_t probes = 0;
  for (const auto& x : universe) {
    if (gamma.count(x)) continue;
    if (probes++ >= mono_probes) break;
    SentSet bigger = gamma;
    bigger.insert(x);
    if (!subset_leq(c, close(bigger)))
      report.add("monotonicity", {sigma, set_label(gamma), set_label(bigger)},
                 "closure shrinks on a superset");
  }
}

}  // namespace

SentSet closure_of(const PiInstitution& j, const Id& sigma,
                   const SentSet& gamma) {
  auto ui = j.sen.on_objects.find(sigma);
  if (ui == j.sen.on_objects.end())
    throw UnknownSignature("unknown signature '" + sigma + "'");
  for (const auto& x : gamma)
    if (!ui->second.count(x))
      throw SentenceOutOfUniverse("sentence '" + x + "' not in Sen(" + sigma +
                                  ")");
  return closure_at(j, sigma)(gamma);
}

std::vector<SentSet> closed_sets(const PiInstitution& j, const Id& sigma,
                                 std::size_t cap) {
  std::vector<Id> universe = universe_list(j.sen, sigma);
  if (universe.size() > cap)
    throw UniverseTooLarge("Sen(" + sigma + ") exceeds the enumeration cap");
  const ClosureFn& close = closure_at(j, sigma);
  std::set<SentSet> seen;
  for (std::uint32_t mask = 0; mask < (1u << universe.size()); ++mask)
    seen.insert(close(subset_of(universe, mask)));
  return {seen.begin(), seen.end()};
}

ValidationReport check_closure_laws(const PiInstitution& j, std::size_t cap) {
  ValidationReport report;
  for (const auto& sigma : j.sig.objects) {
    std::vector<Id> universe = universe_list(j.sen, sigma);
    SentSet full(universe.begin(), universe.end());
    const ClosureFn& close = closure_at(j, sigma);
    if (universe.size() <= cap) {
      // Monotonicity on single-element extensions suffices: any inclusion
      // factors through a chain of them.
      for (std::uint32_t mask = 0; mask < (1u << universe.size()); ++mask)
        check_laws_on(j, sigma, universe, full, subset_of(universe, mask),
                      close, universe.size(), report);
    } else {
      report.exhaustive = false;
      for (const auto& gamma : sample_subsets(universe, kSampleBudget))
        check_laws_on(j, sigma, universe, full, gamma, close,
                      kSampleMonoProbes, report);
    }
  }
  return report;
}

ValidationReport check_coherence(const PiInstitution& j, std::size_t cap) {
  ValidationReport report;
  for (const auto& [f, arrow] : j.sig.morphisms) {
    const Fn& sen_f = j.sen.on_morphisms.at(f);
    // Identity translations make the inclusion trivially true.
    if (sen_f == identity_fn(j.sen.on_objects.at(arrow.src)) &&
        arrow.src == arrow.dst)
      continue;
    std::vector<Id> universe = universe_list(j.sen, arrow.src);
    std::vector<SentSet> gammas;
    if (universe.size() <= cap) {
      for (std::uint32_t mask = 0; mask < (1u << universe.size()); ++mask)
        gammas.push_back(subset_of(universe, mask));
    } else {
      report.exhaustive = false;
      gammas = sample_subsets(universe, kSampleBudget);
    }
    for (const auto& gamma : gammas) {
      SentSet lhs = image(sen_f, closure_of(j, arrow.src, gamma));
      SentSet rhs = closure_of(j, arrow.dst, image(sen_f, gamma));
      if (!subset_leq(lhs, rhs))
        report.add("coherence", {f, set_label(gamma)},
                   "Sen(f)(C(gamma)) not contained in C(Sen(f)(gamma))");
    }
  }
  return report;
}

ValidationReport check_pi_comorphism(const PiComorphism& g,
                                     const PiInstitution& from,
                                     const PiInstitution& to,
                                     std::size_t cap) {
  ValidationReport report;
  if (g.phi.source != from.sig || g.phi.target != to.sig) {
    report.add("phi-endpoints", {},
               "phi does not run between the given signature categories");
    return report;
  }
  report.merge(check_functor(g.phi));
  if (!report.ok()) return report;

  NatTransSet alpha{from.sen, precompose(g.phi, to.sen), g.alpha};
  for (auto v : check_naturality(alpha).violations) {
    v.law = "alpha-" + v.law;
    report.violations.push_back(std::move(v));
  }
  if (!report.ok()) return report;

  for (const auto& sigma : from.sig.objects) {
    const Id& im = apply_fn(g.phi.on_objects, sigma);
    const Fn& a = g.alpha.at(sigma);
    std::vector<Id> universe = universe_list(from.sen, sigma);
    std::vector<SentSet> gammas;
    if (universe.size() <= cap) {
      for (std::uint32_t mask = 0; mask < (1u << universe.size()); ++mask)
        gammas.push_back(subset_of(universe, mask));
    } else {
      report.exhaustive = false;
      gammas = sample_subsets(universe, kSampleBudget);
    }
    for (const auto& gamma : gammas) {
      SentSet closed = closure_of(from, sigma, gamma);
      SentSet target_closed = closure_of(to, im, image(a, gamma));
      for (const auto& phi : closed)
        if (!target_closed.count(apply_fn(a, phi)))
          report.add("pi-compatibility", {sigma, set_label(gamma), phi},
                     "alpha image of a consequence escapes the translated "
                     "closure");
    }
  }
  return report;
}

PiComorphism compose_pi_comorphisms(const PiComorphism& g,
                                    const PiComorphism& h) {
  if (g.phi.target != h.phi.source)
    throw DomainMismatch(
        "pi-comorphism composition: signatures do not line up");
  PiComorphism out;
  out.phi = compose_functors(g.phi, h.phi);
  for (const auto& o : g.phi.source.objects)
    out.alpha[o] =
        compose_fns(g.alpha.at(o), h.alpha.at(apply_fn(g.phi.on_objects, o)));
  return out;
}

PiComorphism identity_pi_comorphism(const PiInstitution& j) {
  PiComorphism out;
  out.phi = identity_functor(j.sig);
  for (const auto& o : j.sig.objects)
    out.alpha[o] = identity_fn(j.sen.on_objects.at(o));
  return out;
}

ValidationReport validate_pi_institution(const PiInstitution& j,
                                         std::size_t cap) {
  ValidationReport report = check_category(j.sig);
  if (j.sen.source != j.sig)
    report.add("sen-base", {}, "sentence functor is not over the signature");
  report.merge(check_set_functor(j.sen));
  if (!report.ok()) return report;
  report.merge(check_closure_laws(j, cap));
  report.merge(check_coherence(j, cap));
  return report;
}

}  // namespace instkit
