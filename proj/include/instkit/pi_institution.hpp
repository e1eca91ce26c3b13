#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "instkit/fincat.hpp"

namespace instkit {

using SentSet = IdSet;
using ClosureFn = std::function<SentSet(const SentSet&)>;

// Exhaustive subset sweeps run only when |Sen(S)| <= this many sentences;
// above it the law checkers fall back to sampling and report "sampled".
inline constexpr std::size_t kSubsetCap = 16;

// A pi-institution: signature category, sentence functor, and a closure
// operator per signature, kept behind a callable so table-backed and
// consequence-backed instances share one representation.
struct PiInstitution {
  FinCat sig;
  SetFunctor sen;
  std::map<Id, ClosureFn> closure;
};

struct PiComorphism {
  FinFunctor phi;
  std::map<Id, Fn> alpha;

  auto operator<=>(const PiComorphism&) const = default;
};

SentSet closure_of(const PiInstitution& j, const Id& sigma,
                   const SentSet& gamma);

// All distinct closure images at sigma, sorted canonically.
std::vector<SentSet> closed_sets(const PiInstitution& j, const Id& sigma,
                                 std::size_t cap = kSubsetCap);

ValidationReport check_closure_laws(const PiInstitution& j,
                                    std::size_t cap = kSubsetCap);

ValidationReport check_coherence(const PiInstitution& j,
                                 std::size_t cap = kSubsetCap);

ValidationReport check_pi_comorphism(const PiComorphism& g,
                                     const PiInstitution& from,
                                     const PiInstitution& to,
                                     std::size_t cap = kSubsetCap);

PiComorphism compose_pi_comorphisms(const PiComorphism& g,
                                    const PiComorphism& h);

PiComorphism identity_pi_comorphism(const PiInstitution& j);

// Category + sentence functor + closure laws + coherence, concatenated.
ValidationReport validate_pi_institution(const PiInstitution& j,
                                         std::size_t cap = kSubsetCap);

}  // namespace instkit
