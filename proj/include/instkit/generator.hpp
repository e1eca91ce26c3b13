#pragma once

#include <cstdint>

#include "instkit/galois.hpp"

namespace instkit {

// Seeded generator of small valid institutions: at most 3 signatures in a
// chain, at most 4 sentences and 4 models per signature. Satisfaction along
// morphisms is derived from reduct preimages, so the satisfaction condition
// holds by construction; every output passes validate_institution.
Institution random_institution(std::uint64_t seed);

struct GeneratedComorphism {
  Institution from;
  Institution to;
  InstComorphism f;
};

// Seeded generator of valid comorphisms. Builds a random target, carves a
// sub-institution out of it under renamed sentence ids, then searches for a
// theory-compatible beta, discarding candidates that fail the checker.
GeneratedComorphism random_comorphism(std::uint64_t seed);

}  // namespace instkit
