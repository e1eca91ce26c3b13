#pragma once

#include "instkit/institution.hpp"
#include "instkit/pi_institution.hpp"

namespace instkit {

// Canonical model id of a closed theory: the sorted sentence list rendered
// as a JSON array, so models are self-describing.
std::string theory_id(const SentSet& theory);
SentSet theory_of_id(const std::string& id);

// The closed-theory institution: models at sigma are the closure images,
// ordered by inclusion; reducts are sentence-map preimages; satisfaction is
// membership.
Institution G_object(const PiInstitution& j, std::size_t cap = kSubsetCap);

// Preimages of closed theories along one morphism stay closed.
ValidationReport check_preimage_closed(const PiInstitution& j, const Id& f,
                                       std::size_t cap = kSubsetCap);

// G on a pi-comorphism: beta is the alpha-preimage of closed theories.
// Throws InvalidComorphism when h fails check_pi_comorphism.
InstComorphism G_morphism(const PiComorphism& h, const PiInstitution& from,
                          const PiInstitution& to,
                          std::size_t cap = kSubsetCap);

InstComorphism G_morphism_unchecked(const PiComorphism& h,
                                    const PiInstitution& from,
                                    const PiInstitution& to,
                                    std::size_t cap = kSubsetCap);

}  // namespace instkit
