#pragma once

#include "instkit/institution.hpp"
#include "instkit/pi_institution.hpp"

namespace instkit {

// Models of gamma: every model at sigma satisfying all of gamma.
IdSet sentences_star(const Institution& inst, const Id& sigma,
                     const SentSet& gamma);

// Theory of a model class: every sentence satisfied by all of models.
SentSet models_star(const Institution& inst, const Id& sigma,
                    const IdSet& models);

// The semantic-closure pi-institution: same signature and sentences, closure
// gamma |-> gamma**.
PiInstitution F_object(const Institution& inst);

// Strips the model component of a comorphism. Throws InvalidComorphism when
// the input fails check_inst_comorphism.
PiComorphism F_morphism(const InstComorphism& f, const Institution& from,
                        const Institution& to);

// Same projection without revalidating the input.
PiComorphism F_morphism_unchecked(const InstComorphism& f);

ValidationReport check_galois_laws(const Institution& inst, const Id& sigma,
                                   std::size_t cap = kSubsetCap);
ValidationReport check_galois_laws(const Institution& inst,
                                   std::size_t cap = kSubsetCap);

// Lemma on stars along a comorphism:
//   beta[(alpha[gamma])*] included in gamma*, and
//   alpha[(beta[models])*] included in models*.
ValidationReport check_lemma1(const InstComorphism& f, const Institution& from,
                              const Institution& to,
                              std::size_t cap = kSubsetCap);

}  // namespace instkit
