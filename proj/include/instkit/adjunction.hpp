#pragma once

#include "instkit/g_functor.hpp"
#include "instkit/galois.hpp"

namespace instkit {

inline constexpr std::size_t kBetaSearchBound = 1u << 20;

// The unit at J: identity components J -> F(G(J)).
PiComorphism unit(const PiInstitution& j);

// Unit validity plus extensional agreement of the two closures on every
// subset of every sentence universe.
ValidationReport check_unit(const PiInstitution& j,
                            std::size_t cap = kSubsetCap);

// Adjoint transpose of h : J -> F(I), a comorphism G(J) -> I with
// beta(m) = alpha-preimage of the theory of m.
InstComorphism transpose(const PiComorphism& h, const PiInstitution& j,
                         const Institution& i, std::size_t cap = kSubsetCap);

// (i) F applied to the transpose gives back h; (ii) the transpose's beta is
// the unique family making ⟨phi, alpha, beta⟩ a comorphism, checked by
// brute-force enumeration of all candidate families.
ValidationReport check_universal_property(const PiComorphism& h,
                                          const PiInstitution& j,
                                          const Institution& i,
                                          std::size_t cap = kSubsetCap,
                                          std::size_t bound = kBetaSearchBound);

// F(G(J)) equals J componentwise: same signature, same sentences, same
// closure on every subset.
ValidationReport check_FG_identity(const PiInstitution& j,
                                   std::size_t cap = kSubsetCap);

// The counit at I: transpose of the identity on F(I).
InstComorphism counit(const Institution& i, std::size_t cap = kSubsetCap);

// F(counit) after unit(F(I)) is the identity on F(I).
ValidationReport check_triangle_F(const Institution& i,
                                  std::size_t cap = kSubsetCap);

// counit at G(J) after G(unit at J) is the identity on G(J).
ValidationReport check_triangle_G(const PiInstitution& j,
                                  std::size_t cap = kSubsetCap);

}  // namespace instkit
