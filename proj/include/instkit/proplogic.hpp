#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "instkit/institution.hpp"
#include "instkit/pi_institution.hpp"

namespace instkit {

inline constexpr std::size_t kFormulaGuard = 4096;

struct PropSignature {
  std::map<std::string, int> connectives;  // name -> arity

  auto operator<=>(const PropSignature&) const = default;
};

struct Formula {
  bool is_var = false;
  std::string name;
  std::vector<Formula> children;

  static Formula var(std::string n) { return {true, std::move(n), {}}; }
  static Formula conn(std::string n, std::vector<Formula> cs) {
    return {false, std::move(n), std::move(cs)};
  }

  int depth() const;

  bool operator==(const Formula&) const = default;
  bool operator<(const Formula& other) const;
};

struct LogicMatrix {
  std::set<std::string> values;
  std::set<std::string> designated;
  // connective -> argument tuple -> value
  std::map<std::string, std::map<std::vector<std::string>, std::string>> interp;

  auto operator<=>(const LogicMatrix&) const = default;
};

// A logic defined by matrix consequence over a finite variable set, with an
// explicit depth truncation of its formula universe.
struct LogicPresentation {
  PropSignature signature;
  LogicMatrix matrix;
  std::vector<std::string> variables;
  int depth_cap = 0;

  auto operator<=>(const LogicPresentation&) const = default;
};

enum class TranslationKind { strict, flexible };

// strict: connective renaming; flexible: connective -> derived formula over
// markers x1..xn of the target signature.
struct SigTranslation {
  TranslationKind kind = TranslationKind::strict;
  std::map<std::string, std::string> strict_map;
  std::map<std::string, Formula> flexible_map;

  auto operator<=>(const SigTranslation&) const = default;
};

Formula parse_formula(const std::string& text, const PropSignature& sig,
                      const std::set<std::string>& variables);

std::string render_formula(const Formula& f);

// All formulas of depth <= depth_cap, ordered by (depth, rendered text).
std::vector<Formula> enumerate_formulas(const PropSignature& sig,
                                        const std::vector<std::string>& variables,
                                        int depth_cap,
                                        std::size_t guard = kFormulaGuard);

std::string eval_formula(const LogicMatrix& m,
                         const std::map<std::string, std::string>& valuation,
                         const Formula& f);

// All valuations X -> values, in deterministic order.
std::vector<std::map<std::string, std::string>> all_valuations(
    const std::vector<std::string>& variables,
    const std::set<std::string>& values);

bool matrix_consequence(const LogicPresentation& l,
                        const std::vector<Formula>& gamma, const Formula& psi);

Formula translate_formula(const SigTranslation& t, const Formula& f);

// Worst-case depth multiplier of a translation (1 for strict).
int translation_growth(const SigTranslation& t);

ValidationReport check_logic_morphism(const SigTranslation& t,
                                      const LogicPresentation& from,
                                      const LogicPresentation& to,
                                      std::size_t cap = kSubsetCap);

// One-signature institution (object id "L0"): sentences are the truncated
// formula universe, models are valuations, satisfaction is designation.
Institution build_matrix_institution(const LogicPresentation& l);

struct LogicArrow {
  std::size_t src = 0;
  std::size_t dst = 0;
  SigTranslation translation;
};

// Multi-signature variant: declared translations become signature morphisms
// with Sen the induced formula translation and reducts valuation
// precomposition. Requires all matrices to share one value set.
Institution build_matrix_institution(const std::vector<LogicPresentation>& logics,
                                     const std::vector<LogicArrow>& arrows);

// The pi-institution of a finite diagram of logics: objects L0..Lk, the
// declared arrows closed under composition, matrix consequence as closure.
PiInstitution build_logics_pi_institution(TranslationKind kind,
                                          const std::vector<LogicPresentation>& logics,
                                          const std::vector<LogicArrow>& arrows);

// The inclusion-style comorphism Js -> Jf with identity sentence components.
PiComorphism build_plus_comorphism(const PiInstitution& js,
                                   const PiInstitution& jf,
                                   const Fn& object_embedding,
                                   const Fn& morphism_embedding);

// Classical one-variable fixture: Boolean matrix, {not, and}, X = {p},
// depth cap 1.
LogicPresentation cpl1_presentation();

// Lukasiewicz three-valued fixture: {not, imp}, X = {p}, depth cap 1.
LogicPresentation luk3_presentation();

}  // namespace instkit
