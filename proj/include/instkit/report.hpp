#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace instkit {

// Base for all operational errors. Law failures are never exceptions; they
// land in a ValidationReport instead.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotComposable : Error { using Error::Error; };
struct DomainMismatch : Error { using Error::Error; };
struct UnknownSignature : Error { using Error::Error; };
struct SentenceOutOfUniverse : Error { using Error::Error; };
struct UniverseTooLarge : Error { using Error::Error; };
struct SearchSpaceTooLarge : Error { using Error::Error; };
struct InvalidComorphism : Error { using Error::Error; };
struct ExplosionGuard : Error { using Error::Error; };
struct DepthOverflow : Error { using Error::Error; };
struct MissingMapping : Error { using Error::Error; };
struct UnassignedVariable : Error { using Error::Error; };
struct SyntaxError : Error { using Error::Error; };
struct UnknownSymbol : Error { using Error::Error; };
struct ArityMismatch : Error { using Error::Error; };
struct NotASubcategory : Error { using Error::Error; };
struct InvalidLogicMorphism : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct DanglingReference : Error { using Error::Error; };

struct Violation {
  std::string law;
  std::vector<std::string> witness;
  std::string message;

  bool operator==(const Violation&) const = default;
};

// Result of a law checker. status == pass only when the sweep was exhaustive
// and found nothing; a non-exhaustive clean sweep reports sampled.
struct ValidationReport {
  enum class Status { pass, fail, sampled };

  std::vector<Violation> violations;
  bool exhaustive = true;

  Status status() const {
    if (!violations.empty()) return Status::fail;
    return exhaustive ? Status::pass : Status::sampled;
  }

  bool ok() const { return violations.empty(); }

  void add(std::string law, std::vector<std::string> witness,
           std::string message) {
    violations.push_back(
        {std::move(law), std::move(witness), std::move(message)});
  }

  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
    exhaustive = exhaustive && other.exhaustive;
  }

  bool operator==(const ValidationReport&) const = default;
};

inline const char* status_name(ValidationReport::Status s) {
  switch (s) {
    case ValidationReport::Status::pass: return "pass";
    case ValidationReport::Status::fail: return "fail";
    case ValidationReport::Status::sampled: return "sampled";
  }
  return "?";
}

}  // namespace instkit
