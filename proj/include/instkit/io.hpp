#pragma once

#include <string>
#include <variant>

#include "json.hpp"

#include "instkit/adjunction.hpp"
#include "instkit/proplogic.hpp"

namespace instkit::io {

using nlohmann::json;

json institution_to_json(const Institution& inst);
Institution institution_from_json(const json& doc);

// Serializes the closure as an explicit table over all subsets; requires
// every sentence universe within the cap.
json pi_to_json(const PiInstitution& j, std::size_t cap = kSubsetCap);
PiInstitution pi_from_json(const json& doc);

json logic_to_json(const LogicPresentation& l);
LogicPresentation logic_from_json(const json& doc);

// A translation document keeps its images as formula text; they are parsed
// against concrete signatures on use.
struct TranslationDoc {
  TranslationKind kind = TranslationKind::strict;
  std::map<std::string, std::string> images;
};

json translation_to_json(const TranslationDoc& t);
TranslationDoc translation_from_json(const json& doc);
SigTranslation resolve_translation(const TranslationDoc& t,
                                   const PropSignature& source,
                                   const PropSignature& target);

struct InstComorphismDoc {
  Institution source;
  Institution target;
  InstComorphism f;
};

struct InstMorphismDoc {
  Institution source;
  Institution target;
  InstMorphism h;
};

struct PiComorphismDoc {
  PiInstitution source;
  PiInstitution target;
  PiComorphism g;
};

json inst_comorphism_to_json(const InstComorphismDoc& doc);
InstComorphismDoc inst_comorphism_from_json(const json& doc);
json inst_morphism_to_json(const InstMorphismDoc& doc);
InstMorphismDoc inst_morphism_from_json(const json& doc);
json pi_comorphism_to_json(const PiComorphismDoc& doc,
                           std::size_t cap = kSubsetCap);
PiComorphismDoc pi_comorphism_from_json(const json& doc);

using DocumentBody =
    std::variant<Institution, PiInstitution, InstComorphismDoc,
                 InstMorphismDoc, PiComorphismDoc, LogicPresentation,
                 TranslationDoc>;

struct Document {
  std::string kind;
  DocumentBody body;
};

Document document_from_json(const json& doc);
Document load_document(const std::string& path);
json load_json(const std::string& path);

json report_to_json(const ValidationReport& report);
ValidationReport report_from_json(const json& doc);
std::string render_report(const ValidationReport& report, bool as_json);

// Writes via a temp file and a final rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace instkit::io
