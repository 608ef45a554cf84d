// jref :: JSON forms of substitutions, models, proofs and certificates
//
// Expressions are written in the concrete syntax. A bare identifier is read
// as a propositional variable unless the enclosing object lists it under
// "justVars".

#ifndef JREF_JSON_IO_HPP_
#define JREF_JSON_IO_HPP_

#include <nlohmann/json.hpp>
#include <vector>

#include "jref/calculus.hpp"
#include "jref/model.hpp"
#include "jref/saturation.hpp"
#include "jref/substitution.hpp"

namespace jref {

  using json = nlohmann::ordered_json;

  inline constexpr const char* kSchemaVersion = "jref-1";

  // {"support": [...], "bindings": {...}, "justVars": [...]}
  json substitutionToJson(const Substitution& s);
  Substitution substitutionFromJson(const json& j);

  // {"trueAtoms", "justifications", "explicit", "sharp"}; a justification
  // entry is a string or, for several formulas, an array of strings.
  json modelToJson(const BasicModel& m);
  BasicModel modelFromJson(const json& j);

  json countermodelToJson(const Countermodel& cm, const Formula& f);

  json proofToJson(const std::vector<ProofLine>& lines);
  std::vector<ProofLine> proofFromJson(const json& j);

  // Parse failures in the formulas and the layout are reported as
  // MalformedCertificate; replay decides the rest.
  json certificateToJson(const Certificate& cert);
  Certificate certificateFromJson(const json& j);

  // Formula text inside JSON. Throws ParseError.
  Formula formulaFromJson(const json& j);

} // namespace jref

#endif // JREF_JSON_IO_HPP_
