// JSON forms for the domain types, with fixed key order so exports are
// bit-stable. All from_json readers validate: they recompute derived fields
// (matrix, trace, ambient) and throw DomainError on any inconsistency.
#pragma once

#include <string>

#include "gofknot/baker.hpp"
#include "gofknot/verdict.hpp"
#include "json.hpp"

namespace gofknot {

using ordered_json = nlohmann::ordered_json;

// {"alpha":5,"beta":2}
ordered_json lens_to_json(const LensSpace& l);
LensSpace lens_from_json(const ordered_json& j);

// {"label":"D2","params":{"p":1,"q":1},"braid":"s1 s2^2 s1^-2 s2^-1",
//  "matrix":[[2,3],[3,5]],"trace":7,"ambient":{"alpha":5,"beta":2}}
ordered_json knot_to_json(const GofKnot& k);
GofKnot knot_from_json(const ordered_json& j);

// {"slope":-1,"status":"unknown","rule":"out-of-scope-negative-slope"}
ordered_json verdict_to_json(const SurgeryVerdict& v);
SurgeryVerdict verdict_from_json(const ordered_json& j);

// {"family":1,"alpha":4} or {"family":2,"p":1,"q":1}
ordered_json family_match_to_json(const FamilyMatch& m);
FamilyMatch family_match_from_json(const ordered_json& j);

}  // namespace gofknot
