// Per-slope left-orderability verdicts for integral Dehn surgeries on
// genus-one fibered knots, the monodromy trichotomy, and membership in the
// two monodromy families whose integral surgeries are all left-orderable.
//
// Decision rules: trace > 2 gives left-orderable for every integral slope
// (hyperbolic monodromy carries an R-covered Anosov flow; Fenley); trace < -2
// gives not-left-orderable for every slope n > 0 (Roberts--Shareshian) and is
// out of scope for n <= 0; |trace| <= 2 (Seifert-fibered cases) is out of
// scope entirely.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gofknot/baker.hpp"
#include "gofknot/mat2.hpp"

namespace gofknot {

enum class MonodromyClass { Hyperbolic, Reducible, Periodic };
enum class LoStatus { LeftOrderable, NotLeftOrderable, Unknown };
enum class VerdictRule {
  Prop33Fenley,             // trace > 2, every n
  RsCor15,                  // trace < -2, n > 0
  OutOfScopeSeifert,        // |trace| <= 2
  OutOfScopeNegativeSlope,  // trace < -2, n <= 0
};
enum class AllIntegralLo { AllLO, NotAllLO, Unknown };

std::string to_string(MonodromyClass c);  // "hyperbolic" ...
std::string to_string(LoStatus s);        // "left-orderable" ...
std::string to_string(VerdictRule r);     // "prop3.3-fenley" ...
std::string to_string(AllIntegralLo a);   // "all-lo" ...
std::optional<MonodromyClass> monodromy_class_from_string(
    const std::string& text);
std::optional<LoStatus> lo_status_from_string(const std::string& text);
std::optional<VerdictRule> verdict_rule_from_string(const std::string& text);
std::optional<AllIntegralLo> all_integral_lo_from_string(
    const std::string& text);

// Human-readable rule names for plain-text output, e.g. "Prop 3.3 / Fenley".
std::string rule_display_name(VerdictRule r);

struct SurgeryVerdict {
  std::int64_t slope = 0;
  LoStatus status = LoStatus::Unknown;
  VerdictRule rule = VerdictRule::OutOfScopeSeifert;
  bool operator==(const SurgeryVerdict&) const = default;
};

// Trichotomy by |trace|: > 2 hyperbolic, = 2 reducible, < 2 periodic.
// Throws DomainError unless det(m) = 1.
MonodromyClass monodromy_class(const Mat2& m);

// Verdict for n-surgery on the knot; total (never throws).
SurgeryVerdict surgery_verdict(const GofKnot& k, std::int64_t n);

// Are ALL integral surgeries left-orderable? AllLO iff trace > 2; NotAllLO
// iff trace < -2 (some n > 0 fails); Unknown otherwise.
AllIntegralLo all_integral_lo(const GofKnot& k);

// A match of a matrix against one of the two all-LO families: family 1 is
// (1+a, a; 1, 1) recorded as params.alpha = a; family 2 is the D2 closed form
// recorded as params.p, params.q in the order found (not sorted).
struct FamilyMatch {
  int family = 1;
  KnotParams params;
  bool operator==(const FamilyMatch&) const = default;
};

// All family forms GL2(Z)-conjugate to m, in search order: family 1 (with
// a = trace - 2), then family 2 by ascending q over the finitely many (p,q)
// with p,q >= 1 and 3+p+q+2pq = trace. Empty when trace <= 2.
// Throws DomainError unless det(m) = 1.
std::vector<FamilyMatch> lo_family_matches(const Mat2& m);

// First entry of lo_family_matches, if any.
std::optional<FamilyMatch> lo_family_membership(const Mat2& m);

}  // namespace gofknot
