#include "gofknot/verdict.hpp"

namespace gofknot {

std::string to_string(MonodromyClass c) {
  switch (c) {
    case MonodromyClass::Hyperbolic: return "hyperbolic";
    case MonodromyClass::Reducible: return "reducible";
    case MonodromyClass::Periodic: return "periodic";
  }
  throw InternalError("unhandled monodromy class");
}

std::string to_string(LoStatus s) {
  switch (s) {
    case LoStatus::LeftOrderable: return "left-orderable";
    case LoStatus::NotLeftOrderable: return "not-left-orderable";
    case LoStatus::Unknown: return "unknown";
  }
  throw InternalError("unhandled status");
}

std::string to_string(VerdictRule r) {
  switch (r) {
    case VerdictRule::Prop33Fenley: return "prop3.3-fenley";
    case VerdictRule::RsCor15: return "rs-cor1.5";
    case VerdictRule::OutOfScopeSeifert: return "out-of-scope-seifert";
    case VerdictRule::OutOfScopeNegativeSlope:
      return "out-of-scope-negative-slope";
  }
  throw InternalError("unhandled rule");
}

std::string to_string(AllIntegralLo a) {
  switch (a) {
    case AllIntegralLo::AllLO: return "all-lo";
    case AllIntegralLo::NotAllLO: return "not-all-lo";
    case AllIntegralLo::Unknown: return "unknown";
  }
  throw InternalError("unhandled all-integral summary");
}

std::optional<MonodromyClass> monodromy_class_from_string(
    const std::string& text) {
  if (text == "hyperbolic") return MonodromyClass::Hyperbolic;
  if (text == "reducible") return MonodromyClass::Reducible;
  if (text == "periodic") return MonodromyClass::Periodic;
  return std::nullopt;
}

std::optional<LoStatus> lo_status_from_string(const std::string& text) {
  if (text == "left-orderable") return LoStatus::LeftOrderable;
  if (text == "not-left-orderable") return LoStatus::NotLeftOrderable;
  if (text == "unknown") return LoStatus::Unknown;
  return std::nullopt;
}

std::optional<VerdictRule> verdict_rule_from_string(const std::string& text) {
  if (text == "prop3.3-fenley") return VerdictRule::Prop33Fenley;
  if (text == "rs-cor1.5") return VerdictRule::RsCor15;
  if (text == "out-of-scope-seifert") return VerdictRule::OutOfScopeSeifert;
  if (text == "out-of-scope-negative-slope") {
    return VerdictRule::OutOfScopeNegativeSlope;
  }
  return std::nullopt;
}

std::optional<AllIntegralLo> all_integral_lo_from_string(
    const std::string& text) {
  if (text == "all-lo") return AllIntegralLo::AllLO;
  if (text == "not-all-lo") return AllIntegralLo::NotAllLO;
  if (text == "unknown") return AllIntegralLo::Unknown;
  return std::nullopt;
}

std::string rule_display_name(VerdictRule r) {
  switch (r) {
    case VerdictRule::Prop33Fenley: return "Prop 3.3 / Fenley";
    case VerdictRule::RsCor15: return "Roberts-Shareshian Cor 1.5";
    case VerdictRule::OutOfScopeSeifert: return "out of scope: Seifert";
    case VerdictRule::OutOfScopeNegativeSlope:
      return "out of scope: negative slope";
  }
  throw InternalError("unhandled rule");
}

MonodromyClass monodromy_class(const Mat2& m) {
  if (det(m) != 1) throw DomainError("monodromy_class requires det = 1");
  std::int64_t t = trace(m);
  if (t > 2 || t < -2) return MonodromyClass::Hyperbolic;
  if (t == 2 || t == -2) return MonodromyClass::Reducible;
  return MonodromyClass::Periodic;
}

SurgeryVerdict surgery_verdict(const GofKnot& k, std::int64_t n) {
  if (k.trace > 2) return {n, LoStatus::LeftOrderable, VerdictRule::Prop33Fenley};
  if (k.trace < -2) {
    if (n > 0) return {n, LoStatus::NotLeftOrderable, VerdictRule::RsCor15};
    return {n, LoStatus::Unknown, VerdictRule::OutOfScopeNegativeSlope};
  }
  return {n, LoStatus::Unknown, VerdictRule::OutOfScopeSeifert};
}

AllIntegralLo all_integral_lo(const GofKnot& k) {
  if (k.trace > 2) return AllIntegralLo::AllLO;
  if (k.trace < -2) return AllIntegralLo::NotAllLO;
  return AllIntegralLo::Unknown;
}

std::vector<FamilyMatch> lo_family_matches(const Mat2& m) {
  if (det(m) != 1) throw DomainError("lo_family_matches requires det = 1");
  std::vector<FamilyMatch> out;
  const std::int64_t t = trace(m);
  if (t <= 2) return out;

  {
    FamilyMatch match;
    match.family = 1;
    match.params.alpha = checked_sub(t, 2);
    if (conjugate_gl2(m, family_matrix(1, *match.params.alpha))) {
      out.push_back(match);
    }
  }
  // 3 + p + q + 2pq = t with p >= 1 forces q <= (t-4)/3; both (p,q) orders
  // are distinct forms and are tested separately.
  for (std::int64_t q = 1; checked_add(4, checked_mul(3, q)) <= t; ++q) {
    std::int64_t num = t - 3 - q;
    std::int64_t den = 2 * q + 1;
    if (num % den != 0) continue;
    std::int64_t p = num / den;
    if (p < 1) continue;
    if (conjugate_gl2(m, family_matrix(2, p, q))) {
      FamilyMatch match;
      match.family = 2;
      match.params.p = p;
      match.params.q = q;
      out.push_back(match);
    }
  }
  return out;
}

std::optional<FamilyMatch> lo_family_membership(const Mat2& m) {
  auto matches = lo_family_matches(m);
  if (matches.empty()) return std::nullopt;
  return matches.front();
}

}  // namespace gofknot
