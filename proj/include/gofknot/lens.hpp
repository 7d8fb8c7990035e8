// Lens spaces L(alpha, beta) up to (unoriented) homeomorphism, the two-bridge
// labels whose double branched covers they are, and exact continued-fraction
// evaluation for the surgery presentations.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gofknot/mat2.hpp"

namespace gofknot {

// Canonical form: L(0,1), L(1,0), or alpha >= 2 with 0 < beta < alpha and
// beta minimal in {+-beta^{+-1} mod alpha}.
struct LensSpace {
  std::int64_t alpha = 0;
  std::int64_t beta = 1;
  constexpr bool operator==(const LensSpace&) const = default;
  constexpr auto operator<=>(const LensSpace&) const = default;  // (alpha, beta)
};

// L(-a,b) = L(a,-b); L(a,b) = L(a, b mod a) = L(a, -b) = L(a, b^-1 mod a).
// Throws DomainError when gcd(alpha, beta) != 1 (for alpha = 0 that means
// beta != +-1, the only S^2 x S^1 form that arises here).
LensSpace normalize(std::int64_t alpha, std::int64_t beta);

bool homeomorphic(std::int64_t alpha1, std::int64_t beta1, std::int64_t alpha2,
                  std::int64_t beta2);

std::string to_string(const LensSpace& l);  // "L(4,1)"

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;  // reduced, den > 0
  constexpr bool operator==(const Rational&) const = default;
};

// [a1, ..., an] = 1/(a1 + 1/(a2 + ... + 1/an)), exact. Throws DomainError on
// an empty list or when any intermediate (or the whole expression's
// denominator) evaluates to zero.
Rational cf_eval(const std::vector<std::int64_t>& terms);

// Two-bridge link label b(alpha, beta); its double branched cover is the
// corresponding lens space.
struct TwoBridgeLabel {
  std::int64_t alpha = 0;
  std::int64_t beta = 1;
  constexpr bool operator==(const TwoBridgeLabel&) const = default;
};

LensSpace double_branched_cover(const TwoBridgeLabel& b);

}  // namespace gofknot
