// Words in the 3-strand braid group and the monodromy representation that
// sends a 3-braid to the mapping class of a once-punctured torus.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gofknot/mat2.hpp"

namespace gofknot {

struct BraidWord {
  struct Syllable {
    int gen;           // 1 or 2 (sigma_1 / sigma_2)
    std::int64_t exp;  // nonzero
    constexpr bool operator==(const Syllable&) const = default;
  };
  std::vector<Syllable> syllables;
  bool operator==(const BraidWord&) const = default;
};

// Grammar: word := (syllable (ws+ syllable)*)?  with optional surrounding
// whitespace; syllable := gen ('^' int)?; gen := "s1" | "s2" | "σ1" | "σ2";
// int := '-'? digit+ with the value nonzero. The parser does not freely
// reduce; it throws DomainError with a byte offset on malformed input.
BraidWord parse_braid(const std::string& text);

// Canonical text: "s1"/"s2" with "^k" for exponents other than 1, single
// spaces between syllables. Empty word prints as "".
std::string to_string(const BraidWord& w);

BraidWord concat(const BraidWord& u, const BraidWord& v);
BraidWord invert(const BraidWord& u);

// Merge adjacent syllables on the same generator and drop the ones that
// cancel to exponent zero, repeatedly.
BraidWord free_reduce(const BraidWord& u);

std::int64_t exponent_sum(const BraidWord& u);

// Monodromy homomorphism: sigma_1 -> (1 1; 0 1), sigma_2 -> (1 0; -1 1),
// syllables multiplied left to right. Lands in SL2(Z).
Mat2 monodromy(const BraidWord& w);

inline constexpr Mat2 kSigma1Image{1, 1, 0, 1};
inline constexpr Mat2 kSigma2Image{1, 0, -1, 1};

}  // namespace gofknot
