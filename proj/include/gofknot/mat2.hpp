// Exact 2x2 integer matrix arithmetic and SL2(Z)/GL2(Z) conjugacy decisions.
//
// Everything is int64 with overflow *detected* (throws), never wrapped.
// Hyperbolic conjugacy classes (|trace| > 2) are decided through the classical
// RL normal form: every such matrix is, up to sign, conjugate to a product of
//   R = (1 1; 0 1)   and   L = (1 0; 1 1)
// with both letters occurring, and the cyclic word in R and L is a complete
// conjugacy invariant.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gofknot {

// Domain errors: invalid arguments, overflow, parse failures. CLI exit code 1.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated internal invariants (bugs). Should never fire.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Overflow-checked int64 arithmetic; throws DomainError on overflow.
std::int64_t checked_add(std::int64_t x, std::int64_t y);
std::int64_t checked_sub(std::int64_t x, std::int64_t y);
std::int64_t checked_mul(std::int64_t x, std::int64_t y);
std::int64_t checked_neg(std::int64_t x);

// Row-major [[a,b],[c,d]]. Value type; defaults to the identity.
struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;
  constexpr bool operator==(const Mat2&) const = default;
};

inline constexpr Mat2 kIdentity{1, 0, 0, 1};
inline constexpr Mat2 kR{1, 1, 0, 1};
inline constexpr Mat2 kL{1, 0, 1, 1};
inline constexpr Mat2 kJ{1, 0, 0, -1};  // diag(1,-1), det -1

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& m);
std::int64_t trace(const Mat2& m);
std::int64_t det(const Mat2& m);

// Exact inverse; requires det = +-1.
Mat2 inverse(const Mat2& m);

// m^n for any integer n; negative n requires det = +-1.
Mat2 pow(const Mat2& m, std::int64_t n);

// Text form "[[a,b],[c,d]]" (no spaces). parse_mat2 accepts optional spaces
// between tokens and throws DomainError on anything else.
std::string to_string(const Mat2& m);
Mat2 parse_mat2(const std::string& text);

// Cyclic word in R and L, both letters occurring, stored in canonical
// rotation: the lexicographically least rotation of the flattened letter
// sequence with R < L. Adjacent syllables alternate letters and exponents are
// positive; the first syllable of the canonical form is always an R-run.
struct RLWord {
  struct Syllable {
    char letter;  // 'R' or 'L'
    std::int64_t exp;
    constexpr bool operator==(const Syllable&) const = default;
  };
  std::vector<Syllable> syllables;
  bool operator==(const RLWord&) const = default;
};

std::string to_string(const RLWord& w);  // e.g. "R^4 L"

// Product of the word's letters; entrywise nonnegative by construction.
Mat2 reconstruct(const RLWord& w);

struct SignedRLClass {
  int sign = 1;  // +1 or -1
  RLWord word;
  bool operator==(const SignedRLClass&) const = default;
};

// Complete SL2(Z)-conjugacy invariant for det 1, |trace| > 2:
// sign * reconstruct(word) is conjugate to the input.
SignedRLClass rl_class(const Mat2& m);

// For trace = +-2 and m != +-I: the unique n != 0 such that
// sign(trace) * m is SL2(Z)-conjugate to (1 n; 0 1).
std::int64_t parabolic_invariant(const Mat2& m);

enum class Group { SL2, GL2 };

// Exact conjugacy decisions; both arguments must have det 1.
bool conjugate_sl2(const Mat2& x, const Mat2& y);
bool conjugate_gl2(const Mat2& x, const Mat2& y);

// Exhaustive search for P with P x P^-1 = y, entries in [-bound, bound] and
// det +-1 (GL2) or +1 (SL2). Deterministic scan: if x == y the identity is
// returned; otherwise entries run through 0, 1, -1, 2, -2, ... and the first
// hit in tuple-lexicographic order (a, b, c, d) wins. Test oracle; cost grows
// with the fourth power of the bound.
std::optional<Mat2> brute_force_conjugator(const Mat2& x, const Mat2& y,
                                           std::int64_t bound,
                                           Group group = Group::GL2);

}  // namespace gofknot
