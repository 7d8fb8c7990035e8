#include "gofknot/lens.hpp"

#include <algorithm>
#include <numeric>

namespace gofknot {

namespace {

// x mod m in [0, m) for m > 0
std::int64_t pmod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

// inverse of x modulo m, for gcd(x, m) = 1, m >= 2
std::int64_t inv_mod(std::int64_t x, std::int64_t m) {
  std::int64_t r0 = x, r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1 && r0 != -1) throw InternalError("inv_mod: arguments not coprime");
  return pmod(r0 == 1 ? s0 : -s0, m);
}

}  // namespace

LensSpace normalize(std::int64_t alpha, std::int64_t beta) {
  if (alpha < 0) {
    alpha = checked_neg(alpha);
    beta = checked_neg(beta);
  }
  if (alpha == 0) {
    if (beta != 1 && beta != -1)
      throw DomainError("L(0," + std::to_string(beta) +
                        ") is not a lens space: gcd(0, beta) must be 1");
    return LensSpace{0, 1};
  }
  const std::int64_t b = pmod(beta, alpha);
  if (std::gcd(alpha, b) != 1)
    throw DomainError("L(" + std::to_string(alpha) + "," + std::to_string(beta) +
                      "): alpha and beta must be coprime");
  if (alpha == 1) return LensSpace{1, 0};
  const std::int64_t binv = inv_mod(b, alpha);
  const std::int64_t least =
      std::min({b, alpha - b, binv, alpha - binv});
  return LensSpace{alpha, least};
}

bool homeomorphic(std::int64_t alpha1, std::int64_t beta1, std::int64_t alpha2,
                  std::int64_t beta2) {
  return normalize(alpha1, beta1) == normalize(alpha2, beta2);
}

std::string to_string(const LensSpace& l) {
  return "L(" + std::to_string(l.alpha) + "," + std::to_string(l.beta) + ")";
}

Rational cf_eval(const std::vector<std::int64_t>& terms) {
  if (terms.empty()) throw DomainError("cf_eval: empty continued fraction");
  // fold t_i = a_i + 1/t_{i+1} as exact fractions num/den; the result is 1/t_1
  std::int64_t num = terms.back(), den = 1;
  for (std::size_t i = terms.size() - 1; i-- > 0;) {
    if (num == 0)
      throw DomainError("cf_eval: zero intermediate denominator");
    const std::int64_t next = checked_add(checked_mul(terms[i], num), den);
    den = num;
    num = next;
  }
  if (num == 0) throw DomainError("cf_eval: expression has zero denominator");
  Rational r{den, num};
  if (r.den < 0) {
    r.num = checked_neg(r.num);
    r.den = checked_neg(r.den);
  }
  // Euclid on the raw values; sidesteps the INT64_MIN absolute-value trap.
  std::int64_t x = r.num, y = r.den;
  while (y != 0) {
    x %= y;
    std::swap(x, y);
  }
  const std::int64_t g = x < 0 ? -x : x;
  r.num /= g;
  r.den /= g;
  return r;
}

LensSpace double_branched_cover(const TwoBridgeLabel& b) { return normalize(b.alpha, b.beta); }

}  // namespace gofknot
