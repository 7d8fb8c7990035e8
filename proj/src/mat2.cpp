#include "gofknot/mat2.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace gofknot {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw DomainError("int64 overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw DomainError("int64 overflow in subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw DomainError("int64 overflow in multiplication");
  return r;
}

std::int64_t checked_neg(std::int64_t x) {
  if (x == std::numeric_limits<std::int64_t>::min()) throw DomainError("int64 overflow in negation");
  return -x;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2{checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.c)),
              checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.d)),
              checked_add(checked_mul(x.c, y.a), checked_mul(x.d, y.c)),
              checked_add(checked_mul(x.c, y.b), checked_mul(x.d, y.d))};
}

Mat2 operator-(const Mat2& m) {
  return Mat2{checked_neg(m.a), checked_neg(m.b), checked_neg(m.c), checked_neg(m.d)};
}

std::int64_t trace(const Mat2& m) { return checked_add(m.a, m.d); }

std::int64_t det(const Mat2& m) {
  return checked_sub(checked_mul(m.a, m.d), checked_mul(m.b, m.c));
}

Mat2 inverse(const Mat2& m) {
  const std::int64_t s = det(m);
  if (s == 1) return Mat2{m.d, checked_neg(m.b), checked_neg(m.c), m.a};
  if (s == -1) return Mat2{checked_neg(m.d), m.b, m.c, checked_neg(m.a)};
  throw DomainError("inverse requires determinant +-1, got " + std::to_string(s));
}

Mat2 pow(const Mat2& m, std::int64_t n) {
  Mat2 base = m;
  if (n < 0) base = inverse(m);
  std::uint64_t e = n < 0 ? -static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
  Mat2 acc;  // identity
  while (e != 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return acc;
}

std::string to_string(const Mat2& m) {
  return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" +
         std::to_string(m.c) + "," + std::to_string(m.d) + "]]";
}

namespace {

struct MatParser {
  const std::string& s;
  std::size_t i = 0;

  void ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  void expect(char c) {
    ws();
    if (i >= s.size() || s[i] != c)
      throw DomainError("matrix text: expected '" + std::string(1, c) + "' at byte " +
                        std::to_string(i) + " of \"" + s + "\"");
    ++i;
  }
  std::int64_t integer() {
    ws();
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
    if (ec != std::errc() || p == s.data() + i)
      throw DomainError("matrix text: expected integer at byte " + std::to_string(i) +
                        " of \"" + s + "\"");
    i = static_cast<std::size_t>(p - s.data());
    return v;
  }
};

}  // namespace

Mat2 parse_mat2(const std::string& text) {
  MatParser p{text};
  p.expect('[');
  p.expect('[');
  Mat2 m;
  m.a = p.integer();
  p.expect(',');
  m.b = p.integer();
  p.expect(']');
  p.expect(',');
  p.expect('[');
  m.c = p.integer();
  p.expect(',');
  m.d = p.integer();
  p.expect(']');
  p.expect(']');
  p.ws();
  if (p.i != text.size())
    throw DomainError("matrix text: trailing characters at byte " + std::to_string(p.i) +
                      " of \"" + text + "\"");
  return m;
}

std::string to_string(const RLWord& w) {
  std::string out;
  for (const auto& syl : w.syllables) {
    if (!out.empty()) out += ' ';
    out += syl.letter;
    if (syl.exp != 1) out += "^" + std::to_string(syl.exp);
  }
  return out;
}

Mat2 reconstruct(const RLWord& w) {
  Mat2 acc;
  for (const auto& syl : w.syllables) acc = acc * pow(syl.letter == 'R' ? kR : kL, syl.exp);
  return acc;
}

namespace {

// --- exact arithmetic on quadratic irrationals (P + sqrt(D)) / Q ------------
//
// D > 0 and never a perfect square here (D = t^2 - 4 with t > 2 has no square
// values), so comparisons against rationals are strict.

std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) throw InternalError("isqrt of negative value");
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (s > 0 && static_cast<__int128>(s) * s > n) --s;
  while (static_cast<__int128>(s + 1) * (s + 1) <= n) ++s;
  return s;
}

std::int64_t fdiv(std::int64_t x, std::int64_t y) {
  std::int64_t q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

__int128 checked_mul_i128(__int128 x, __int128 y) {
  __int128 r;
  if (__builtin_mul_overflow(x, y, &r))
    throw DomainError("exact conjugacy: intermediate value exceeds supported range");
  return r;
}

// sign of (N + sqrt(D)) where D is positive and not a square
int sign_plus_sqrt(__int128 n, std::int64_t d) {
  if (n >= 0) return 1;
  return checked_mul_i128(n, n) > d ? -1 : 1;
}

// sign of (P + sqrt(D))/Q - k, exact
int cmp_w_int(std::int64_t p, std::int64_t q, std::int64_t d, std::int64_t k) {
  const __int128 n = static_cast<__int128>(p) - static_cast<__int128>(k) * q;
  return sign_plus_sqrt(n, d) * (q > 0 ? 1 : -1);
}

// sign of Q/(P + sqrt(D)) - k for k >= 1, exact:
// 1/w - k = ((Q - kP) - k sqrt(D)) / (P + sqrt(D))
int cmp_inv_w_int(std::int64_t p, std::int64_t q, std::int64_t d, std::int64_t k) {
  const __int128 n = static_cast<__int128>(q) - static_cast<__int128>(k) * p;
  int num;
  if (n <= 0) {
    num = -1;
  } else {
    const __int128 k2d = checked_mul_i128(checked_mul_i128(k, k), d);
    num = checked_mul_i128(n, n) > k2d ? 1 : -1;  // equality impossible, D nonsquare
  }
  return num * sign_plus_sqrt(p, d);
}

// floor(Q/(P + sqrt(D))) when 0 < (P + sqrt(D))/Q < 1, via monotone exact
// comparisons (no rationalization, whose coefficients can overflow).
std::int64_t inv_qfloor(std::int64_t p, std::int64_t q, std::int64_t d) {
  if (cmp_inv_w_int(p, q, d, 1) < 0) throw InternalError("inv_qfloor: 1/w < 1");
  std::int64_t lo = 1, hi = 2;  // invariant: 1/w > lo
  while (cmp_inv_w_int(p, q, d, hi) > 0) {
    lo = hi;
    if (hi > (std::int64_t{1} << 61)) throw InternalError("inv_qfloor failed to converge");
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (cmp_inv_w_int(p, q, d, mid) > 0 ? lo : hi) = mid;
  }
  return lo;
}

// floor((P + sqrt(D))/Q), exact
std::int64_t qfloor(std::int64_t p, std::int64_t q, std::int64_t d) {
  if (q == 0) throw InternalError("qfloor with zero denominator");
  const std::int64_t s = isqrt64(d);
  std::int64_t g = fdiv(checked_add(p, q > 0 ? s : s + 1), q);
  int guard = 0;
  while (cmp_w_int(p, q, d, g) < 0) {
    --g;
    if (++guard > 64) throw InternalError("qfloor failed to converge");
  }
  while (cmp_w_int(p, q, d, g + 1) >= 0) {
    ++g;
    if (++guard > 64) throw InternalError("qfloor failed to converge");
  }
  return g;
}

bool nonnegative(const Mat2& m) { return m.a >= 0 && m.b >= 0 && m.c >= 0 && m.d >= 0; }

// M <- R^-k M R^k (any integer k)
Mat2 conj_r(const Mat2& m, std::int64_t k) {
  const std::int64_t a = checked_sub(m.a, checked_mul(k, m.c));
  const std::int64_t b = checked_sub(m.b, checked_mul(k, m.d));
  return Mat2{a, checked_add(checked_mul(k, a), b), m.c, checked_add(checked_mul(k, m.c), m.d)};
}

// M <- L^-k M L^k (any integer k)
Mat2 conj_l(const Mat2& m, std::int64_t k) {
  const std::int64_t c = checked_sub(m.c, checked_mul(k, m.a));
  const std::int64_t d = checked_sub(m.d, checked_mul(k, m.b));
  return Mat2{checked_add(m.a, checked_mul(k, m.b)), m.b, checked_add(c, checked_mul(k, d)), d};
}

// Conjugate a trace > 2 matrix into the nonnegative cone by following the
// Stern-Brocot expansion of its attracting fixed point
// w = ((a - d) + sqrt(t^2 - 4)) / (2c). Each batched step is one continued
// fraction partial quotient; once w's expansion turns purely periodic the
// matrix is literally a positive word in R and L, so the loop exits.
Mat2 reduce_to_nonnegative(Mat2 m) {
  const std::int64_t t = trace(m);
  const std::int64_t d2 = checked_sub(checked_mul(t, t), 4);
  for (int guard = 0; !nonnegative(m); ++guard) {
    if (guard > 100000) throw InternalError("RL reduction failed to terminate");
    // |trace| > 2 forces c != 0 (c = 0 implies a*d = 1, trace +-2)
    const std::int64_t p = checked_sub(m.a, m.d);
    const std::int64_t q = checked_mul(2, m.c);
    if (cmp_w_int(p, q, d2, 0) < 0) {
      m = conj_r(m, qfloor(p, q, d2));  // w < 0: shift up into (0,1)
    } else if (cmp_w_int(p, q, d2, 1) > 0) {
      m = conj_r(m, qfloor(p, q, d2));  // w > 1: strip the integer part
    } else {
      // 0 < w < 1: strip floor(1/w) Farey steps at once.
      m = conj_l(m, inv_qfloor(p, q, d2));
    }
  }
  return m;
}

// Peel a nonnegative det-1 matrix into its unique R/L word (batched Euclid on
// rows: for such a matrix one row dominates the other componentwise).
std::vector<RLWord::Syllable> peel(Mat2 m) {
  std::vector<RLWord::Syllable> out;
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();
  while (!(m == kIdentity)) {
    if (m.c <= m.a && m.d <= m.b) {
      const std::int64_t k = std::min(m.c > 0 ? fdiv(m.a, m.c) : inf, m.d > 0 ? fdiv(m.b, m.d) : inf);
      if (k < 1 || k == inf) throw InternalError("peel: R step stalled");
      out.push_back({'R', k});
      m.a -= k * m.c;
      m.b -= k * m.d;
    } else if (m.a <= m.c && m.b <= m.d) {
      const std::int64_t k = std::min(m.a > 0 ? fdiv(m.c, m.a) : inf, m.b > 0 ? fdiv(m.d, m.b) : inf);
      if (k < 1 || k == inf) throw InternalError("peel: L step stalled");
      out.push_back({'L', k});
      m.c -= k * m.a;
      m.d -= k * m.b;
    } else {
      throw InternalError("peel: neither row dominates in nonnegative matrix");
    }
  }
  return out;
}

// Canonical rotation of a cyclic alternating syllable word: flattened-string
// least rotation with R < L. The least rotation starts at an R-run boundary,
// and comparing flattened rotations run-by-run amounts to: longer R-run wins,
// then shorter L-run wins.
std::vector<RLWord::Syllable> canonical_rotation(std::vector<RLWord::Syllable> syl) {
  if (syl.size() >= 2 && syl.front().letter == syl.back().letter) {
    syl.front().exp = checked_add(syl.front().exp, syl.back().exp);  // cyclic merge
    syl.pop_back();
  }
  const std::size_t n = syl.size();
  if (n < 2) throw InternalError("canonical_rotation: word must use both letters");
  auto less_rotation = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& x = syl[(i + k) % n];
      const auto& y = syl[(j + k) % n];
      if (x.exp == y.exp) continue;
      return x.letter == 'R' ? x.exp > y.exp : x.exp < y.exp;
    }
    return false;
  };
  std::size_t best = syl[0].letter == 'R' ? 0 : 1;
  for (std::size_t i = best + 2; i < n; i += 2)
    if (less_rotation(i, best)) best = i;
  std::vector<RLWord::Syllable> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(syl[(best + k) % n]);
  return out;
}

}  // namespace

SignedRLClass rl_class(const Mat2& m) {
  if (det(m) != 1) throw DomainError("rl_class requires determinant 1");
  const std::int64_t t = trace(m);
  if (t >= -2 && t <= 2)
    throw DomainError("rl_class requires |trace| > 2, got trace " + std::to_string(t));
  SignedRLClass cls;
  cls.sign = t > 0 ? 1 : -1;
  const Mat2 reduced = reduce_to_nonnegative(cls.sign > 0 ? m : -m);
  cls.word.syllables = canonical_rotation(peel(reduced));
  return cls;
}

namespace {

// extended gcd: returns g = gcd(|x|, |y|) and coefficients with s*x + t*y = g
struct Egcd {
  std::int64_t g, s, t;
};

Egcd egcd(std::int64_t x, std::int64_t y) {
  std::int64_t r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  return {r0, s0, t0};
}

}  // namespace

std::int64_t parabolic_invariant(const Mat2& m) {
  const std::int64_t t = trace(m);
  if (t != 2 && t != -2) throw DomainError("parabolic_invariant requires trace +-2");
  if (det(m) != 1) throw DomainError("parabolic_invariant requires determinant 1");
  const Mat2 u = t > 0 ? m : -m;  // trace 2
  if (u == kIdentity) throw DomainError("parabolic_invariant: matrix is central");
  // primitive eigenvector v with u v = v, from a nonzero row of u - I
  std::int64_t v1, v2;
  if (u.a != 1 || u.b != 0) {
    v1 = u.b;
    v2 = checked_sub(1, u.a);
  } else {
    v1 = checked_sub(1, u.d);
    v2 = u.c;
  }
  const std::int64_t g = std::gcd(std::llabs(v1), std::llabs(v2));
  v1 /= g;
  v2 /= g;
  // complete v to an SL2 basis P = (v u'), then P^-1 u P = (1 n; 0 1)
  const Egcd e = egcd(v1, v2);  // v1*s + v2*t = 1
  const Mat2 basis{v1, checked_neg(e.t), v2, e.s};
  const Mat2 normal = inverse(basis) * u * basis;
  if (normal.a != 1 || normal.c != 0 || normal.d != 1 || normal.b == 0)
    throw InternalError("parabolic normal form is not (1 n; 0 1)");
  return normal.b;
}

namespace {

bool conjugate_sl2_checked(const Mat2& x, const Mat2& y) {
  const std::int64_t t = trace(x);
  if (t != trace(y)) return false;
  if (t > 2 || t < -2) return rl_class(x) == rl_class(y);
  if (t == 2 || t == -2) {
    const bool xc = x == kIdentity || x == -kIdentity;
    const bool yc = y == kIdentity || y == -kIdentity;
    if (xc || yc) return x == y;  // +-I is alone in its class
    return parabolic_invariant(x) == parabolic_invariant(y);
  }
  // |trace| < 2: finite order. Exactly two classes per trace, told apart by
  // the rotation orientation sign(c) (c = 0 is impossible at these traces).
  return (x.c > 0) == (y.c > 0);
}

}  // namespace

bool conjugate_sl2(const Mat2& x, const Mat2& y) {
  if (det(x) != 1 || det(y) != 1)
    throw DomainError("conjugacy is decided only for determinant-1 matrices");
  return conjugate_sl2_checked(x, y);
}

bool conjugate_gl2(const Mat2& x, const Mat2& y) {
  if (det(x) != 1 || det(y) != 1)
    throw DomainError("conjugacy is decided only for determinant-1 matrices");
  if (conjugate_sl2_checked(x, y)) return true;
  return conjugate_sl2_checked(Mat2{x.a, checked_neg(x.b), checked_neg(x.c), x.d}, y);
}

std::optional<Mat2> brute_force_conjugator(const Mat2& x, const Mat2& y, std::int64_t bound,
                                           Group group) {
  if (bound < 0) throw DomainError("brute_force_conjugator: bound must be >= 0");
  if (x == y) return kIdentity;
  // entry order 0, 1, -1, 2, -2, ...
  std::vector<std::int64_t> vals;
  vals.reserve(static_cast<std::size_t>(2 * bound + 1));
  vals.push_back(0);
  for (std::int64_t v = 1; v <= bound; ++v) {
    vals.push_back(v);
    vals.push_back(-v);
  }
  for (std::int64_t pa : vals)
    for (std::int64_t pb : vals)
      for (std::int64_t pc : vals)
        for (std::int64_t pd : vals) {
          const Mat2 p{pa, pb, pc, pd};
          const std::int64_t dp = det(p);
          if (group == Group::SL2 ? dp != 1 : (dp != 1 && dp != -1)) continue;
          if (p * x == y * p) return p;
        }
  return std::nullopt;
}

}  // namespace gofknot
