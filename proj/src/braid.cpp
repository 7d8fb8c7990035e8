#include "gofknot/braid.hpp"

#include <charconv>

namespace gofknot {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t'; }

[[noreturn]] void parse_fail(const std::string& text, std::size_t at, const std::string& what) {
  throw DomainError("braid text: " + what + " at byte " + std::to_string(at) + " of \"" + text +
                    "\"");
}

}  // namespace

BraidWord parse_braid(const std::string& text) {
  BraidWord w;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n && is_space(text[i])) ++i;
  while (i < n) {
    // generator: "s1", "s2", or the UTF-8 sigma forms
    int gen = 0;
    if (text[i] == 's' && i + 1 < n && (text[i + 1] == '1' || text[i + 1] == '2')) {
      gen = text[i + 1] - '0';
      i += 2;
    } else if (static_cast<unsigned char>(text[i]) == 0xCF && i + 2 < n &&
               static_cast<unsigned char>(text[i + 1]) == 0x83 &&
               (text[i + 2] == '1' || text[i + 2] == '2')) {
      gen = text[i + 2] - '0';
      i += 3;
    } else {
      parse_fail(text, i, "expected generator s1, s2, σ1, or σ2");
    }
    std::int64_t exp = 1;
    if (i < n && text[i] == '^') {
      ++i;
      const std::size_t at = i;
      auto [p, ec] = std::from_chars(text.data() + i, text.data() + n, exp);
      if (ec == std::errc::result_out_of_range)
        parse_fail(text, at, "exponent does not fit in 64 bits");
      if (ec != std::errc() || p == text.data() + i) parse_fail(text, at, "expected integer exponent");
      if (exp == 0) parse_fail(text, at, "zero exponent");
      i = static_cast<std::size_t>(p - text.data());
    }
    w.syllables.push_back({gen, exp});
    if (i < n && !is_space(text[i])) parse_fail(text, i, "expected whitespace between syllables");
    while (i < n && is_space(text[i])) ++i;
  }
  return w;
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (const auto& syl : w.syllables) {
    if (!out.empty()) out += ' ';
    out += 's';
    out += static_cast<char>('0' + syl.gen);
    if (syl.exp != 1) out += "^" + std::to_string(syl.exp);
  }
  return out;
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  BraidWord out = u;
  out.syllables.insert(out.syllables.end(), v.syllables.begin(), v.syllables.end());
  return out;
}

BraidWord invert(const BraidWord& u) {
  BraidWord out;
  out.syllables.reserve(u.syllables.size());
  for (auto it = u.syllables.rbegin(); it != u.syllables.rend(); ++it)
    out.syllables.push_back({it->gen, checked_neg(it->exp)});
  return out;
}

BraidWord free_reduce(const BraidWord& u) {
  BraidWord out;
  for (const auto& syl : u.syllables) {
    if (!out.syllables.empty() && out.syllables.back().gen == syl.gen) {
      const std::int64_t e = checked_add(out.syllables.back().exp, syl.exp);
      if (e == 0)
        out.syllables.pop_back();  // cancellation may expose a new merge
      else
        out.syllables.back().exp = e;
    } else {
      out.syllables.push_back(syl);
    }
  }
  return out;
}

std::int64_t exponent_sum(const BraidWord& u) {
  std::int64_t s = 0;
  for (const auto& syl : u.syllables) s = checked_add(s, syl.exp);
  return s;
}

Mat2 monodromy(const BraidWord& w) {
  Mat2 acc;
  for (const auto& syl : w.syllables)
    acc = acc * pow(syl.gen == 1 ? kSigma1Image : kSigma2Image, syl.exp);
  return acc;
}

}  // namespace gofknot
