#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "gofknot/lens.hpp"

using namespace gofknot;

namespace {

// independent oracle: the orbit {+-b^{+-1} mod a} computed by direct scans
std::set<std::int64_t> orbit(std::int64_t a, std::int64_t b) {
  std::set<std::int64_t> out;
  const std::int64_t r = ((b % a) + a) % a;
  out.insert(r);
  out.insert((a - r) % a);
  for (std::int64_t x = 1; x < a; ++x)
    if ((__int128)x * r % a == 1) {
      out.insert(x);
      out.insert(a - x);
    }
  return out;
}

}  // namespace

TEST_CASE("normalize pinned examples") {
  CHECK(normalize(4, 3) == LensSpace{4, 1});
  CHECK(normalize(1, 1) == LensSpace{1, 0});
  CHECK(normalize(1, 0) == LensSpace{1, 0});
  CHECK(normalize(5, 3) == LensSpace{5, 2});
  CHECK(normalize(5, 2) == LensSpace{5, 2});
  CHECK(normalize(0, 1) == LensSpace{0, 1});
  CHECK(normalize(0, -1) == LensSpace{0, 1});
  CHECK(normalize(-5, 2) == LensSpace{5, 2});
  CHECK(normalize(12, 5) == LensSpace{12, 5});
  CHECK(normalize(12, 7) == LensSpace{12, 5});
  CHECK(normalize(7, 9) == LensSpace{7, 2});
  CHECK(to_string(LensSpace{4, 1}) == "L(4,1)");
}

TEST_CASE("normalize rejects non-coprime pairs") {
  CHECK_THROWS_AS(normalize(4, 2), DomainError);
  CHECK_THROWS_AS(normalize(0, 2), DomainError);
  CHECK_THROWS_AS(normalize(0, 0), DomainError);
  CHECK_THROWS_AS(normalize(6, 3), DomainError);
  CHECK_THROWS_AS(normalize(9, 0), DomainError);
}

TEST_CASE("normalize is idempotent and picks the least orbit element (property, 1000 cases)") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::int64_t> pick_a(2, 400);
  std::uniform_int_distribution<std::int64_t> pick_b(-2000, 2000);
  int done = 0;
  while (done < 1000) {
    const std::int64_t a = pick_a(rng);
    const std::int64_t b = pick_b(rng);
    if (std::gcd(a, ((b % a) + a) % a) != 1) continue;
    ++done;
    const LensSpace l = normalize(a, b);
    CHECK(normalize(l.alpha, l.beta) == l);
    CHECK(l.beta == *orbit(a, b).begin());
    // every element of the orbit is homeomorphic to the original
    for (std::int64_t x : orbit(a, b)) {
      if (std::gcd(a, x) != 1) continue;  // 0 appears only for alpha = 1
      CHECK(homeomorphic(a, b, a, x));
    }
    CHECK(homeomorphic(a, b, a, b + a));
    CHECK(homeomorphic(a, b, a, -b));
    CHECK(homeomorphic(a, b, -a, b));
  }
}

TEST_CASE("homeomorphism classes partition coprime pairs (alpha <= 30)") {
  for (std::int64_t a = 2; a <= 30; ++a)
    for (std::int64_t b1 = 1; b1 < a; ++b1) {
      if (std::gcd(a, b1) != 1) continue;
      for (std::int64_t b2 = 1; b2 < a; ++b2) {
        if (std::gcd(a, b2) != 1) continue;
        CHECK(homeomorphic(a, b1, a, b2) == (orbit(a, b1) == orbit(a, b2)));
      }
    }
  CHECK_FALSE(homeomorphic(7, 2, 7, 1));
  CHECK_FALSE(homeomorphic(5, 1, 4, 1));
}

TEST_CASE("cf_eval pinned values and failure modes") {
  CHECK(cf_eval({2, 2, 2}) == Rational{5, 12});
  CHECK(cf_eval({1, 2, -2}) == Rational{3, 5});
  CHECK(cf_eval({4}) == Rational{1, 4});
  CHECK(cf_eval({-4}) == Rational{-1, 4});
  CHECK(cf_eval({1, 1}) == Rational{1, 2});
  CHECK_THROWS_AS(cf_eval({}), DomainError);
  CHECK_THROWS_AS(cf_eval({2, 0}), DomainError);
  CHECK_THROWS_AS(cf_eval({1, -1}), DomainError);
  CHECK_THROWS_AS(cf_eval({0}), DomainError);
}

TEST_CASE("cf_eval matches the two families of surgery descriptions") {
  for (std::int64_t p = 1; p <= 20; ++p)
    for (std::int64_t q = 1; q <= 20; ++q) {
      CHECK(cf_eval({p, 2, q}) == Rational{2 * q + 1, 2 * p * q + p + q});
      CHECK(cf_eval({p, 2, -q - 1}) == Rational{2 * q + 1, 2 * p * q + p + q + 1});
    }
}

TEST_CASE("double branched covers of two-bridge labels") {
  CHECK(double_branched_cover(TwoBridgeLabel{0, 1}) == LensSpace{0, 1});
  CHECK(double_branched_cover(TwoBridgeLabel{4, 3}) == LensSpace{4, 1});
  CHECK(double_branched_cover(TwoBridgeLabel{12, 5}) == LensSpace{12, 5});
  CHECK_THROWS_AS(double_branched_cover(TwoBridgeLabel{4, 2}), DomainError);
}
