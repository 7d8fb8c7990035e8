#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "gofknot/baker.hpp"
#include "gofknot/braid.hpp"
#include "gofknot/lens.hpp"
#include "gofknot/mat2.hpp"

using namespace gofknot;

namespace {

KnotParams of_alpha(std::int64_t alpha) {
  KnotParams p;
  p.alpha = alpha;
  return p;
}

KnotParams of_pq(std::int64_t p, std::int64_t q) {
  KnotParams k;
  k.p = p;
  k.q = q;
  return k;
}

std::vector<std::string> labels_of(const std::vector<GofKnot>& knots) {
  std::vector<std::string> out;
  for (const auto& k : knots) out.push_back(to_string(k.label));
  return out;
}

// Independent oracle for the count law: enumerate the solvable spaces by
// forward application of the ambient formulas (the reverse direction of
// classify's orbit search), then predict every canonical space's knot count
// without calling classify's case analysis.
std::map<LensSpace, int> predicted_counts(std::int64_t max_alpha,
                                          std::set<LensSpace>* d_spaces) {
  std::set<LensSpace> solvable;
  for (std::int64_t p = 2;; ++p) {
    std::int64_t alpha_min = 2 * p * p + 2 * p;  // q = p is the smallest
    if (alpha_min > max_alpha) break;
    for (std::int64_t q = p; 2 * p * q + p + q <= max_alpha; ++q) {
      solvable.insert(normalize(2 * p * q + p + q, 2 * q + 1));
    }
  }
  for (std::int64_t p = 1;; ++p) {
    std::int64_t alpha_min = 2 * p * p + 2 * p + 1;
    if (alpha_min > max_alpha) break;
    for (std::int64_t q = p; 2 * p * q + p + q + 1 <= max_alpha; ++q) {
      solvable.insert(normalize(2 * p * q + p + q + 1, 2 * q + 1));
    }
  }
  if (d_spaces != nullptr) *d_spaces = solvable;

  std::map<LensSpace, int> counts;
  for (std::int64_t alpha = 0; alpha <= max_alpha; ++alpha) {
    std::int64_t beta_lo = alpha == 0 ? 1 : 0;
    std::int64_t beta_hi = alpha == 0 ? 1 : alpha - 1;
    for (std::int64_t beta = beta_lo; beta <= beta_hi; ++beta) {
      if (alpha > 0 && std::gcd(alpha, beta) != 1) continue;
      LensSpace l = normalize(alpha, beta);
      if (counts.count(l)) continue;
      int expect = 0;
      if (alpha == 0) {
        expect = 1;
      } else if (l.alpha == 4) {
        expect = 3;
      } else if (l.beta == 1 || l.alpha == 1) {
        expect = 2;
      } else if (solvable.count(l)) {
        expect = 1;
      }
      counts[l] = expect;
    }
  }
  return counts;
}

}  // namespace

TEST_CASE("classify: pinned spaces") {
  auto s3 = classify(LensSpace{1, 0});
  REQUIRE(s3.size() == 2);
  CHECK(s3[0].label == KnotLabel::B1);  // trefoil axis
  CHECK(s3[1].label == KnotLabel::B2);  // figure-eight axis
  CHECK(to_string(s3[0].braid) == "s1 s2");
  CHECK(to_string(s3[1].braid) == "s1 s2^-1");
  CHECK(s3[0].trace == 1);
  CHECK(s3[1].trace == 3);
  CHECK(s3[0].params == of_alpha(1));

  auto sphere_bundle = classify(LensSpace{0, 1});
  REQUIRE(sphere_bundle.size() == 1);
  CHECK(sphere_bundle[0].label == KnotLabel::C);
  CHECK(to_string(sphere_bundle[0].braid) == "s2");
  CHECK(sphere_bundle[0].matrix == (Mat2{1, 0, -1, 1}));
  CHECK(sphere_bundle[0].params == KnotParams{});

  auto four = classify(LensSpace{4, 1});
  REQUIRE(labels_of(four) == std::vector<std::string>{"A1", "A2", "A3"});
  CHECK(four[0].matrix == (Mat2{-3, 4, -1, 1}));
  CHECK(four[1].matrix == (Mat2{5, 4, 1, 1}));
  CHECK(four[2].matrix == (Mat2{-1, 0, -3, -1}));
  CHECK(four[0].trace == -2);
  CHECK(four[1].trace == 6);
  CHECK(four[2].trace == -2);
  for (const auto& k : four) CHECK(k.ambient == (LensSpace{4, 1}));

  auto d1 = classify(LensSpace{12, 5});
  REQUIRE(d1.size() == 1);
  CHECK(d1[0].label == KnotLabel::D1);
  CHECK(d1[0].params == of_pq(2, 2));
  CHECK(to_string(d1[0].braid) == "s1^2 s2^2 s1^2 s2^-1");
  CHECK(d1[0].matrix == (Mat2{-7, -4, -5, -3}));
  CHECK(d1[0].trace == -10);

  auto d2 = classify(LensSpace{5, 2});
  REQUIRE(d2.size() == 1);
  CHECK(d2[0].label == KnotLabel::D2);
  CHECK(d2[0].params == of_pq(1, 1));
  CHECK(to_string(d2[0].braid) == "s1 s2^2 s1^-2 s2^-1");
  CHECK(d2[0].matrix == (Mat2{2, 3, 3, 5}));
  CHECK(d2[0].trace == 7);

  CHECK(classify(LensSpace{7, 2}).empty());

  // Asymmetric D1 parameters: (p,q)=(2,3) gives alpha=17, beta=7, whose
  // canonical form is (17,5); the orbit search must recover (2,3).
  auto d1b = classify(normalize(17, 7));
  REQUIRE(d1b.size() == 1);
  CHECK(d1b[0].label == KnotLabel::D1);
  CHECK(d1b[0].params == of_pq(2, 3));
  CHECK(d1b[0].ambient == (LensSpace{17, 5}));
}

TEST_CASE("classify: rejects non-canonical input") {
  CHECK_THROWS_AS(classify(LensSpace{4, 3}), DomainError);
  CHECK_THROWS_AS(classify(LensSpace{5, 3}), DomainError);
  CHECK_THROWS_AS(classify(LensSpace{12, 7}), DomainError);
  CHECK_THROWS_AS(classify(LensSpace{-5, 2}), DomainError);
  CHECK_THROWS_AS(classify(LensSpace{0, 3}), DomainError);
  CHECK_THROWS_AS(classify(LensSpace{6, 2}), DomainError);
}

TEST_CASE("classify: count law vs forward-enumeration oracle, alpha <= 120") {
  std::set<LensSpace> d_spaces;
  auto expected = predicted_counts(120, &d_spaces);
  REQUIRE(expected.size() > 1000);  // canonical spaces only

  int checked_nonzero = 0;
  for (const auto& [space, count] : expected) {
    auto knots = classify(space);
    CHECK(static_cast<int>(knots.size()) == count);
    if (count == 1 && space.alpha > 0) {
      CHECK((knots[0].label == KnotLabel::D1 ||
             knots[0].label == KnotLabel::D2));
    }
    if (count > 0) ++checked_nonzero;
    for (const auto& k : knots) {
      CHECK(k.ambient == space);
      CHECK(k.matrix == monodromy(k.braid));
      CHECK(k.trace == trace(k.matrix));
      CHECK(det(k.matrix) == 1);
    }
  }
  CHECK(checked_nonzero > 100);
  CHECK(d_spaces.count(LensSpace{12, 5}) == 1);
  CHECK(d_spaces.count(LensSpace{5, 2}) == 1);
  CHECK(d_spaces.count(LensSpace{7, 2}) == 0);
}

TEST_CASE("classify: D-family parameter swap lands on the same knot") {
  for (std::int64_t p = 2; p <= 9; ++p) {
    for (std::int64_t q = p; q <= 9; ++q) {
      LensSpace from_pq = normalize(2 * p * q + p + q, 2 * q + 1);
      LensSpace from_qp = normalize(2 * p * q + p + q, 2 * p + 1);
      CHECK(from_pq == from_qp);
      auto knots = classify(from_pq);
      REQUIRE(knots.size() == 1);
      CHECK(knots[0].label == KnotLabel::D1);
      CHECK(knots[0].params == of_pq(p, q));
    }
  }
  for (std::int64_t p = 1; p <= 9; ++p) {
    for (std::int64_t q = p; q <= 9; ++q) {
      LensSpace from_pq = normalize(2 * p * q + p + q + 1, 2 * q + 1);
      LensSpace from_qp = normalize(2 * p * q + p + q + 1, 2 * p + 1);
      CHECK(from_pq == from_qp);
      auto knots = classify(from_pq);
      REQUIRE(knots.size() == 1);
      CHECK(knots[0].label == KnotLabel::D2);
      CHECK(knots[0].params == of_pq(p, q));
    }
  }
}

TEST_CASE("classify: trace signs by label") {
  for (std::int64_t alpha = 0; alpha <= 60; ++alpha) {
    for (std::int64_t beta = 0; beta <= std::max<std::int64_t>(alpha - 1, 1);
         ++beta) {
      if (alpha > 0 && std::gcd(alpha, beta) != 1) continue;
      if (alpha == 0 && beta != 1) continue;
      LensSpace l = normalize(alpha, beta);
      for (const auto& k : classify(l)) {
        switch (k.label) {
          case KnotLabel::A2:
          case KnotLabel::B2:
          case KnotLabel::D2:
            CHECK(k.trace > 2);
            break;
          case KnotLabel::D1:
            CHECK(k.trace < -2);
            break;
          case KnotLabel::B1:
            if (*k.params.alpha > 4) {
              CHECK(k.trace < -2);
            } else {
              CHECK(k.trace >= -1);
              CHECK(k.trace <= 1);
            }
            break;
          case KnotLabel::A1:
          case KnotLabel::A3:
            CHECK(k.trace == -2);
            break;
          case KnotLabel::C:
            CHECK(k.trace == 2);
            break;
        }
      }
    }
  }
}

TEST_CASE("knot_from_braid: pinned and error cases") {
  GofKnot a2 = knot_from_braid(parse_braid("s1^4 s2^-1"), LensSpace{4, 1});
  CHECK(a2.label == KnotLabel::A2);
  CHECK(a2.matrix == (Mat2{5, 4, 1, 1}));
  CHECK(a2.params == KnotParams{});

  GofKnot b1 = knot_from_braid(parse_braid("s1^3 s2"), LensSpace{3, 1});
  CHECK(b1.label == KnotLabel::B1);
  CHECK(b1.params == of_alpha(3));
  CHECK(b1.matrix == (Mat2{-2, 3, -1, 1}));

  // Free reduction is applied before template matching.
  GofKnot c = knot_from_braid(parse_braid("s1 s1^-1 s2"), LensSpace{0, 1});
  CHECK(c.label == KnotLabel::C);

  // Non-canonical ambient is accepted and normalized.
  GofKnot d2 =
      knot_from_braid(parse_braid("s1 s2^2 s1^-2 s2^-1"), LensSpace{5, 3});
  CHECK(d2.label == KnotLabel::D2);
  CHECK(d2.ambient == (LensSpace{5, 2}));

  GofKnot a3 = knot_from_braid(parse_braid("s1 s2^2 s1 s2^-1"),
                               LensSpace{4, 1});
  CHECK(a3.label == KnotLabel::A3);

  CHECK_THROWS_AS(knot_from_braid(parse_braid("s1 s2 s1"), LensSpace{4, 1}),
                  DomainError);
  CHECK_THROWS_AS(knot_from_braid(parse_braid("s1^-2 s2"), LensSpace{2, 1}),
                  DomainError);
  // Mixed-sign four-syllable words outside every template.
  CHECK_THROWS_AS(
      knot_from_braid(parse_braid("s1^2 s2^2 s1 s2^-1"), LensSpace{7, 2}),
      DomainError);
  CHECK_THROWS_AS(
      knot_from_braid(parse_braid("s1 s2^2 s1^-1 s2^-1"), LensSpace{4, 1}),
      DomainError);
  CHECK_THROWS_AS(
      knot_from_braid(parse_braid("s1^2 s2^3 s1^2 s2^-1"), LensSpace{12, 5}),
      DomainError);
  // Right template, wrong ambient space.
  CHECK_THROWS_AS(knot_from_braid(parse_braid("s1^3 s2"), LensSpace{5, 1}),
                  DomainError);
  CHECK_THROWS_AS(
      knot_from_braid(parse_braid("s1 s2^2 s1^-2 s2^-1"), LensSpace{7, 2}),
      DomainError);
}

TEST_CASE("knot_from_braid: round trip with classify over alpha <= 60") {
  int seen = 0;
  for (std::int64_t alpha = 0; alpha <= 60; ++alpha) {
    for (std::int64_t beta = (alpha == 0 ? 1 : 0); beta <= (alpha == 0 ? 1 : alpha - 1);
         ++beta) {
      if (alpha > 0 && std::gcd(alpha, beta) != 1) continue;
      LensSpace l = normalize(alpha, beta);
      if (l.alpha != alpha || l.beta != beta) continue;  // one visit per space
      for (const auto& k : classify(l)) {
        GofKnot back = knot_from_braid(k.braid, k.ambient);
        CHECK(back == k);
        ++seen;
      }
    }
  }
  CHECK(seen > 120);
}

TEST_CASE("table1: concrete rows and closed forms match the braid image") {
  auto rows = table1();
  REQUIRE(rows.size() == 8);
  CHECK(rows[0].label == KnotLabel::A1);
  CHECK(rows[7].label == KnotLabel::D2);
  CHECK(rows[0].matrix_template ==
        (std::array<std::string, 4>{"-3", "4", "-1", "1"}));
  CHECK(rows[5].matrix_template ==
        (std::array<std::string, 4>{"1", "0", "-1", "1"}));
  CHECK(rows[5].trace_template == "2");

  // Concrete rows: matrix equals monodromy of the template braid.
  for (KnotLabel label :
       {KnotLabel::A1, KnotLabel::A2, KnotLabel::A3, KnotLabel::C}) {
    CHECK(table1_matrix(label, {}) == monodromy(table1_braid(label, {})));
    CHECK(table1_trace(label, {}) == trace(table1_matrix(label, {})));
  }

  // Parametric rows: closed form equals the braid image across a sweep.
  for (std::int64_t a = 1; a <= 30; ++a) {
    for (KnotLabel label : {KnotLabel::B1, KnotLabel::B2}) {
      auto params = of_alpha(a);
      Mat2 m = monodromy(table1_braid(label, params));
      CHECK(m == table1_matrix(label, params));
      CHECK(trace(m) == table1_trace(label, params));
    }
  }
  for (std::int64_t p = 2; p <= 8; ++p) {
    for (std::int64_t q = 2; q <= 8; ++q) {
      auto params = of_pq(p, q);
      Mat2 m = monodromy(table1_braid(KnotLabel::D1, params));
      CHECK(m == table1_matrix(KnotLabel::D1, params));
      CHECK(trace(m) == table1_trace(KnotLabel::D1, params));
      CHECK(trace(m) == 2 - q - p * (1 + 2 * q));
    }
  }
  for (std::int64_t p = 1; p <= 8; ++p) {
    for (std::int64_t q = 1; q <= 8; ++q) {
      auto params = of_pq(p, q);
      Mat2 m = monodromy(table1_braid(KnotLabel::D2, params));
      CHECK(m == table1_matrix(KnotLabel::D2, params));
      CHECK(trace(m) == table1_trace(KnotLabel::D2, params));
      CHECK(trace(m) == 3 + p + q + 2 * p * q);
    }
  }

  // The documented D1 spot value.
  CHECK(table1_matrix(KnotLabel::D1, of_pq(2, 2)) == (Mat2{-7, -4, -5, -3}));
  CHECK(table1_trace(KnotLabel::D1, of_pq(2, 2)) == -10);
}

TEST_CASE("table1 closed forms: parameter validation") {
  CHECK_THROWS_AS(table1_braid(KnotLabel::B1, {}), DomainError);
  CHECK_THROWS_AS(table1_braid(KnotLabel::B1, of_alpha(0)), DomainError);
  CHECK_THROWS_AS(table1_braid(KnotLabel::D1, of_pq(1, 2)), DomainError);
  CHECK_THROWS_AS(table1_braid(KnotLabel::D2, of_pq(0, 1)), DomainError);
  CHECK_THROWS_AS(table1_braid(KnotLabel::A1, of_alpha(2)), DomainError);
  CHECK_THROWS_AS(table1_matrix(KnotLabel::C, of_pq(1, 1)), DomainError);
  CHECK_THROWS_AS(table1_trace(KnotLabel::B2, of_pq(1, 1)), DomainError);
}

TEST_CASE("knot label names") {
  CHECK(to_string(KnotLabel::A1) == "A1");
  CHECK(to_string(KnotLabel::D2) == "D2");
  for (KnotLabel label : {KnotLabel::A1, KnotLabel::A2, KnotLabel::A3,
                          KnotLabel::B1, KnotLabel::B2, KnotLabel::C,
                          KnotLabel::D1, KnotLabel::D2}) {
    auto round = knot_label_from_string(to_string(label));
    REQUIRE(round.has_value());
    CHECK(*round == label);
  }
  CHECK(!knot_label_from_string("E1").has_value());
  CHECK(!knot_label_from_string("a1").has_value());
}

TEST_CASE("family_matrix") {
  CHECK(family_matrix(1, 4) == (Mat2{5, 4, 1, 1}));
  CHECK(family_matrix(1, 1) == (Mat2{2, 1, 1, 1}));
  CHECK(family_matrix(2, 1, 1) == (Mat2{2, 3, 3, 5}));
  // Not symmetric in (p,q): both orders are legitimate distinct forms.
  CHECK(family_matrix(2, 3, 1) == (Mat2{8, 13, 3, 5}));
  CHECK(family_matrix(2, 1, 3) == (Mat2{4, 5, 7, 9}));
  CHECK(trace(family_matrix(2, 3, 1)) == trace(family_matrix(2, 1, 3)));

  CHECK_THROWS_AS(family_matrix(1, 0), DomainError);
  CHECK_THROWS_AS(family_matrix(1, 4, 2), DomainError);
  CHECK_THROWS_AS(family_matrix(2, 1), DomainError);
  CHECK_THROWS_AS(family_matrix(2, 0, 1), DomainError);
  CHECK_THROWS_AS(family_matrix(3, 1, 1), DomainError);

  // Emitted B2/D2 knots carry literally these matrices.
  for (std::int64_t a = 1; a <= 25; ++a) {
    if (a == 4) continue;
    auto knots = classify(normalize(a, 1));
    REQUIRE(knots.size() == 2);
    CHECK(knots[1].matrix == family_matrix(1, a));
  }
  auto d2 = classify(LensSpace{5, 2});
  REQUIRE(d2.size() == 1);
  CHECK(d2[0].matrix == family_matrix(2, *d2[0].params.p, *d2[0].params.q));
}
