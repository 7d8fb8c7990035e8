// Genus-one fibered knots in lens spaces: which canonical L(alpha,beta)
// contain them, their 3-braid presentations and monodromies, and the
// eight-row closed-form table.
//
// The classification: L(4,1) carries exactly three such knots (A1, A2, A3);
// every other L(alpha,1) with alpha > 0 carries exactly two (B1, B2 with
// braids s1^alpha s2^{+-1}); L(0,1) carries exactly one (C); and L(alpha,beta)
// carries exactly one when beta ~ 2q+1 and alpha = 2pq+p+q with p,q > 1 (D1)
// or alpha = 2pq+p+q+1 with p,q > 0 (D2); no other lens space carries any.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gofknot/braid.hpp"
#include "gofknot/lens.hpp"
#include "gofknot/mat2.hpp"

namespace gofknot {

enum class KnotLabel { A1, A2, A3, B1, B2, C, D1, D2 };

std::string to_string(KnotLabel label);
std::optional<KnotLabel> knot_label_from_string(const std::string& text);

struct KnotParams {
  std::optional<std::int64_t> alpha;  // B1/B2
  std::optional<std::int64_t> p, q;   // D1/D2, stored with p <= q
  bool operator==(const KnotParams&) const = default;
};

struct GofKnot {
  KnotLabel label = KnotLabel::C;
  KnotParams params;
  BraidWord braid;
  Mat2 matrix;  // always monodromy(braid)
  std::int64_t trace = 0;
  LensSpace ambient;  // canonical
  bool operator==(const GofKnot&) const = default;
};

// All genus-one fibered knots in the canonical lens space l, in label order.
// Throws DomainError unless l is exactly a normalize() output.
std::vector<GofKnot> classify(const LensSpace& l);

// Identify the knot presented by a braid word (after free reduction) matching
// one of the eight templates, verifying it lives in the claimed ambient
// space. The braid is kept as given; D-family params are stored sorted.
GofKnot knot_from_braid(const BraidWord& w, const LensSpace& ambient);

// Display form of the closed-form table.
struct Table1Row {
  KnotLabel label;
  std::string braid_template;
  std::array<std::string, 4> matrix_template;  // row-major entries
  std::string trace_template;
  bool parametric = false;
};
std::vector<Table1Row> table1();

// Closed forms instantiated at concrete parameters; each validates the
// parameter set for its label (B1/B2: alpha >= 1; D1: p,q >= 2; D2: p,q >= 1;
// A1/A2/A3/C: no parameters).
BraidWord table1_braid(KnotLabel label, const KnotParams& params);
Mat2 table1_matrix(KnotLabel label, const KnotParams& params);
std::int64_t table1_trace(KnotLabel label, const KnotParams& params);

// The two families of monodromies whose integral surgeries are all
// left-orderable: family 1 is (1+a, a; 1, 1) for a > 0, family 2 is the D2
// closed form for p, q > 0.
Mat2 family_matrix(int family, std::int64_t a_or_p,
                   std::optional<std::int64_t> q = std::nullopt);

}  // namespace gofknot
