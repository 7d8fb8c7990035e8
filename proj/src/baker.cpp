#include "gofknot/baker.hpp"

#include <algorithm>
#include <utility>

namespace gofknot {

namespace {

BraidWord braid_from_syllables(std::vector<BraidWord::Syllable> syllables) {
  BraidWord w;
  w.syllables = std::move(syllables);
  return w;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

std::int64_t get_alpha(const KnotParams& params) {
  require(params.alpha.has_value() && !params.p && !params.q,
          "this knot family takes a single parameter alpha");
  require(*params.alpha >= 1, "alpha must be a positive integer");
  return *params.alpha;
}

std::pair<std::int64_t, std::int64_t> get_pq(const KnotParams& params,
                                             std::int64_t min_value) {
  require(params.p.has_value() && params.q.has_value() && !params.alpha,
          "this knot family takes parameters p and q");
  require(*params.p >= min_value && *params.q >= min_value,
          "p and q are out of range for this knot family");
  return {*params.p, *params.q};
}

void require_no_params(const KnotParams& params) {
  require(!params.alpha && !params.p && !params.q,
          "this knot has no parameters");
}

GofKnot make_knot(KnotLabel label, KnotParams params, const LensSpace& l) {
  GofKnot k;
  k.label = label;
  k.params = std::move(params);
  k.braid = table1_braid(label, k.params);
  k.matrix = monodromy(k.braid);
  k.trace = trace(k.matrix);
  if (k.matrix != table1_matrix(label, k.params) ||
      k.trace != table1_trace(label, k.params)) {
    throw InternalError("closed-form table disagrees with the braid image");
  }
  k.ambient = l;
  return k;
}

KnotParams alpha_params(std::int64_t alpha) {
  KnotParams params;
  params.alpha = alpha;
  return params;
}

KnotParams pq_params(std::int64_t p, std::int64_t q) {
  KnotParams params;
  params.p = std::min(p, q);
  params.q = std::max(p, q);
  return params;
}

// The lens space whose surgery presentation the D-family braid encodes:
// (2pq+p+q, 2q+1) for D1 and (2pq+p+q+1, 2q+1) for D2, with p,q as given
// (the formulas are only homeomorphism-symmetric in (p,q), not equal).
LensSpace d_family_space(KnotLabel label, std::int64_t p, std::int64_t q) {
  std::int64_t pq = checked_mul(p, q);
  std::int64_t alpha = checked_add(checked_add(checked_mul(2, pq), p), q);
  if (label == KnotLabel::D2) alpha = checked_add(alpha, 1);
  return normalize(alpha, checked_add(checked_mul(2, q), 1));
}

}  // namespace

std::string to_string(KnotLabel label) {
  switch (label) {
    case KnotLabel::A1: return "A1";
    case KnotLabel::A2: return "A2";
    case KnotLabel::A3: return "A3";
    case KnotLabel::B1: return "B1";
    case KnotLabel::B2: return "B2";
    case KnotLabel::C: return "C";
    case KnotLabel::D1: return "D1";
    case KnotLabel::D2: return "D2";
  }
  throw InternalError("unhandled knot label");
}

std::optional<KnotLabel> knot_label_from_string(const std::string& text) {
  if (text == "A1") return KnotLabel::A1;
  if (text == "A2") return KnotLabel::A2;
  if (text == "A3") return KnotLabel::A3;
  if (text == "B1") return KnotLabel::B1;
  if (text == "B2") return KnotLabel::B2;
  if (text == "C") return KnotLabel::C;
  if (text == "D1") return KnotLabel::D1;
  if (text == "D2") return KnotLabel::D2;
  return std::nullopt;
}

BraidWord table1_braid(KnotLabel label, const KnotParams& params) {
  switch (label) {
    case KnotLabel::A1:
      require_no_params(params);
      return parse_braid("s1^4 s2");
    case KnotLabel::A2:
      require_no_params(params);
      return parse_braid("s1^4 s2^-1");
    case KnotLabel::A3:
      require_no_params(params);
      return parse_braid("s1 s2^2 s1 s2^-1");
    case KnotLabel::B1:
      return braid_from_syllables({{1, get_alpha(params)}, {2, 1}});
    case KnotLabel::B2:
      return braid_from_syllables({{1, get_alpha(params)}, {2, -1}});
    case KnotLabel::C:
      require_no_params(params);
      return parse_braid("s2");
    case KnotLabel::D1: {
      auto [p, q] = get_pq(params, 2);
      return braid_from_syllables({{1, p}, {2, 2}, {1, q}, {2, -1}});
    }
    case KnotLabel::D2: {
      auto [p, q] = get_pq(params, 1);
      return braid_from_syllables(
          {{1, p}, {2, 2}, {1, checked_neg(checked_add(q, 1))}, {2, -1}});
    }
  }
  throw InternalError("unhandled knot label");
}

Mat2 table1_matrix(KnotLabel label, const KnotParams& params) {
  switch (label) {
    case KnotLabel::A1:
      require_no_params(params);
      return Mat2{-3, 4, -1, 1};
    case KnotLabel::A2:
      require_no_params(params);
      return Mat2{5, 4, 1, 1};
    case KnotLabel::A3:
      require_no_params(params);
      return Mat2{-1, 0, -3, -1};
    case KnotLabel::B1: {
      std::int64_t a = get_alpha(params);
      return Mat2{checked_sub(1, a), a, -1, 1};
    }
    case KnotLabel::B2: {
      std::int64_t a = get_alpha(params);
      return Mat2{checked_add(1, a), a, 1, 1};
    }
    case KnotLabel::C:
      require_no_params(params);
      return Mat2{1, 0, -1, 1};
    case KnotLabel::D1: {
      auto [p, q] = get_pq(params, 2);
      std::int64_t pq2 = checked_mul(2, checked_mul(p, q));
      return Mat2{checked_add(checked_sub(checked_sub(1, pq2), p), q),
                  checked_add(checked_sub(q, pq2), p),
                  checked_sub(-1, checked_mul(2, q)),
                  checked_sub(1, checked_mul(2, q))};
    }
    case KnotLabel::D2: {
      auto [p, q] = get_pq(params, 1);
      std::int64_t pq2 = checked_mul(2, checked_mul(p, q));
      return Mat2{checked_sub(checked_add(pq2, p), q),
                  checked_sub(checked_add(pq2, checked_mul(3, p)),
                              checked_add(q, 1)),
                  checked_add(checked_mul(2, q), 1),
                  checked_add(checked_mul(2, q), 3)};
    }
  }
  throw InternalError("unhandled knot label");
}

std::int64_t table1_trace(KnotLabel label, const KnotParams& params) {
  switch (label) {
    case KnotLabel::A1:
    case KnotLabel::A3:
      require_no_params(params);
      return -2;
    case KnotLabel::A2:
      require_no_params(params);
      return 6;
    case KnotLabel::B1:
      return checked_sub(2, get_alpha(params));
    case KnotLabel::B2:
      return checked_add(2, get_alpha(params));
    case KnotLabel::C:
      require_no_params(params);
      return 2;
    case KnotLabel::D1: {
      auto [p, q] = get_pq(params, 2);
      // 2 - q - p(1+2q)
      return checked_sub(checked_sub(2, q),
                         checked_mul(p, checked_add(1, checked_mul(2, q))));
    }
    case KnotLabel::D2: {
      auto [p, q] = get_pq(params, 1);
      // 3 + p + q + 2pq
      return checked_add(checked_add(3, checked_add(p, q)),
                         checked_mul(2, checked_mul(p, q)));
    }
  }
  throw InternalError("unhandled knot label");
}

std::vector<Table1Row> table1() {
  return {
      {KnotLabel::A1, "s1^4 s2", {"-3", "4", "-1", "1"}, "-2", false},
      {KnotLabel::A2, "s1^4 s2^-1", {"5", "4", "1", "1"}, "6", false},
      {KnotLabel::A3, "s1 s2^2 s1 s2^-1", {"-1", "0", "-3", "-1"}, "-2",
       false},
      {KnotLabel::B1, "s1^a s2", {"1-a", "a", "-1", "1"}, "2-a", true},
      {KnotLabel::B2, "s1^a s2^-1", {"1+a", "a", "1", "1"}, "2+a", true},
      {KnotLabel::C, "s2", {"1", "0", "-1", "1"}, "2", false},
      {KnotLabel::D1, "s1^p s2^2 s1^q s2^-1",
       {"-2pq-p+q+1", "-2pq+p+q", "-2q-1", "-2q+1"}, "2-q-p(1+2q)", true},
      {KnotLabel::D2, "s1^p s2^2 s1^-q-1 s2^-1",
       {"2pq+p-q", "2pq+3p-q-1", "2q+1", "2q+3"}, "3+p+q+2pq", true},
  };
}

std::vector<GofKnot> classify(const LensSpace& l) {
  if (normalize(l.alpha, l.beta) != l) {
    throw DomainError("classify requires a canonical lens space");
  }

  std::vector<GofKnot> knots;
  if (l.alpha == 0) {
    knots.push_back(make_knot(KnotLabel::C, {}, l));
    return knots;
  }
  if (l.alpha == 4) {
    knots.push_back(make_knot(KnotLabel::A1, {}, l));
    knots.push_back(make_knot(KnotLabel::A2, {}, l));
    knots.push_back(make_knot(KnotLabel::A3, {}, l));
    return knots;
  }
  if (l.beta == 1 || l.alpha == 1) {
    knots.push_back(make_knot(KnotLabel::B1, alpha_params(l.alpha), l));
    knots.push_back(make_knot(KnotLabel::B2, alpha_params(l.alpha), l));
    return knots;
  }

  // Remaining case: exactly one knot when some representative of the
  // beta-orbit {+-beta^{+-1} mod alpha} equals 2q+1 with alpha = 2pq+p+q
  // (p,q > 1) or alpha = 2pq+p+q+1 (p,q > 0); otherwise none.
  std::vector<std::pair<KnotLabel, KnotParams>> found;
  auto record = [&](KnotLabel label, std::int64_t p, std::int64_t q) {
    std::pair<KnotLabel, KnotParams> entry{label, pq_params(p, q)};
    if (std::find(found.begin(), found.end(), entry) == found.end()) {
      found.push_back(entry);
    }
  };

  std::int64_t binv = 0;  // beta is invertible: gcd(beta, alpha) = 1
  for (std::int64_t x = 1; x < l.alpha; ++x) {
    if (x * l.beta % l.alpha == 1) {
      binv = x;
      break;
    }
  }
  const std::int64_t orbit[4] = {l.beta, l.alpha - l.beta, binv,
                                 l.alpha - binv};
  for (std::int64_t rep : orbit) {
    if (rep % 2 == 0 || rep < 3) continue;
    std::int64_t q = (rep - 1) / 2;
    if (q >= 2 && (l.alpha - q) % rep == 0) {
      std::int64_t p = (l.alpha - q) / rep;
      if (p >= 2) record(KnotLabel::D1, p, q);
    }
    if ((l.alpha - q - 1) % rep == 0) {
      std::int64_t p = (l.alpha - q - 1) / rep;
      if (p >= 1) record(KnotLabel::D2, p, q);
    }
  }

  if (found.size() > 1) {
    throw InternalError("classification produced more than one knot for " +
                        to_string(l));
  }
  for (const auto& [label, params] : found) {
    GofKnot k = make_knot(label, params, l);
    if (d_family_space(label, *params.p, *params.q) != l) {
      throw InternalError("knot parameters do not reproduce " + to_string(l));
    }
    knots.push_back(k);
  }
  return knots;
}

GofKnot knot_from_braid(const BraidWord& w, const LensSpace& ambient) {
  const LensSpace space = normalize(ambient.alpha, ambient.beta);
  const BraidWord r = free_reduce(w);
  const auto& syl = r.syllables;

  KnotLabel label;
  KnotParams params;
  LensSpace expected;
  if (syl.size() == 1 && syl[0].gen == 2 && syl[0].exp == 1) {
    label = KnotLabel::C;
    expected = normalize(0, 1);
  } else if (syl.size() == 2 && syl[0].gen == 1 && syl[1].gen == 2 &&
             syl[0].exp >= 1 &&
             (syl[1].exp == 1 || syl[1].exp == -1)) {
    std::int64_t a = syl[0].exp;
    bool positive = syl[1].exp == 1;
    if (a == 4) {
      label = positive ? KnotLabel::A1 : KnotLabel::A2;
    } else {
      label = positive ? KnotLabel::B1 : KnotLabel::B2;
      params = alpha_params(a);
    }
    expected = normalize(a, 1);
  } else if (syl.size() == 4 && syl[0].gen == 1 && syl[1].gen == 2 &&
             syl[2].gen == 1 && syl[3].gen == 2 && syl[0].exp >= 1 &&
             syl[1].exp == 2 && syl[3].exp == -1) {
    std::int64_t p = syl[0].exp;
    std::int64_t m = syl[2].exp;
    if (p == 1 && m == 1) {
      label = KnotLabel::A3;
      expected = normalize(4, 1);
    } else if (p >= 2 && m >= 2) {
      label = KnotLabel::D1;
      params = pq_params(p, m);
      expected = d_family_space(KnotLabel::D1, p, m);
    } else if (m <= -2) {
      label = KnotLabel::D2;
      std::int64_t q = checked_neg(checked_add(m, 1));
      params = pq_params(p, q);
      expected = d_family_space(KnotLabel::D2, p, q);
    } else {
      throw DomainError(
          "braid does not match any genus-one fibered knot template");
    }
  } else {
    throw DomainError(
        "braid does not match any genus-one fibered knot template");
  }

  if (expected != space) {
    throw DomainError("braid " + to_string(r) + " presents a knot in " +
                      to_string(expected) + ", not in " + to_string(space));
  }

  GofKnot k;
  k.label = label;
  k.params = std::move(params);
  k.braid = r;
  k.matrix = monodromy(r);
  k.trace = trace(k.matrix);
  k.ambient = space;
  return k;
}

Mat2 family_matrix(int family, std::int64_t a_or_p,
                   std::optional<std::int64_t> q) {
  if (family == 1) {
    require(!q.has_value(), "family 1 takes a single parameter");
    require(a_or_p >= 1, "family 1 requires a > 0");
    return Mat2{checked_add(1, a_or_p), a_or_p, 1, 1};
  }
  if (family == 2) {
    require(q.has_value(), "family 2 takes parameters p and q");
    KnotParams params;  // order matters: the form is not symmetric in (p,q)
    params.p = a_or_p;
    params.q = *q;
    return table1_matrix(KnotLabel::D2, params);
  }
  throw DomainError("family must be 1 or 2");
}

}  // namespace gofknot
