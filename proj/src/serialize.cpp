#include "gofknot/serialize.hpp"

namespace gofknot {

namespace {

std::int64_t get_int(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw DomainError(std::string("missing or non-integer field \"") + key +
                      "\"");
  }
  return j[key].get<std::int64_t>();
}

std::string get_str(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw DomainError(std::string("missing or non-string field \"") + key +
                      "\"");
  }
  return j[key].get<std::string>();
}

ordered_json params_to_json(const KnotParams& params) {
  ordered_json j = ordered_json::object();
  if (params.alpha) j["alpha"] = *params.alpha;
  if (params.p) j["p"] = *params.p;
  if (params.q) j["q"] = *params.q;
  return j;
}

KnotParams params_from_json(const ordered_json& j) {
  if (!j.is_object()) throw DomainError("\"params\" must be an object");
  KnotParams params;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer()) {
      throw DomainError("knot parameter \"" + key + "\" must be an integer");
    }
    if (key == "alpha") {
      params.alpha = value.get<std::int64_t>();
    } else if (key == "p") {
      params.p = value.get<std::int64_t>();
    } else if (key == "q") {
      params.q = value.get<std::int64_t>();
    } else {
      throw DomainError("unknown knot parameter \"" + key + "\"");
    }
  }
  return params;
}

ordered_json matrix_to_json(const Mat2& m) {
  return ordered_json::array(
      {ordered_json::array({m.a, m.b}), ordered_json::array({m.c, m.d})});
}

}  // namespace

ordered_json lens_to_json(const LensSpace& l) {
  ordered_json j = ordered_json::object();
  j["alpha"] = l.alpha;
  j["beta"] = l.beta;
  return j;
}

LensSpace lens_from_json(const ordered_json& j) {
  if (!j.is_object()) throw DomainError("lens space must be a JSON object");
  return LensSpace{get_int(j, "alpha"), get_int(j, "beta")};
}

ordered_json knot_to_json(const GofKnot& k) {
  ordered_json j = ordered_json::object();
  j["label"] = to_string(k.label);
  j["params"] = params_to_json(k.params);
  j["braid"] = to_string(k.braid);
  j["matrix"] = matrix_to_json(k.matrix);
  j["trace"] = k.trace;
  j["ambient"] = lens_to_json(k.ambient);
  return j;
}

GofKnot knot_from_json(const ordered_json& j) {
  if (!j.is_object()) throw DomainError("knot must be a JSON object");
  auto label = knot_label_from_string(get_str(j, "label"));
  if (!label) throw DomainError("unknown knot label");
  if (!j.contains("params")) throw DomainError("missing \"params\"");

  GofKnot k;
  k.label = *label;
  k.params = params_from_json(j["params"]);
  k.braid = parse_braid(get_str(j, "braid"));
  k.matrix = monodromy(k.braid);
  k.trace = trace(k.matrix);
  k.ambient = lens_from_json(j["ambient"]);

  // The stored derived fields must agree with recomputation.
  if (!j.contains("matrix") || matrix_to_json(k.matrix) != j["matrix"]) {
    throw DomainError("stored matrix disagrees with the braid image");
  }
  if (get_int(j, "trace") != k.trace) {
    throw DomainError("stored trace disagrees with the braid image");
  }
  if (k.braid != table1_braid(k.label, k.params)) {
    throw DomainError("braid does not match the stored label and params");
  }
  if (normalize(k.ambient.alpha, k.ambient.beta) != k.ambient) {
    throw DomainError("stored ambient space is not canonical");
  }
  return k;
}

ordered_json verdict_to_json(const SurgeryVerdict& v) {
  ordered_json j = ordered_json::object();
  j["slope"] = v.slope;
  j["status"] = to_string(v.status);
  j["rule"] = to_string(v.rule);
  return j;
}

SurgeryVerdict verdict_from_json(const ordered_json& j) {
  if (!j.is_object()) throw DomainError("verdict must be a JSON object");
  auto status = lo_status_from_string(get_str(j, "status"));
  auto rule = verdict_rule_from_string(get_str(j, "rule"));
  if (!status) throw DomainError("unknown verdict status");
  if (!rule) throw DomainError("unknown verdict rule");
  return SurgeryVerdict{get_int(j, "slope"), *status, *rule};
}

ordered_json family_match_to_json(const FamilyMatch& m) {
  ordered_json j = ordered_json::object();
  j["family"] = m.family;
  if (m.params.alpha) j["alpha"] = *m.params.alpha;
  if (m.params.p) j["p"] = *m.params.p;
  if (m.params.q) j["q"] = *m.params.q;
  return j;
}

FamilyMatch family_match_from_json(const ordered_json& j) {
  if (!j.is_object()) throw DomainError("family match must be a JSON object");
  FamilyMatch m;
  m.family = static_cast<int>(get_int(j, "family"));
  if (m.family == 1) {
    m.params.alpha = get_int(j, "alpha");
  } else if (m.family == 2) {
    m.params.p = get_int(j, "p");
    m.params.q = get_int(j, "q");
  } else {
    throw DomainError("family must be 1 or 2");
  }
  return m;
}

}  // namespace gofknot
