#include "gofknot/atlas.hpp"

#include <exception>
#include <fstream>
#include <numeric>
#include <sstream>

#include "gofknot/serialize.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace gofknot {

const char* const kCsvHeader =
    "alpha,beta,label,p,q,braid,trace,class,all_integral_lo";

std::vector<LensSpace> canonical_spaces(std::int64_t max_alpha) {
  std::vector<LensSpace> spaces;
  if (max_alpha < 0) throw DomainError("max_alpha must be >= 0");
  for (std::int64_t alpha = 0; alpha <= max_alpha; ++alpha) {
    if (alpha == 0) {
      spaces.push_back(LensSpace{0, 1});
      continue;
    }
    if (alpha == 1) {
      spaces.push_back(LensSpace{1, 0});
      continue;
    }
    for (std::int64_t beta = 1; beta < alpha; ++beta) {
      if (std::gcd(alpha, beta) != 1) continue;
      if (normalize(alpha, beta) == LensSpace{alpha, beta}) {
        spaces.push_back(LensSpace{alpha, beta});
      }
    }
  }
  return spaces;
}

namespace {

AtlasRecord build_record(const LensSpace& space, const SlopeWindow& window) {
  AtlasRecord record;
  record.space = space;
  for (const auto& knot : classify(space)) {
    KnotRecord kr;
    kr.knot = knot;
    kr.monodromy = monodromy_class(knot.matrix);
    kr.all_lo = all_integral_lo(knot);
    kr.lo_families = lo_family_matches(knot.matrix);
    for (std::int64_t n = window.lo; n <= window.hi; ++n) {
      kr.verdicts.push_back(surgery_verdict(knot, n));
    }
    record.knots.push_back(std::move(kr));
  }
  return record;
}

}  // namespace

std::vector<AtlasRecord> enumerate_serial(std::int64_t max_alpha,
                                          SlopeWindow window) {
  const std::vector<LensSpace> spaces = canonical_spaces(max_alpha);
  std::vector<AtlasRecord> records(spaces.size());
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    records[i] = build_record(spaces[i], window);
  }
  return records;
}

std::vector<AtlasRecord> enumerate(std::int64_t max_alpha,
                                   SlopeWindow window) {
  const std::vector<LensSpace> spaces = canonical_spaces(max_alpha);
  std::vector<AtlasRecord> records(spaces.size());
  // Each space is independent; output slot i is written only by iteration i,
  // so the result order never depends on the execution schedule.
  std::vector<std::exception_ptr> errors(spaces.size());
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(spaces.size());
       ++i) {
    try {
      records[i] = build_record(spaces[i], window);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return records;
}

AtlasStats stats(const std::vector<AtlasRecord>& records) {
  AtlasStats s;
  for (int count = 0; count <= 3; ++count) s.counts[count] = 0;
  for (const auto& record : records) {
    const int count = static_cast<int>(record.knots.size());
    ++s.counts[count];
    for (const auto& kr : record.knots) {
      if (kr.all_lo == AllIntegralLo::AllLO) ++s.lo_knot_count;
    }
  }
  return s;
}

namespace {

ordered_json record_to_json(const AtlasRecord& record) {
  ordered_json j = ordered_json::object();
  j["space"] = lens_to_json(record.space);
  ordered_json knots = ordered_json::array();
  for (const auto& kr : record.knots) {
    ordered_json k = knot_to_json(kr.knot);
    k["class"] = to_string(kr.monodromy);
    k["all_integral_lo"] = to_string(kr.all_lo);
    ordered_json families = ordered_json::array();
    for (const auto& m : kr.lo_families) {
      families.push_back(family_match_to_json(m));
    }
    k["lo_families"] = std::move(families);
    ordered_json verdicts = ordered_json::array();
    for (const auto& v : kr.verdicts) verdicts.push_back(verdict_to_json(v));
    k["verdicts"] = std::move(verdicts);
    knots.push_back(std::move(k));
  }
  j["knots"] = std::move(knots);
  return j;
}

AtlasRecord record_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("space") || !j.contains("knots") ||
      !j["knots"].is_array()) {
    throw DomainError("atlas record needs \"space\" and \"knots\"");
  }
  AtlasRecord record;
  record.space = lens_from_json(j["space"]);
  for (const auto& k : j["knots"]) {
    KnotRecord kr;
    kr.knot = knot_from_json(k);
    auto mclass = k.contains("class") && k["class"].is_string()
                      ? monodromy_class_from_string(k["class"].get<std::string>())
                      : std::nullopt;
    auto all_lo =
        k.contains("all_integral_lo") && k["all_integral_lo"].is_string()
            ? all_integral_lo_from_string(
                  k["all_integral_lo"].get<std::string>())
            : std::nullopt;
    if (!mclass || !all_lo) {
      throw DomainError("knot record needs \"class\" and \"all_integral_lo\"");
    }
    kr.monodromy = *mclass;
    kr.all_lo = *all_lo;
    if (!k.contains("lo_families") || !k["lo_families"].is_array() ||
        !k.contains("verdicts") || !k["verdicts"].is_array()) {
      throw DomainError("knot record needs \"lo_families\" and \"verdicts\"");
    }
    for (const auto& m : k["lo_families"]) {
      kr.lo_families.push_back(family_match_from_json(m));
    }
    for (const auto& v : k["verdicts"]) {
      kr.verdicts.push_back(verdict_from_json(v));
    }
    record.knots.push_back(std::move(kr));
  }
  return record;
}

void csv_row(std::ostream& out, const LensSpace& space, const KnotRecord& kr) {
  out << space.alpha << ',' << space.beta << ',' << to_string(kr.knot.label)
      << ',';
  if (kr.knot.params.p) out << *kr.knot.params.p;
  out << ',';
  if (kr.knot.params.q) out << *kr.knot.params.q;
  out << ',' << to_string(kr.knot.braid) << ',' << kr.knot.trace << ','
      << to_string(kr.monodromy) << ',' << to_string(kr.all_lo) << '\n';
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open for writing: " + path);
  return out;
}

}  // namespace

void export_json(const std::vector<AtlasRecord>& records, std::ostream& out) {
  for (const auto& record : records) {
    out << record_to_json(record).dump() << '\n';
  }
  if (!out) throw DomainError("write failure on JSON export");
}

void export_csv(const std::vector<AtlasRecord>& records, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& record : records) {
    for (const auto& kr : record.knots) csv_row(out, record.space, kr);
  }
  if (!out) throw DomainError("write failure on CSV export");
}

void export_json(const std::vector<AtlasRecord>& records,
                 const std::string& path) {
  std::ofstream out = open_output(path);
  export_json(records, out);
  out.flush();
  if (!out) throw DomainError("write failure on " + path);
}

void export_csv(const std::vector<AtlasRecord>& records,
                const std::string& path) {
  std::ofstream out = open_output(path);
  export_csv(records, out);
  out.flush();
  if (!out) throw DomainError("write failure on " + path);
}

std::vector<AtlasRecord> import_json(std::istream& in) {
  std::vector<AtlasRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      throw DomainError("line " + std::to_string(line_no) +
                        ": not valid JSON");
    }
    try {
      records.push_back(record_from_json(j));
    } catch (const DomainError& e) {
      throw DomainError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

std::vector<AtlasRecord> import_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open for reading: " + path);
  return import_json(in);
}

}  // namespace gofknot
