// Sweep all canonical lens spaces up to an alpha bound, assemble the full
// classification-and-verdict database, and persist it as JSON Lines or CSV.
//
// enumerate() may run the per-space work in parallel (OpenMP when available)
// but always returns records in the deterministic serial order (alpha
// ascending, then beta ascending); enumerate_serial() is the plain loop kept
// as a reference implementation for testing and benchmarking.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "gofknot/baker.hpp"
#include "gofknot/lens.hpp"
#include "gofknot/verdict.hpp"

namespace gofknot {

// Inclusive slope range for per-knot verdicts; lo > hi means no verdicts.
struct SlopeWindow {
  std::int64_t lo = -5;
  std::int64_t hi = 5;
  bool operator==(const SlopeWindow&) const = default;
};

struct KnotRecord {
  GofKnot knot;
  MonodromyClass monodromy = MonodromyClass::Reducible;
  AllIntegralLo all_lo = AllIntegralLo::Unknown;
  std::vector<FamilyMatch> lo_families;   // all matches, never just the first
  std::vector<SurgeryVerdict> verdicts;   // one per slope in the window
  bool operator==(const KnotRecord&) const = default;
};

struct AtlasRecord {
  LensSpace space;
  std::vector<KnotRecord> knots;          // agrees with classify(space)
  bool operator==(const AtlasRecord&) const = default;
};

struct AtlasStats {
  std::map<int, std::int64_t> counts;     // knot count (0..3) -> #spaces
  std::int64_t lo_knot_count = 0;         // knots with AllLO
  bool operator==(const AtlasStats&) const = default;
};

// All canonical spaces with 0 <= alpha <= max_alpha, ascending.
std::vector<LensSpace> canonical_spaces(std::int64_t max_alpha);

std::vector<AtlasRecord> enumerate(std::int64_t max_alpha,
                                   SlopeWindow window = {});
std::vector<AtlasRecord> enumerate_serial(std::int64_t max_alpha,
                                          SlopeWindow window = {});

AtlasStats stats(const std::vector<AtlasRecord>& records);

// JSON Lines (one record per line) / headered CSV (one row per knot).
// Stream forms write to the given stream; path forms create the file and
// report I/O failures with the path. Output is byte-stable across runs.
void export_json(const std::vector<AtlasRecord>& records, std::ostream& out);
void export_csv(const std::vector<AtlasRecord>& records, std::ostream& out);
void export_json(const std::vector<AtlasRecord>& records,
                 const std::string& path);
void export_csv(const std::vector<AtlasRecord>& records,
                const std::string& path);

std::vector<AtlasRecord> import_json(std::istream& in);
std::vector<AtlasRecord> import_json_file(const std::string& path);

extern const char* const kCsvHeader;  // "alpha,beta,label,..." exact form

}  // namespace gofknot
