#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotcalc/indices.hpp"
#include "knotcalc/notation.hpp"

namespace knotcalc {

struct KnotRecord {
  std::string name;
  std::string pd;
  std::optional<bool> fibered;
  std::optional<int> unknotting_number;
  std::optional<int> rank;
  std::optional<int> tunnel_number;
  std::optional<std::string> reference_delta;
};

// Reads one JSON object per line; lines starting with '#' and blank lines
// are skipped. Errors carry line numbers. Duplicate names are rejected.
std::vector<KnotRecord> load_dataset(const std::string& path);

struct PipelineOptions {
  std::vector<std::int64_t> primes = default_battery_primes();
  // Literature bound a <= 2 for prime table knots up to this many crossings.
  int hint_crossing_limit = 10;
  int hint_upper = 2;
};

// One report per record, in input order. Per-record failures are isolated
// in the report's error field.
std::vector<IndexReport> run_pipeline(const std::vector<KnotRecord>& records,
                                      const PipelineOptions& options = {});

// The paper's determined/open lists for prime knots of 8-10 crossings.
const std::vector<std::string>& section4_determined_names();  // 26 knots, a = 1
const std::vector<std::string>& section4_open_names();        // 19 knots, a in [1,2]

struct Section4Report {
  // Knots whose a-bounds were not decided by the non-fibered rules:
  // determined_one/two when the fibered corollary settles a = 1 or 2, open
  // when the interval stays loose.
  std::vector<std::string> determined_one;
  std::vector<std::string> determined_two;
  std::vector<std::string> open;
  struct Mismatch {
    std::string name;
    std::string reason;
  };
  std::vector<Mismatch> mismatches;  // diffs against the embedded lists
};

Section4Report reproduce_section4(const std::vector<IndexReport>& reports);

enum class ReportFormat { Json, Csv, Text };
ReportFormat parse_report_format(const std::string& name);

std::string report_emit(const IndexReport& report, ReportFormat format);
std::string report_emit(const std::vector<IndexReport>& reports, ReportFormat format);
std::string report_emit(const Section4Report& report, ReportFormat format);

// Orders "3_1" < "10_4" < "10_100" by crossing number then index; other
// names compare lexicographically after table names.
bool knot_name_less(const std::string& a, const std::string& b);

}  // namespace knotcalc
