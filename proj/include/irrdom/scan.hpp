#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "irrdom/families.hpp"
#include "irrdom/search.hpp"

namespace irrdom {

// Outcome of one search task, persisted as one JSON object per line.
struct ScanRecord {
  FamilySpec family;
  std::size_t k = 0;
  SearchStatus status = SearchStatus::inconclusive;
  std::optional<std::string> labeling;
  std::uint64_t seed = 0;
  std::uint64_t nodes_explored = 0;
  std::int64_t elapsed_ms = 0;
};

nlohmann::json to_json(const ScanRecord& r);
// Throws ParseError on missing or ill-typed fields.
ScanRecord scan_record_from_json(const nlohmann::json& j);

// Reads a record file; a missing file is empty. Throws ParseError with the
// line number on malformed lines, on found records whose labeling does not
// verify, and on absent records that carry a labeling.
std::vector<ScanRecord> read_scan_records(const std::filesystem::path& file);

struct ScanOptions {
  SearchOptions search;
  // Cycle lengths searched concurrently; a single writer appends the records.
  unsigned workers = 1;
  std::uint64_t seed = 0;
};

// For every L in [from, to] with L = 0 mod 4, searches C_L for an optimal
// (L/2 + 1)-labeling and appends the record to `out`, flushed per record.
// Lengths already recorded as found or absent are skipped and their records
// returned as-is. Returns one record per length, in increasing L.
// Throws ParameterError for bounds that are not multiples of 4 or are out of order.
std::vector<ScanRecord> run_scan(std::uint32_t from, std::uint32_t to, const ScanOptions& opts,
                                 const std::filesystem::path& out);

}  // namespace irrdom
