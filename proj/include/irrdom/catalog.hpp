#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "irrdom/domination.hpp"
#include "irrdom/families.hpp"

namespace irrdom {

// One published labeling. Line format:
//   <family> <params> | <labeling text> | <k> | <source>
// The source may start with tags: @optimal (claimed to realise gamma_e),
// @derived (computed here because the published witness is only a figure or
// is misprinted), @repaired (published witness with a transcription fix).
// Labelings without a 0 are classical.
struct CatalogEntry {
  FamilySpec family;
  Labeling labeling;
  std::size_t claimed_k = 0;
  std::string source;
  bool optimal = false;
  bool derived = false;
  bool repaired = false;
  std::size_t line = 0;

  std::string name() const;  // "P5", "C12", "Q3", ...
};

struct Catalog {
  std::vector<CatalogEntry> entries;
};

// Throws ParseError with the offending line number.
Catalog parse_catalog(std::istream& in);
Catalog load_catalog(const std::filesystem::path& file);
// Bundled catalog; the IRRDOM_CATALOG environment variable overrides the path.
Catalog load_catalog();
std::filesystem::path default_catalog_path();

struct CatalogFailure {
  std::string entry;
  std::string source;
  std::size_t line;
  std::string diagnostics;
};

struct CatalogSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<CatalogFailure> failures;
  bool ok() const { return failed == 0; }
};

// gamma_e(P_n) as established or conjectured for n >= 4:
// ceil((n+1)/2) for n = 6, 10 and ceil((n+3)/2) otherwise.
std::size_t expected_path_gamma(std::size_t n);

// Each entry must verify with exactly claimed_k labels; @optimal path entries
// with n in [4, 26] must also match expected_path_gamma. One line per entry is
// written to the sink.
CatalogSummary verify_catalog(const Catalog& catalog, std::ostream& sink);

}  // namespace irrdom
