#include "irrdom/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "irrdom/errors.hpp"
#include "irrdom/text_io.hpp"

#ifndef IRRDOM_CATALOG_PATH
#define IRRDOM_CATALOG_PATH "data/catalog.txt"
#endif

namespace irrdom {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto bar = line.find('|', start);
    out.push_back(trim(line.substr(start, bar == std::string::npos ? std::string::npos : bar - start)));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return out;
}

}  // namespace

std::string CatalogEntry::name() const {
  std::string prefix;
  std::uint32_t n = family.params.at(0);
  switch (family.kind) {
    case FamilyKind::cycle: prefix = "C"; break;
    case FamilyKind::path: prefix = "P"; break;
    case FamilyKind::hypercube: prefix = "Q"; break;
    case FamilyKind::mobius_ladder: prefix = "M"; n *= 2; break;
    case FamilyKind::crown: prefix = "crown"; break;
    case FamilyKind::complete: prefix = "K"; break;
    case FamilyKind::complete_bipartite: return "K" + std::to_string(n) + "," + std::to_string(family.params.at(1));
  }
  std::string base = prefix + std::to_string(n);
  return labeling.mode() == LabelMode::classical ? base + " (classical)" : base;
}

Catalog parse_catalog(std::istream& in) {
  Catalog catalog;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_fields(line);
    if (fields.size() != 4) throw ParseError("expected 4 '|'-separated fields, got " + std::to_string(fields.size()), lineno);
    try {
      FamilySpec spec = parse_family_spec(fields[0]);
      auto g = std::make_shared<const Graph>(generate(spec));
      Labeling lab = parse_labeling(fields[1], g);
      const auto values = lab.label_values();
      if (values.empty() || values.front() != 0) lab = lab.with_mode(LabelMode::classical);

      std::size_t k = 0;
      std::istringstream ks(fields[2]);
      if (!(ks >> k) || !ks.eof()) throw ParseError("claimed k '" + fields[2] + "' is not an integer");

      CatalogEntry entry{spec, std::move(lab), k, {}, false, false, false, lineno};
      std::istringstream src(fields[3]);
      std::string word;
      std::string rest;
      while (src >> word) {
        if (rest.empty() && word.starts_with('@')) {
          if (word == "@optimal") entry.optimal = true;
          else if (word == "@derived") entry.derived = true;
          else if (word == "@repaired") entry.repaired = true;
          else throw ParseError("unknown tag '" + word + "'");
        } else {
          rest += rest.empty() ? word : " " + word;
        }
      }
      entry.source = rest;
      catalog.entries.push_back(std::move(entry));
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      throw ParseError(e.what(), lineno);
    } catch (const Error& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return catalog;
}

Catalog load_catalog(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open catalog '" + file.string() + "'");
  return parse_catalog(in);
}

std::filesystem::path default_catalog_path() {
  if (const char* env = std::getenv("IRRDOM_CATALOG"); env && *env) return env;
  return IRRDOM_CATALOG_PATH;
}

Catalog load_catalog() { return load_catalog(default_catalog_path()); }

std::size_t expected_path_gamma(std::size_t n) {
  return n == 6 || n == 10 ? (n + 2) / 2 : (n + 4) / 2;
}

CatalogSummary verify_catalog(const Catalog& catalog, std::ostream& sink) {
  CatalogSummary summary;
  for (const auto& e : catalog.entries) {
    std::string problems;
    auto report = verify(e.labeling);
    if (!report.valid) {
      problems += "invalid:";
      for (auto u : report.uncovered) problems += " uncovered " + std::to_string(u) + ";";
      for (const auto& v : report.violations) problems += " " + v.message + ";";
    }
    if (report.k != e.claimed_k)
      problems += " has " + std::to_string(report.k) + " labels, claimed " + std::to_string(e.claimed_k) + ";";
    const std::uint32_t n = e.family.params[0];
    if (e.optimal && e.family.kind == FamilyKind::path && e.labeling.mode() == LabelMode::extended && n >= 4 &&
        n <= 26 && e.claimed_k != expected_path_gamma(n))
      problems += " claimed k " + std::to_string(e.claimed_k) + " differs from gamma_e " +
                  std::to_string(expected_path_gamma(n)) + ";";

    sink << (problems.empty() ? "PASS " : "FAIL ") << e.name() << ' ' << format_labeling(e.labeling)
         << " k=" << e.claimed_k << " (" << e.source << ")";
    if (!problems.empty()) {
      sink << " :" << problems;
      ++summary.failed;
      summary.failures.push_back({e.name(), e.source, e.line, problems});
    } else {
      ++summary.passed;
    }
    sink << '\n';
  }
  sink << summary.passed << " passed, " << summary.failed << " failed\n";
  return summary;
}

}  // namespace irrdom
