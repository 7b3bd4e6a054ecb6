#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "irrdom/errors.hpp"
#include "irrdom/families.hpp"
#include "irrdom/scan.hpp"
#include "irrdom/text_io.hpp"

using namespace irrdom;
namespace fs = std::filesystem;

namespace {

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& name) : path(fs::temp_directory_path() / name) { fs::remove(path); }
  ~TempFile() { fs::remove(path); }
};

std::vector<std::string> lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("small cycles of length 0 mod 4 have no optimal labeling") {
  TempFile f("irrdom_scan_small.jsonl");
  auto recs = run_scan(4, 8, {}, f.path);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].status == SearchStatus::absent);
  CHECK(recs[1].status == SearchStatus::absent);
  CHECK(recs[0].k == 3);
  CHECK(recs[1].k == 5);
  CHECK(lines(f.path).size() == 2);
}

TEST_CASE("found records verify and re-runs append nothing") {
  TempFile f("irrdom_scan_found.jsonl");
  ScanOptions opts;
  opts.workers = 3;
  opts.seed = 42;
  auto recs = run_scan(12, 24, opts, f.path);
  REQUIRE(recs.size() == 4);
  for (const auto& r : recs) {
    CHECK(r.status == SearchStatus::found);
    CHECK(r.seed == 42);
    auto g = std::make_shared<const Graph>(generate(r.family));
    CHECK(verify(parse_labeling(*r.labeling, g)).valid);
  }
  auto before = lines(f.path);
  CHECK(before.size() == 4);
  auto again = run_scan(12, 24, opts, f.path);
  CHECK(lines(f.path) == before);
  for (std::size_t i = 0; i < again.size(); ++i) CHECK(again[i].labeling == recs[i].labeling);

  // Extending the range only adds the new length.
  run_scan(12, 28, opts, f.path);
  auto after = lines(f.path);
  CHECK(after.size() == 5);
  std::set<std::string> families;
  for (const auto& r : read_scan_records(f.path)) families.insert(r.family.to_string());
  CHECK(families.size() == 5);
}

TEST_CASE("inconclusive lengths are retried") {
  TempFile f("irrdom_scan_retry.jsonl");
  ScanOptions opts;
  opts.search.time_budget = std::chrono::milliseconds(0);
  auto recs = run_scan(40, 40, opts, f.path);
  CHECK(recs[0].status == SearchStatus::inconclusive);
  auto recs2 = run_scan(40, 40, {}, f.path);
  CHECK(recs2[0].status == SearchStatus::found);
  CHECK(lines(f.path).size() == 2);
  run_scan(40, 40, {}, f.path);
  CHECK(lines(f.path).size() == 2);
}

TEST_CASE("record JSON round trip") {
  ScanRecord r{{FamilyKind::cycle, {12}}, 7, SearchStatus::found, "(6,3,_,_,1,4,_,5,0,2,_,_)", 9, 100, 3};
  ScanRecord back = scan_record_from_json(to_json(r));
  CHECK(back.family == r.family);
  CHECK(back.k == r.k);
  CHECK(back.status == r.status);
  CHECK(back.labeling == r.labeling);
  CHECK(back.seed == 9);
  CHECK(back.nodes_explored == 100);
  CHECK(back.elapsed_ms == 3);
}

TEST_CASE("malformed record files name the line") {
  TempFile f("irrdom_scan_bad.jsonl");
  auto write = [&](const std::string& text) {
    std::ofstream out(f.path, std::ios::trunc);
    out << text;
  };
  auto line_of = [&] {
    try {
      read_scan_records(f.path);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  const std::string good =
      R"({"family":"cycle 4","k":3,"status":"absent","labeling":null,"seed":0,"nodes_explored":1,"elapsed_ms":0})";
  write(good + "\n{not json\n");
  CHECK(line_of() == 2);
  write(good + "\n" + good + "\n" + R"({"family":"cycle 4","k":3})" + "\n");
  CHECK(line_of() == 3);
  // A found record whose labeling does not verify.
  write(R"x({"family":"cycle 12","k":7,"status":"found","labeling":"(6,3,_,_,1,4,_,5,0,2,_,1)","seed":0,"nodes_explored":1,"elapsed_ms":0})x"
        "\n");
  CHECK(line_of() == 1);
  write(good + "\n");
  CHECK(read_scan_records(f.path).size() == 1);
  write("{bad\n");
  CHECK_THROWS_AS(run_scan(4, 4, {}, f.path), ParseError);
}

TEST_CASE("scan bounds") {
  TempFile f("irrdom_scan_bounds.jsonl");
  CHECK_THROWS_AS(run_scan(10, 16, {}, f.path), ParameterError);
  CHECK_THROWS_AS(run_scan(12, 18, {}, f.path), ParameterError);
  CHECK_THROWS_AS(run_scan(16, 12, {}, f.path), ParameterError);
  CHECK_THROWS_AS(run_scan(0, 4, {}, f.path), ParameterError);
  CHECK_THROWS(run_scan(4, 4, {}, "/nonexistent-dir/x.jsonl"));
}
