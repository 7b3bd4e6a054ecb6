// irrdom: command-line front end for the irrdom library.
//
// Exit codes: 0 success or decided, 1 usage/IO error, 2 inconclusive,
// 3 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>

#include "irrdom/catalog.hpp"
#include "irrdom/errors.hpp"
#include "irrdom/families.hpp"
#include "irrdom/scan.hpp"
#include "irrdom/search.hpp"
#include "irrdom/starters.hpp"
#include "irrdom/text_io.hpp"
#include "irrdom/transforms.hpp"

using namespace irrdom;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kUsage = 1, kInconclusive = 2, kFailed = 3;

struct Globals {
  std::string out;
  std::string format = "text";
  double budget_s = 0;  // 0 = unbounded
  unsigned workers = 1;
  std::uint64_t seed = 1;

  bool json_lines() const { return format == "json-lines"; }
  std::optional<std::chrono::milliseconds> budget() const {
    if (budget_s <= 0) return std::nullopt;
    return std::chrono::milliseconds(static_cast<std::int64_t>(budget_s * 1000));
  }
  SearchOptions search() const {
    SearchOptions o;
    o.time_budget = budget();
    o.parallel_width = workers;
    return o;
  }
};

// Either stdout or the --out file.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string join(const std::vector<std::string>& words) {
  std::string s;
  for (const auto& w : words) s += (s.empty() ? "" : " ") + w;
  return s;
}

// Graph from "<family> <params...>" words or from a graph file.
std::shared_ptr<const Graph> load_graph(const std::vector<std::string>& family, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw Error("cannot read '" + file + "'");
    return std::make_shared<const Graph>(read_graph(in));
  }
  if (family.empty()) throw ParameterError("a family (e.g. 'cycle 12') or --graph-file is required");
  return std::make_shared<const Graph>(generate(parse_family_spec(join(family))));
}

std::size_t count_tokens(std::string_view text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), ',')) + 1;
}

Labeling cycle_labeling_from_text(const std::string& text) {
  auto g = std::make_shared<const Graph>(cycle(static_cast<std::uint32_t>(count_tokens(text))));
  return parse_labeling(text, g);
}

void print_report(std::ostream& out, const Globals& gl, const Labeling& lab, const VerificationReport& r) {
  if (gl.json_lines()) {
    out << to_json(r, lab).dump() << '\n';
    return;
  }
  out << (r.valid ? "valid" : "invalid") << " k=" << r.k;
  if (r.valid) out << (r.exact_cover() ? " exact-cover" : " overlapping");
  out << '\n';
  if (!r.uncovered.empty()) {
    out << "uncovered:";
    for (Vertex v : r.uncovered) out << " v" << v;
    out << '\n';
  }
  for (const auto& v : r.violations) out << "violation: " << v.message << '\n';
}

int status_code(SearchStatus s) { return s == SearchStatus::inconclusive ? kInconclusive : kOk; }

void print_starter(std::ostream& out, const Globals& gl, const Starter& s) {
  StarterClass c = classify(s);
  if (gl.json_lines()) {
    json pairs = json::array();
    for (auto [a, b] : s.pairs) pairs.push_back({a, b});
    out << json{{"n", s.n}, {"pairs", pairs}, {"class", to_string(c)}}.dump() << '\n';
  } else {
    out << format_starter(s) << "  [" << to_string(c) << "]\n";
  }
}

void print_labeling(std::ostream& out, const Globals& gl, const Labeling& lab) {
  if (gl.json_lines())
    out << json{{"family", lab.graph().family() ? lab.graph().family()->to_string() : ""},
                {"labeling", format_labeling(lab)},
                {"k", lab.size()}}
               .dump()
        << '\n';
  else
    out << format_labeling(lab) << '\n';
}

// "12..32", or a single length.
std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text) {
  auto num = [&](std::string_view s) {
    std::uint32_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty()) throw ParameterError("bad range '" + text + "'");
    return v;
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) return {num(text), num(text)};
  return {num(std::string_view(text).substr(0, dots)), num(std::string_view(text).substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended irregular domination: verification, search, starters, transforms"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals gl;
  app.add_option("--out", gl.out, "Write results to this file (scan: the record file)");
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"text", "json-lines"}));
  app.add_option("--budget", gl.budget_s, "Wall-clock budget in seconds (0 = none)")->check(CLI::NonNegativeNumber);
  app.add_option("--workers", gl.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", gl.seed, "Random seed for heuristics");

  std::vector<std::string> family;
  std::string graph_file, labeling_text;
  bool classical = false;

  auto* gen = app.add_subcommand("gen", "Print a family graph as an edge list");
  gen->add_option("family", family, "Family and parameters, e.g. 'hypercube 3'")->required();

  auto* ver = app.add_subcommand("verify", "Verify a labeling");
  ver->add_option("family", family, "Family and parameters");
  ver->add_option("--graph-file", graph_file, "Graph edge-list file instead of a family");
  ver->add_option("-l,--labeling", labeling_text, "Labeling, e.g. '(3,1,_,2,0,_)'")->required();
  ver->add_flag("--classical", classical, "Check as a classical (positive-label) labeling");

  std::size_t k = 0;
  auto* solve = app.add_subcommand("solve", "Search for an extended labeling of size k");
  solve->add_option("family", family, "Family and parameters");
  solve->add_option("--graph-file", graph_file, "Graph edge-list file instead of a family");
  solve->add_option("-k", k, "Number of labeled vertices")->required()->check(CLI::PositiveNumber);

  auto* gamma = app.add_subcommand("gamma", "Compute the extended irregular domination number");
  gamma->add_option("family", family, "Family and parameters");
  gamma->add_option("--graph-file", graph_file, "Graph edge-list file instead of a family");

  auto* starter = app.add_subcommand("starter", "Starters in Z_n");
  starter->require_subcommand(1);
  std::string starter_text;
  auto* s_verify = starter->add_subcommand("verify", "Classify a starter");
  s_verify->add_option("starter", starter_text, "e.g. 'n=7: {1,6} {2,4} {3,5}'")->required();
  std::uint32_t p = 0;
  auto* s_construct = starter->add_subcommand("construct", "Skew starter of a prime field");
  s_construct->add_option("p", p, "Prime p = 2^k t + 1 with t odd, t > 1")->required();
  std::uint32_t sn = 0;
  std::string target = "strong";
  bool exhaustive = false;
  std::uint64_t iterations = kDefaultHillClimbBudget;
  auto* s_search = starter->add_subcommand("search", "Hill-climb (or exhaustively search) for a starter");
  s_search->add_option("n", sn, "Odd modulus")->required();
  s_search->add_option("--class", target, "Target class")->check(CLI::IsMember({"starter", "strong", "skew"}));
  s_search->add_flag("--exhaustive", exhaustive, "Complete search (n <= 15)");
  s_search->add_option("--iterations", iterations, "Hill-climb move budget per seed");

  auto* transform = app.add_subcommand("transform", "Constructions between labelings and starters");
  transform->require_subcommand(1);
  auto* t_s2c = transform->add_subcommand("starter2cycle", "Strong starter -> optimal labeling of C_n");
  t_s2c->add_option("starter", starter_text)->required();
  auto* t_c2s = transform->add_subcommand("cycle2starter", "Optimal labeling of C_n (n odd) -> strong starter");
  t_c2s->add_option("labeling", labeling_text)->required();
  std::optional<Vertex> cut;
  bool trace = false;
  auto* t_double = transform->add_subcommand("double", "Optimal labeling of C_n (n odd) -> C_2n");
  t_double->add_option("labeling", labeling_text)->required();
  t_double->add_option("--cut", cut, "Unlabeled even vertex of C_2n to cut at");
  t_double->add_flag("--trace", trace, "Print the intermediate labelings");
  std::uint32_t crown_n = 0;
  auto* t_crown = transform->add_subcommand("crown", "Optimal labeling of the crown graph");
  t_crown->add_option("n", crown_n)->required();
  auto* t_extend = transform->add_subcommand("extendpath", "Classical labeling of P_n -> extended labeling of P_n+1");
  t_extend->add_option("labeling", labeling_text)->required();

  std::string range;
  auto* scan = app.add_subcommand("scan", "Search C_L for L = 0 mod 4, appending records");
  scan->add_option("range", range, "Lengths, e.g. 12..32")->required();

  std::string catalog_file;
  auto* catalog = app.add_subcommand("catalog", "Bundled labeling catalog");
  catalog->require_subcommand(1);
  auto* c_verify = catalog->add_subcommand("verify-all", "Verify every catalog entry");
  c_verify->add_option("--file", catalog_file, "Catalog file (default: bundled)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*scan) {
      auto [from, to] = parse_range(range);
      ScanOptions so;
      so.search = gl.search();
      so.search.parallel_width = 1;
      so.workers = gl.workers;
      so.seed = gl.seed;
      const std::string out = gl.out.empty() ? "scan.jsonl" : gl.out;
      auto records = run_scan(from, to, so, out);
      int rc = kOk;
      for (const auto& r : records) {
        if (gl.json_lines())
          std::cout << to_json(r).dump() << '\n';
        else
          std::cout << r.family.to_string() << " k=" << r.k << ": " << to_string(r.status)
                    << (r.labeling ? " " + *r.labeling : "") << '\n';
        if (r.status == SearchStatus::inconclusive) rc = kInconclusive;
      }
      return rc;
    }

    Sink sink(gl.out);
    std::ostream& out = sink.get();

    if (*gen) {
      write_graph(out, *load_graph(family, ""));
      return kOk;
    }
    if (*ver) {
      auto g = load_graph(family, graph_file);
      Labeling lab = parse_labeling(labeling_text, g, classical ? LabelMode::classical : LabelMode::extended);
      auto r = verify(lab);
      print_report(out, gl, lab, r);
      return r.valid ? kOk : kFailed;
    }
    if (*solve) {
      auto g = load_graph(family, graph_file);
      auto r = find_eids(g, k, gl.search());
      if (gl.json_lines())
        out << to_json(r, k).dump() << '\n';
      else
        out << to_string(r.status) << (r.labeling ? " " + format_labeling(*r.labeling) : "") << "  ("
            << r.nodes_explored << " nodes, " << r.elapsed.count() << " ms)\n";
      return status_code(r.status);
    }
    if (*gamma) {
      auto g = load_graph(family, graph_file);
      auto r = gamma_e(g, gl.search());
      if (gl.json_lines()) {
        out << to_json(r).dump() << '\n';
      } else if (r.status == SearchStatus::found) {
        out << "gamma_e = " << *r.gamma << "  " << format_labeling(*r.witness) << '\n';
      } else if (r.status == SearchStatus::absent) {
        out << "no extended irregular dominating set\n";
      } else {
        out << "inconclusive";
        if (r.last_exhausted_k) out << "; no labeling with k <= " << *r.last_exhausted_k;
        out << '\n';
      }
      return status_code(r.status);
    }
    if (*s_verify) {
      Starter s = parse_starter(starter_text);
      print_starter(out, gl, s);
      return classify(s) == StarterClass::invalid ? kFailed : kOk;
    }
    if (*s_construct) {
      print_starter(out, gl, mullin_nemeth(p));
      return kOk;
    }
    if (*s_search) {
      StarterClass cls = *starter_class_from_string(target);
      std::optional<Starter> found;
      if (exhaustive) {
        found = exhaustive_starter_search(sn, cls);
        if (!found) {
          out << "no " << target << " starter in Z_" << sn << '\n';
          return kOk;
        }
      } else {
        if (cls == StarterClass::starter) cls = StarterClass::strong;
        std::vector<std::uint64_t> seeds(std::max(1u, gl.workers));
        std::iota(seeds.begin(), seeds.end(), gl.seed);
        found = hill_climb_race(sn, cls, seeds, iterations, gl.workers);
        if (!found) {
          out << "not found within budget\n";
          return kInconclusive;
        }
      }
      print_starter(out, gl, *found);
      return kOk;
    }
    if (*t_s2c) {
      print_labeling(out, gl, starter_to_cycle_labeling(parse_starter(starter_text)));
      return kOk;
    }
    if (*t_c2s) {
      print_starter(out, gl, cycle_labeling_to_starter(cycle_labeling_from_text(labeling_text)));
      return kOk;
    }
    if (*t_double) {
      auto t = double_cycle_labeling_trace(cycle_labeling_from_text(labeling_text), cut);
      if (trace && !gl.json_lines()) {
        auto g = t.result.graph_ptr();
        out << "cut: v" << t.cut << " / v" << (t.cut + g->order() / 2) << '\n';
        out << "embedded: " << format_labeling(Labeling(g, t.embedded)) << '\n';
        out << "folded:   " << format_labeling(Labeling(g, t.folded)) << '\n';
        out << "result:   ";
      }
      print_labeling(out, gl, t.result);
      return kOk;
    }
    if (*t_crown) {
      print_labeling(out, gl, crown_labeling(crown_n));
      return kOk;
    }
    if (*t_extend) {
      auto g = std::make_shared<const Graph>(path(static_cast<std::uint32_t>(count_tokens(labeling_text))));
      print_labeling(out, gl, extend_path_labeling(parse_labeling(labeling_text, g, LabelMode::classical)));
      return kOk;
    }
    if (*c_verify) {
      Catalog cat = catalog_file.empty() ? load_catalog() : load_catalog(catalog_file);
      auto summary = verify_catalog(cat, out);
      return summary.ok() ? kOk : kFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
