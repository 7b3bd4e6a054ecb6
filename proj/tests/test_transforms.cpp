#include <doctest.h>

#include "irrdom/errors.hpp"
#include "irrdom/families.hpp"
#include "irrdom/search.hpp"
#include "irrdom/starters.hpp"
#include "irrdom/text_io.hpp"
#include "irrdom/transforms.hpp"
#include "oracles.hpp"

using namespace irrdom;

namespace {

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

std::vector<Label> iota_labels(Label top) {
  std::vector<Label> v(top + 1);
  for (Label i = 0; i <= top; ++i) v[i] = i;
  return v;
}

bool oracle_valid(const Labeling& lab) {
  return oracle::valid(oracle::distances(lab.graph()), {lab.labels().begin(), lab.labels().end()});
}

}  // namespace

TEST_CASE("canonical family checks") {
  CHECK(is_canonical_cycle(cycle(9)));
  CHECK_FALSE(is_canonical_cycle(path(9)));
  CHECK(is_canonical_path(path(4)));
  CHECK_FALSE(is_canonical_path(cycle(4)));
  std::vector<Graph::Edge> e{{0, 1}, {1, 2}, {2, 0}};
  CHECK(is_canonical_cycle(Graph(3, e)));
}

TEST_CASE("strong starter to cycle labeling and back") {
  const Starter z17{17, {{9, 10}, {3, 5}, {13, 16}, {11, 15}, {1, 6}, {2, 8}, {7, 14}, {4, 12}}};
  Labeling lab = starter_to_cycle_labeling(z17);
  CHECK(oracle_valid(lab));
  CHECK(lab.size() == 9);
  CHECK(lab.label_values() == iota_labels(8));
  CHECK(lab.at(0) == Label{0});
  CHECK(cycle_labeling_to_starter(lab).same_pairs(z17));

  for (std::uint32_t n = 7; n <= 31; n += 2) {
    if (n == 9) continue;
    auto s = hill_climb(n, StarterClass::strong, 3);
    REQUIRE(s);
    Labeling l = starter_to_cycle_labeling(*s);
    CHECK(oracle_valid(l));
    CHECK(cycle_labeling_to_starter(l).same_pairs(*s));
  }
  Starter plain{7, {{1, 6}, {2, 5}, {3, 4}}};
  CHECK_THROWS_AS(starter_to_cycle_labeling(plain), ParameterError);
}

TEST_CASE("cycle labelings map to strong starters from any rotation") {
  auto g = share(cycle(7));
  for (const auto& lab : enumerate_all(g, 4)) {
    Starter s = cycle_labeling_to_starter(lab);
    CHECK(oracle::starter_level(s.n, s.pairs) >= 2);
    CHECK(normalize_cycle_rotation(lab).at(0) == Label{0});
  }
  CHECK_THROWS_AS(cycle_labeling_to_starter(parse_labeling("(3,1,_,2,0,_)", share(cycle(6)))), ParameterError);
  CHECK_THROWS_AS(cycle_labeling_to_starter(parse_labeling("(0,_,_,_,_,_,_)", g)), ParameterError);
}

TEST_CASE("doubling example on C7") {
  auto g = share(cycle(7));
  Labeling l1 = parse_labeling("(1,_,2,_,_,0,3)", g);
  auto t = double_cycle_labeling_trace(l1, 8);
  CHECK(t.cut == 8);
  CHECK(t.embedded[0] == Label{2});
  CHECK(t.embedded[4] == Label{4});
  CHECK(t.embedded[10] == Label{0});
  CHECK(t.embedded[12] == Label{6});
  CHECK(t.folded[3] == Label{7});
  CHECK(t.folded[4] == Label{4});
  CHECK(t.folded[5] == Label{1});
  CHECK(t.folded[7] == Label{5});
  CHECK(oracle_valid(t.result));
  CHECK(t.result.label_values() == iota_labels(7));
  // The default cut is the first unlabeled even vertex.
  CHECK(double_cycle_labeling_trace(l1).cut == 2);
  CHECK_THROWS_AS(double_cycle_labeling(l1, 4), ParameterError);
  CHECK_THROWS_AS(double_cycle_labeling(l1, 3), ParameterError);
}

TEST_CASE("doubling every optimal labeling of small odd cycles") {
  for (std::uint32_t n : {7u, 11u}) {
    auto g = share(cycle(n));
    for (const auto& lab : enumerate_all(g, (n + 1) / 2)) {
      Labeling d = double_cycle_labeling(lab);
      CHECK(d.graph().order() == 2 * n);
      CHECK(oracle_valid(d));
      CHECK(d.label_values() == iota_labels(n));
    }
  }
  CHECK_THROWS_AS(double_cycle_labeling(parse_labeling("(3,1,_,2,0,_)", share(cycle(6)))), ParameterError);
}

TEST_CASE("crown labeling") {
  for (std::uint32_t n = 3; n <= 12; ++n) {
    Labeling l = crown_labeling(n);
    CHECK(oracle_valid(l));
    CHECK(l.label_values() == iota_labels(3));
  }
  CHECK_THROWS_AS(crown_labeling(2), ParameterError);
}

TEST_CASE("extending a classical path labeling") {
  auto p8 = share(path(8));
  Labeling idl = parse_labeling("[_,5,3,1,4,2,_,6]", p8, LabelMode::classical);
  Labeling ext = extend_path_labeling(idl);
  CHECK(format_labeling(ext) == "[_,5,3,1,4,2,_,6,0]");
  CHECK(oracle_valid(ext));
  // Every classical labeling of small paths extends.
  for (std::uint32_t n = 2; n <= 8; ++n) {
    auto g = share(path(n));
    auto d = oracle::distances(*g);
    for (std::size_t k = 1; k <= n; ++k)
      for (const auto& lab : enumerate_all(g, k)) {
        // Drop the 0 and keep only labelings that are still valid classically.
        std::vector<std::optional<Label>> labels(lab.labels().begin(), lab.labels().end());
        for (auto& l : labels)
          if (l == Label{0}) l.reset();
        if (!oracle::valid(d, {labels.begin(), labels.end()}, false)) continue;
        CHECK(oracle_valid(extend_path_labeling(Labeling(g, labels, LabelMode::classical))));
      }
  }
  CHECK_THROWS_AS(extend_path_labeling(parse_labeling("[_,5,3,1,4,2,_,_]", p8, LabelMode::classical)),
                  ParameterError);
}
