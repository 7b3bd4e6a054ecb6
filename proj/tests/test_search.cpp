#include <doctest.h>

#include "irrdom/errors.hpp"
#include "irrdom/families.hpp"
#include "irrdom/search.hpp"
#include "irrdom/text_io.hpp"
#include "oracles.hpp"

using namespace irrdom;

namespace {

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

oracle::Assignment as_assignment(const Labeling& lab) {
  return {lab.labels().begin(), lab.labels().end()};
}

SearchOptions overlapping() {
  SearchOptions o;
  o.require_exact_cover = false;
  return o;
}

}  // namespace

TEST_CASE("found labelings verify with the requested size") {
  for (auto [g, k] : std::vector<std::pair<std::shared_ptr<const Graph>, std::size_t>>{
           {share(cycle(6)), 4}, {share(cycle(12)), 7}, {share(path(9)), 6}, {share(hypercube(3)), 4},
           {share(crown(5)), 4}}) {
    CAPTURE(g->family()->to_string());
    auto r = find_eids(g, k);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(r.labeling->size() == k);
    CHECK(verify(*r.labeling).valid);
    CHECK(r.nodes_explored > 0);
  }
}

TEST_CASE("non-transitive bipartite graphs follow the oracle") {
  for (auto [m, n] : {std::pair{2u, 3u}, std::pair{1u, 4u}, std::pair{2u, 4u}, std::pair{3u, 4u}}) {
    auto g = share(complete_bipartite(m, n));
    for (std::size_t k = 1; k <= 3; ++k)
      CHECK((find_eids(g, k).status == SearchStatus::found) == !oracle::all_labelings(*g, k).empty());
  }
}

TEST_CASE("first solution is the lexicographic minimum") {
  // Paths have no symmetry breaking, so the first solution is the oracle's first.
  for (std::uint32_t n = 1; n <= 9; ++n) {
    auto g = share(path(n));
    for (std::size_t k = 1; k <= std::min<std::size_t>(n, 6); ++k) {
      CAPTURE(n);
      CAPTURE(k);
      auto all = oracle::all_labelings(*g, k);
      auto r = find_eids(g, k);
      if (all.empty()) {
        CHECK(r.status == SearchStatus::absent);
      } else {
        REQUIRE(r.status == SearchStatus::found);
        CHECK(as_assignment(*r.labeling) == all.front());
      }
    }
  }
  // On cycles the lex-min solution labels v0 with 0, so fixing it loses nothing.
  for (std::uint32_t n : {6u, 7u, 10u}) {
    auto g = share(cycle(n));
    std::size_t k = g->diameter() + 1;
    auto all = oracle::all_labelings(*g, k);
    auto r = find_eids(g, k);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(as_assignment(*r.labeling) == all.front());
  }
}

TEST_CASE("enumerate_all matches the brute-force oracle") {
  for (auto g : {share(path(5)), share(path(7)), share(cycle(6)), share(cycle(7)), share(complete(4)),
                 share(crown(3)), share(hypercube(3)), share(complete_bipartite(2, 3))}) {
    CAPTURE(g->family()->to_string());
    for (std::size_t k = 1; k <= std::min<std::size_t>(g->order(), g->diameter() + 1); ++k) {
      auto ref = oracle::all_labelings(*g, k);
      auto got = enumerate_all(g, k);
      REQUIRE(got.size() == ref.size());
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(as_assignment(got[i]) == ref[i]);
    }
  }
}

TEST_CASE("exact-cover pruning loses nothing on vertex-transitive graphs") {
  for (auto g : {share(cycle(6)), share(cycle(7)), share(crown(4)), share(hypercube(3))}) {
    CAPTURE(g->family()->to_string());
    std::size_t k = g->diameter() + 1;
    SearchOptions exact;
    exact.require_exact_cover = true;
    auto pruned = enumerate_all(g, k, exact);
    auto full = enumerate_all(g, k);
    CHECK(pruned.size() == full.size());
    for (const auto& lab : full) CHECK(verify(lab).exact_cover());
  }
}

TEST_CASE("gamma_e agrees with the oracle") {
  for (auto g : {share(path(1)), share(path(2)), share(path(3)), share(path(4)), share(path(6)), share(path(7)),
                 share(path(8)), share(cycle(3)), share(cycle(4)), share(cycle(6)), share(cycle(7)),
                 share(complete(4)), share(hypercube(2)), share(mobius_ladder(3)), share(crown(4))}) {
    CAPTURE(g->family()->to_string());
    auto ref = oracle::gamma(*g);
    auto r = gamma_e(g, overlapping());
    if (ref) {
      REQUIRE(r.status == SearchStatus::found);
      CHECK(*r.gamma == *ref);
      CHECK(verify(*r.witness).valid);
      CHECK(r.witness->size() == *ref);
    } else {
      CHECK(r.status == SearchStatus::absent);
      CHECK_FALSE(r.gamma);
    }
    // The default (exact-cover on transitive graphs) must agree.
    auto fast = gamma_e(g);
    CHECK(fast.status == r.status);
    CHECK(fast.gamma == r.gamma);
  }
}

TEST_CASE("parallel search returns the serial answer") {
  for (auto [g, k] : std::vector<std::pair<std::shared_ptr<const Graph>, std::size_t>>{
           {share(cycle(16)), 9}, {share(cycle(20)), 11}, {share(path(12)), 8}, {share(hypercube(4)), 5}}) {
    auto serial = find_eids(g, k);
    for (unsigned w : {2u, 4u}) {
      SearchOptions o;
      o.parallel_width = w;
      auto par = find_eids(g, k, o);
      CHECK(par.status == serial.status);
      CHECK(par.labeling == serial.labeling);
    }
  }
}

TEST_CASE("label universe restricts labels") {
  auto g = share(path(9));
  SearchOptions o;
  o.label_universe = 5;
  auto r = find_eids(g, 6, o);
  REQUIRE(r.status == SearchStatus::found);
  for (Label l : r.labeling->label_values()) CHECK(l <= 5);
  o.label_universe = 3;
  CHECK(find_eids(g, 4, o).status == SearchStatus::absent);
}

TEST_CASE("budget exhaustion is inconclusive") {
  SearchOptions o;
  o.time_budget = std::chrono::milliseconds(0);
  auto r = find_eids(share(path(40)), 21, o);
  CHECK(r.status == SearchStatus::inconclusive);
  CHECK_FALSE(r.labeling);
  auto gr = gamma_e(share(path(40)), o);
  CHECK(gr.status == SearchStatus::inconclusive);
}

TEST_CASE("argument errors") {
  auto g = share(cycle(6));
  CHECK_THROWS_AS(find_eids(g, 0), ParameterError);
  CHECK_THROWS_AS(find_eids(g, 7), ParameterError);
  std::vector<Graph::Edge> e{{0, 1}, {2, 3}};
  CHECK_THROWS_AS(find_eids(Graph(4, e), 2), DisconnectedGraphError);
  SearchOptions tight;
  tight.enumeration_cap = 100;
  CHECK_THROWS_AS(enumerate_all(share(cycle(12)), 7, tight), CapExceededError);
  CHECK(raw_assignment_count(6, 4, 3) == doctest::Approx(15.0 * 24.0));
}

TEST_CASE("k above diameter + 1 is absent") {
  auto r = find_eids(share(cycle(6)), 5);
  CHECK(r.status == SearchStatus::absent);
}
