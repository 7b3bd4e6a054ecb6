#include <doctest.h>

#include <numeric>
#include <sstream>

#include "irrdom/errors.hpp"
#include "irrdom/families.hpp"
#include "oracles.hpp"

using namespace irrdom;

namespace {

std::vector<FamilySpec> small_families() {
  std::vector<FamilySpec> out;
  for (std::uint32_t n = 3; n <= 12; ++n) out.push_back({FamilyKind::cycle, {n}});
  for (std::uint32_t n = 1; n <= 10; ++n) out.push_back({FamilyKind::path, {n}});
  for (std::uint32_t d = 0; d <= 5; ++d) out.push_back({FamilyKind::hypercube, {d}});
  for (std::uint32_t h = 2; h <= 7; ++h) out.push_back({FamilyKind::mobius_ladder, {h}});
  for (std::uint32_t n = 3; n <= 6; ++n) out.push_back({FamilyKind::crown, {n}});
  for (std::uint32_t n = 1; n <= 6; ++n) out.push_back({FamilyKind::complete, {n}});
  out.push_back({FamilyKind::complete_bipartite, {2, 3}});
  out.push_back({FamilyKind::complete_bipartite, {4, 4}});
  return out;
}

}  // namespace

TEST_CASE("BFS distances agree with Floyd-Warshall on every small family") {
  for (const auto& spec : small_families()) {
    CAPTURE(spec.to_string());
    Graph g = generate(spec);
    auto ref = oracle::distances(g);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < g.order(); ++v) REQUIRE(g.distance(u, v) == ref[u][v]);
    CHECK(g.diameter() == oracle::diameter(ref));
  }
}

TEST_CASE("distance axioms and sphere sums") {
  for (const auto& spec : small_families()) {
    CAPTURE(spec.to_string());
    Graph g = generate(spec);
    const auto n = g.order();
    for (Vertex u = 0; u < n; ++u) {
      auto s = g.sphere_sizes(u);
      CHECK(std::accumulate(s.begin(), s.end(), std::size_t{0}) == n);
      CHECK(s[0] == 1);
      CHECK(s.size() == g.eccentricity(u) + 1);
      for (Vertex v = 0; v < n; ++v) {
        CHECK(g.distance(u, v) == g.distance(v, u));
        CHECK((g.distance(u, v) == 0) == (u == v));
        for (Vertex w = 0; w < n; ++w) CHECK(g.distance(u, w) <= g.distance(u, v) + g.distance(v, w));
      }
    }
    if (g.vertex_transitive()) CHECK(g.spheres_invariant());
  }
}

TEST_CASE("closed-form diameters") {
  CHECK(cycle(6).diameter() == 3);
  CHECK(cycle(7).diameter() == 3);
  CHECK(path(1).diameter() == 0);
  CHECK(path(9).diameter() == 8);
  CHECK(hypercube(4).diameter() == 4);
  CHECK(crown(4).diameter() == 3);
  CHECK(complete(5).diameter() == 1);
  CHECK(mobius_ladder(4).diameter() == 2);
}

TEST_CASE("sphere sizes of C6") {
  Graph g = cycle(6);
  CHECK(g.sphere_sizes(0) == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(g.spheres_invariant());
  CHECK_FALSE(path(4).spheres_invariant());
}

TEST_CASE("construction rejects malformed edge lists") {
  std::vector<Graph::Edge> loop{{0, 0}};
  CHECK_THROWS_AS(Graph(2, loop), ParameterError);
  std::vector<Graph::Edge> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph(2, dup), ParameterError);
  std::vector<Graph::Edge> range{{0, 5}};
  CHECK_THROWS_AS(Graph(3, range), ParameterError);
}

TEST_CASE("disconnected graphs have no diameter") {
  std::vector<Graph::Edge> e{{0, 1}, {2, 3}};
  Graph g(4, e);
  CHECK_FALSE(g.connected());
  CHECK(g.distance(0, 2) == kUnreachable);
  CHECK_THROWS_AS(g.diameter(), DisconnectedGraphError);
  CHECK_FALSE(g.vertex_transitive());
}

TEST_CASE("graph text round trip keeps the family tag") {
  for (const auto& spec : small_families()) {
    CAPTURE(spec.to_string());
    Graph g = generate(spec);
    Graph back = parse_graph(format_graph(g));
    CHECK(back.edges() == g.edges());
    CHECK(back.order() == g.order());
    REQUIRE(back.family());
    CHECK(*back.family() == *g.family());
  }
  std::vector<Graph::Edge> e{{0, 1}, {1, 2}};
  Graph plain(3, e);
  Graph back = parse_graph(format_graph(plain));
  CHECK(back.edges() == plain.edges());
  CHECK_FALSE(back.family());
}

TEST_CASE("graph parse errors carry the line number") {
  auto line_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("n 3\n0 1\n1 x\n") == 3);
  CHECK(line_of("# hi\nn 3\n0 1\n0 7\n") == 4);
  // A family comment that does not match the edges is refused.
  CHECK_THROWS_AS(parse_graph("# family: cycle 4\nn 4\n0 1\n1 2\n2 3\n"), ParseError);
}
