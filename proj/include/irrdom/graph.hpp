#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace irrdom {

using Vertex = std::uint32_t;
using Distance = std::uint32_t;

inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

// Provenance of a family-generated graph. Vertex transitivity is taken from
// the family, never decided from the edge set.
struct FamilyTag {
  std::string kind;
  std::vector<std::uint32_t> params;
  bool vertex_transitive = false;

  // "cycle 6", "complete_bipartite 3 4"
  std::string to_string() const;
  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

// All-pairs hop distances, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<Distance> dist);

  std::size_t size() const { return n_; }
  Distance operator()(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
  std::span<const Distance> row(Vertex u) const { return {dist_.data() + u * n_, n_}; }

  // Largest finite entry.
  Distance diameter() const { return diameter_; }
  bool connected() const { return connected_; }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> dist_;
  Distance diameter_ = 0;
  bool connected_ = true;
};

// Immutable undirected simple graph on vertices 0..n-1. Distances are
// computed once at construction.
class Graph {
 public:
  using Edge = std::pair<Vertex, Vertex>;

  // Throws ParameterError on self-loops, repeated edges, or out-of-range endpoints.
  Graph(std::size_t n, std::span<const Edge> edges, std::optional<FamilyTag> family = std::nullopt);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  bool adjacent(Vertex u, Vertex v) const;

  // Sorted (u < v) edge list.
  std::vector<Edge> edges() const;

  const std::optional<FamilyTag>& family() const { return family_; }
  bool vertex_transitive() const { return family_ && family_->vertex_transitive; }
  bool is_family(std::string_view kind) const { return family_ && family_->kind == kind; }

  const DistanceMatrix& distances() const { return distances_; }
  Distance distance(Vertex u, Vertex v) const { return distances_(u, v); }
  bool connected() const { return distances_.connected(); }

  // Throws DisconnectedGraphError when some pair is unreachable.
  Distance diameter() const;

  // s_i(v) for i in [0, eccentricity(v)]; entries sum to n on connected graphs.
  std::vector<std::size_t> sphere_sizes(Vertex v) const;

  // True iff every vertex has the same sphere-size sequence. Necessary, not
  // sufficient, for vertex transitivity.
  bool spheres_invariant() const;

  // Largest finite distance from v.
  Distance eccentricity(Vertex v) const;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  std::optional<FamilyTag> family_;
  DistanceMatrix distances_;
};

// BFS from every vertex.
DistanceMatrix compute_distances(const std::vector<std::vector<Vertex>>& adjacency);

// Text format: "n <count>" then one "u v" pair per line, '#' comments.
// A "# family: <kind> <params...>" comment is written for tagged graphs.
void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);

// Reads the text format. A family comment is honoured only when the edge set
// matches the regenerated family graph exactly; otherwise ParseError.
Graph read_graph(std::istream& in);
Graph parse_graph(const std::string& text);

}  // namespace irrdom
