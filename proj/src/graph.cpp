#include "irrdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

#include "irrdom/errors.hpp"
#include "irrdom/families.hpp"

namespace irrdom {

std::string FamilyTag::to_string() const {
  std::string s = kind;
  for (auto p : params) {
    s += ' ';
    s += std::to_string(p);
  }
  return s;
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<Distance> dist)
    : n_(n), dist_(std::move(dist)) {
  for (Distance d : dist_) {
    if (d == kUnreachable)
      connected_ = false;
    else
      diameter_ = std::max(diameter_, d);
  }
}

DistanceMatrix compute_distances(const std::vector<std::vector<Vertex>>& adjacency) {
  const std::size_t n = adjacency.size();
  std::vector<Distance> dist(n * n, kUnreachable);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    Distance* row = dist.data() + s * n;
    row[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex w : adjacency[u]) {
        if (row[w] == kUnreachable) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
  }
  return DistanceMatrix(n, std::move(dist));
}

Graph::Graph(std::size_t n, std::span<const Edge> edges, std::optional<FamilyTag> family)
    : adjacency_(n), family_(std::move(family)) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw ParameterError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                           "} has an endpoint outside [0," + std::to_string(n) + ")");
    if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& nb = adjacency_[v];
    std::sort(nb.begin(), nb.end());
    auto dup = std::adjacent_find(nb.begin(), nb.end());
    if (dup != nb.end())
      throw ParameterError("repeated edge {" + std::to_string(v) + "," + std::to_string(*dup) + "}");
  }
  edge_count_ = edges.size();
  distances_ = compute_distances(adjacency_);
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order())
    throw ParameterError("vertex " + std::to_string(v) + " out of range for graph of order " +
                         std::to_string(order()));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Distance Graph::diameter() const {
  if (!connected()) throw DisconnectedGraphError("diameter is undefined on a disconnected graph");
  return distances_.diameter();
}

Distance Graph::eccentricity(Vertex v) const {
  check_vertex(v);
  Distance e = 0;
  for (Distance d : distances_.row(v))
    if (d != kUnreachable) e = std::max(e, d);
  return e;
}

std::vector<std::size_t> Graph::sphere_sizes(Vertex v) const {
  check_vertex(v);
  std::vector<std::size_t> s(eccentricity(v) + 1, 0);
  for (Distance d : distances_.row(v))
    if (d != kUnreachable) ++s[d];
  return s;
}

bool Graph::spheres_invariant() const {
  if (order() == 0) return true;
  const auto first = sphere_sizes(0);
  for (Vertex v = 1; v < order(); ++v)
    if (sphere_sizes(v) != first) return false;
  return true;
}

void write_graph(std::ostream& out, const Graph& g) {
  if (g.family()) out << "# family: " << g.family()->to_string() << '\n';
  out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::optional<std::size_t> n;
  std::optional<FamilySpec> family;
  std::size_t family_line = 0;
  std::vector<Graph::Edge> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = trim(line);
    if (body.empty()) continue;
    if (body[0] == '#') {
      std::string comment = trim(std::string_view(body).substr(1));
      constexpr std::string_view key = "family:";
      if (comment.starts_with(key)) {
        try {
          family = parse_family_spec(trim(std::string_view(comment).substr(key.size())));
        } catch (const Error& e) {
          throw ParseError(e.what(), lineno);
        }
        family_line = lineno;
      }
      continue;
    }
    std::istringstream ls(body);
    if (!n) {
      std::string word;
      long long count = -1;
      if (!(ls >> word >> count) || word != "n" || count < 0)
        throw ParseError("expected header 'n <count>'", lineno);
      n = static_cast<std::size_t>(count);
    } else {
      long long u = -1, v = -1;
      if (!(ls >> u >> v) || u < 0 || v < 0)
        throw ParseError("expected edge 'u v' with non-negative integers", lineno);
      if (static_cast<std::size_t>(u) >= *n || static_cast<std::size_t>(v) >= *n)
        throw ParseError("edge endpoint out of range for n = " + std::to_string(*n), lineno);
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    std::string rest;
    if (ls >> rest) throw ParseError("trailing token '" + rest + "'", lineno);
  }
  if (!n) throw ParseError("missing header 'n <count>'");
  Graph g = [&] {
    try {
      return Graph(*n, edges);
    } catch (const ParameterError& e) {
      throw ParseError(e.what());
    }
  }();
  if (!family) return g;

  Graph reference = generate(*family);
  if (reference.order() != g.order() || reference.edges() != g.edges())
    throw ParseError("edge set does not match declared family '" + family->to_string() + "'",
                     family_line);
  return reference;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

}  // namespace irrdom
