#include "irrdom/families.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include "irrdom/errors.hpp"

namespace irrdom {

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 7> kNames{{
    {FamilyKind::cycle, "cycle"},
    {FamilyKind::path, "path"},
    {FamilyKind::hypercube, "hypercube"},
    {FamilyKind::mobius_ladder, "mobius_ladder"},
    {FamilyKind::crown, "crown"},
    {FamilyKind::complete, "complete"},
    {FamilyKind::complete_bipartite, "complete_bipartite"},
}};

// Hypercube dimension cap keeps the all-pairs table within memory.
constexpr std::uint32_t kMaxHypercubeDim = 14;

void require(bool ok, const FamilySpec& spec, const std::string& bound) {
  if (!ok) throw ParameterError(std::string(to_string(spec.kind)) + ": requires " + bound);
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  for (auto [k, name] : kNames)
    if (k == kind) return name;
  return "?";
}

std::optional<FamilyKind> family_kind_from_string(std::string_view name) {
  for (auto [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

std::string FamilySpec::to_string() const {
  std::string s(irrdom::to_string(kind));
  for (auto p : params) s += ' ' + std::to_string(p);
  return s;
}

FamilySpec parse_family_spec(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string name;
  if (!(in >> name)) throw ParameterError("empty family specification");
  auto kind = family_kind_from_string(name);
  if (!kind) throw ParameterError("unknown family '" + name + "'");
  FamilySpec spec{*kind, {}};
  std::string tok;
  while (in >> tok) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParameterError("family parameter '" + tok + "' is not a non-negative integer");
    spec.params.push_back(value);
  }
  validate(spec);
  return spec;
}

void validate(const FamilySpec& spec) {
  const std::size_t arity = spec.kind == FamilyKind::complete_bipartite ? 2 : 1;
  require(spec.params.size() == arity, spec, std::to_string(arity) + " parameter(s)");
  const auto n = spec.params[0];
  switch (spec.kind) {
    case FamilyKind::cycle: require(n >= 3, spec, "n >= 3"); break;
    case FamilyKind::path: require(n >= 1, spec, "n >= 1"); break;
    case FamilyKind::hypercube:
      require(n <= kMaxHypercubeDim, spec, "n <= " + std::to_string(kMaxHypercubeDim));
      break;
    case FamilyKind::mobius_ladder: require(n >= 2, spec, "n >= 2"); break;
    case FamilyKind::crown: require(n >= 3, spec, "n >= 3"); break;
    case FamilyKind::complete: require(n >= 1, spec, "n >= 1"); break;
    case FamilyKind::complete_bipartite:
      require(n >= 1 && spec.params[1] >= 1, spec, "m >= 1 and n >= 1");
      break;
  }
}

Graph generate(const FamilySpec& spec) {
  validate(spec);
  std::vector<Graph::Edge> edges;
  std::size_t order = 0;
  bool vt = true;
  const std::uint32_t n = spec.params[0];
  switch (spec.kind) {
    case FamilyKind::cycle:
      order = n;
      for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      break;
    case FamilyKind::path:
      order = n;
      vt = n <= 2;  // K_1 and K_2
      for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case FamilyKind::hypercube:
      order = std::size_t{1} << n;
      for (Vertex v = 0; v < order; ++v)
        for (std::uint32_t b = 0; b < n; ++b)
          if (Vertex w = v ^ (1u << b); v < w) edges.emplace_back(v, w);
      break;
    case FamilyKind::mobius_ladder:
      order = 2 * std::size_t{n};
      for (Vertex i = 0; i < 2 * n; ++i) edges.emplace_back(i, (i + 1) % (2 * n));
      for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, i + n);
      break;
    case FamilyKind::crown:
      order = 2 * std::size_t{n};
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
          if (i != j) edges.emplace_back(i, n + j);
      break;
    case FamilyKind::complete:
      order = n;
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      break;
    case FamilyKind::complete_bipartite: {
      const std::uint32_t m = n, k = spec.params[1];
      order = std::size_t{m} + k;
      vt = m == k;
      for (Vertex i = 0; i < m; ++i)
        for (Vertex j = 0; j < k; ++j) edges.emplace_back(i, m + j);
      break;
    }
  }
  return Graph(order, edges, FamilyTag{std::string(to_string(spec.kind)), spec.params, vt});
}

Graph cycle(std::uint32_t n) { return generate({FamilyKind::cycle, {n}}); }
Graph path(std::uint32_t n) { return generate({FamilyKind::path, {n}}); }
Graph hypercube(std::uint32_t dim) { return generate({FamilyKind::hypercube, {dim}}); }
Graph mobius_ladder(std::uint32_t half) { return generate({FamilyKind::mobius_ladder, {half}}); }
Graph crown(std::uint32_t n) { return generate({FamilyKind::crown, {n}}); }
Graph complete(std::uint32_t n) { return generate({FamilyKind::complete, {n}}); }
Graph complete_bipartite(std::uint32_t m, std::uint32_t n) {
  return generate({FamilyKind::complete_bipartite, {m, n}});
}

std::optional<FamilySpec> family_spec_of(const Graph& g) {
  if (!g.family()) return std::nullopt;
  auto kind = family_kind_from_string(g.family()->kind);
  if (!kind) return std::nullopt;
  return FamilySpec{*kind, g.family()->params};
}

}  // namespace irrdom
