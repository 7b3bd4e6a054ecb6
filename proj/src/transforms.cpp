#include "irrdom/transforms.hpp"

#include <algorithm>
#include <stdexcept>

#include "irrdom/errors.hpp"
#include "irrdom/families.hpp"

namespace irrdom {

bool is_canonical_cycle(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3 || g.edge_count() != n) return false;
  for (Vertex v = 0; v < n; ++v)
    if (!g.adjacent(v, static_cast<Vertex>((v + 1) % n))) return false;
  return true;
}

bool is_canonical_path(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || g.edge_count() != n - 1) return false;
  for (Vertex v = 0; v + 1 < n; ++v)
    if (!g.adjacent(v, v + 1)) return false;
  return true;
}

Labeling starter_to_cycle_labeling(const Starter& s) {
  if (classify(s) < StarterClass::strong)
    throw ParameterError("starter_to_cycle_labeling: the starter is not strong");
  const std::uint32_t n = s.n;
  std::vector<std::optional<Label>> labels(n);
  labels[0] = 0;
  for (auto [a, b] : s.pairs) {
    const std::uint32_t x = std::max(a, b), y = std::min(a, b);
    const std::uint32_t center = (x + y) % 2 == 0 ? (x + y) / 2 : ((n + x + y) / 2) % n;
    const Label label = (x - y) % 2 == 0 ? (x - y) / 2 : (n - (x - y)) / 2;
    labels[center] = label;
  }
  Labeling lab(std::make_shared<const Graph>(cycle(n)), std::move(labels));
  if (!verify(lab).valid) throw std::logic_error("starter_to_cycle_labeling produced an invalid labeling");
  return lab;
}

namespace {

void require_optimal_odd_cycle(const Labeling& lab, const char* who) {
  const Graph& g = lab.graph();
  if (!is_canonical_cycle(g)) throw ParameterError(std::string(who) + ": labeling is not on a canonical cycle");
  if (g.order() % 2 == 0) throw ParameterError(std::string(who) + ": cycle length must be odd");
  if (lab.mode() != LabelMode::extended) throw ParameterError(std::string(who) + ": labeling must be extended");
  if (!verify(lab).valid) throw ParameterError(std::string(who) + ": labeling does not verify");
  if (lab.size() != (g.order() + 1) / 2) throw ParameterError(std::string(who) + ": labeling is not optimal");
}

}  // namespace

Labeling normalize_cycle_rotation(const Labeling& lab) {
  const std::size_t n = lab.graph().order();
  auto labels = lab.labels();
  auto zero = std::find(labels.begin(), labels.end(), std::optional<Label>{0});
  if (zero == labels.end()) throw ParameterError("cycle labeling has no 0");
  const auto shift = static_cast<std::size_t>(zero - labels.begin());
  std::vector<std::optional<Label>> rotated(n);
  for (std::size_t v = 0; v < n; ++v) rotated[v] = labels[(v + shift) % n];
  return Labeling(lab.graph_ptr(), std::move(rotated), lab.mode());
}

Starter cycle_labeling_to_starter(const Labeling& lab) {
  require_optimal_odd_cycle(lab, "cycle_labeling_to_starter");
  Labeling norm = normalize_cycle_rotation(lab);
  const auto n = static_cast<std::uint32_t>(norm.graph().order());
  Starter s{n, {}};
  for (auto [v, l] : norm.pairs()) {
    if (l == 0) continue;
    s.pairs.emplace_back((v + l) % n, (v + n - l) % n);
  }
  if (classify(s) < StarterClass::strong)
    throw std::logic_error("cycle_labeling_to_starter produced a non-strong starter");
  return s;
}

DoublingTrace double_cycle_labeling_trace(const Labeling& lab, std::optional<Vertex> cut) {
  require_optimal_odd_cycle(lab, "double_cycle_labeling");
  const std::uint32_t n = static_cast<std::uint32_t>(lab.graph().order());
  const std::uint32_t big = 2 * n;

  std::vector<std::optional<Label>> embedded(big);
  for (auto [v, l] : lab.pairs()) embedded[2 * v] = 2 * l;

  if (!cut) {
    for (Vertex v = 0; v < big; v += 2) {
      if (!embedded[v]) {
        cut = v;
        break;
      }
    }
    // Impossible for optimal input: (n+1)/2 labels on n even vertices.
    if (!cut) throw std::logic_error("double_cycle_labeling: no unlabeled even vertex");
  } else if (*cut >= big || *cut % 2 != 0 || embedded[*cut]) {
    throw ParameterError("double_cycle_labeling: cut must be an unlabeled even vertex of C_" + std::to_string(big));
  }
  const Vertex c = *cut;

  // Kept side: v_{c+n+1} .. v_{c+2n-1}; far side: v_{c+1} .. v_{c+n-1}.
  std::vector<std::optional<Label>> folded(big);
  for (std::uint32_t t = 1; t < n; ++t) {
    const Vertex kept = (c + n + t) % big;
    if (embedded[kept]) folded[kept] = embedded[kept];
    const Vertex far = (c + t) % big;
    if (embedded[far]) folded[(far + n) % big] = *embedded[far] == 0 ? n : n - *embedded[far];
  }

  std::vector<std::optional<Label>> result(big);
  for (Vertex v = 0; v < big; ++v) {
    if (!folded[v]) continue;
    const Label x = *folded[v];
    result[v] = x;
    result[(2 * c + big - v) % big] = x == n ? 0 : n - x;
  }
  Labeling out(std::make_shared<const Graph>(cycle(big)), std::move(result));
  if (!verify(out).valid || out.size() != n + 1)
    throw std::logic_error("double_cycle_labeling produced an invalid labeling");
  return DoublingTrace{c, std::move(embedded), std::move(folded), std::move(out)};
}

Labeling double_cycle_labeling(const Labeling& lab, std::optional<Vertex> cut) {
  return double_cycle_labeling_trace(lab, cut).result;
}

Labeling crown_labeling(std::uint32_t n) {
  if (n < 3) throw ParameterError("crown_labeling: requires n >= 3");
  auto g = std::make_shared<const Graph>(crown(n));
  const LabeledVertex pairs[] = {{0, 0}, {1, 3}, {n, 1}, {n + 1, 2}};
  return Labeling::from_pairs(std::move(g), pairs);
}

Labeling extend_path_labeling(const Labeling& idl) {
  if (!is_canonical_path(idl.graph())) throw ParameterError("extend_path_labeling: labeling is not on a path");
  if (idl.mode() != LabelMode::classical)
    throw ParameterError("extend_path_labeling: input must be a classical labeling");
  if (!verify(idl).valid) throw ParameterError("extend_path_labeling: input labeling does not verify");
  const auto n = static_cast<std::uint32_t>(idl.graph().order());
  std::vector<std::optional<Label>> labels(idl.labels().begin(), idl.labels().end());
  labels.push_back(0);
  return Labeling(std::make_shared<const Graph>(path(n + 1)), std::move(labels));
}

}  // namespace irrdom
