#include "irrdom/domination.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "irrdom/errors.hpp"

namespace irrdom {

Labeling::Labeling(std::shared_ptr<const Graph> graph, std::vector<std::optional<Label>> labels,
                   LabelMode mode)
    : graph_(std::move(graph)), labels_(std::move(labels)), mode_(mode) {
  if (!graph_) throw ParameterError("labeling requires a graph");
  if (labels_.size() != graph_->order())
    throw ParameterError("labeling has " + std::to_string(labels_.size()) +
                         " entries for a graph of order " + std::to_string(graph_->order()));
}

Labeling Labeling::from_pairs(std::shared_ptr<const Graph> graph, std::span<const LabeledVertex> pairs,
                              LabelMode mode) {
  if (!graph) throw ParameterError("labeling requires a graph");
  std::vector<std::optional<Label>> labels(graph->order());
  for (auto [v, l] : pairs) {
    if (v >= labels.size())
      throw ParameterError("labeled vertex " + std::to_string(v) + " out of range");
    if (labels[v]) throw ParameterError("vertex " + std::to_string(v) + " labeled twice");
    labels[v] = l;
  }
  return Labeling(std::move(graph), std::move(labels), mode);
}

std::vector<LabeledVertex> Labeling::pairs() const {
  std::vector<LabeledVertex> out;
  for (Vertex v = 0; v < labels_.size(); ++v)
    if (labels_[v]) out.push_back({v, *labels_[v]});
  return out;
}

std::size_t Labeling::size() const {
  return static_cast<std::size_t>(
      std::count_if(labels_.begin(), labels_.end(), [](const auto& l) { return l.has_value(); }));
}

std::vector<Label> Labeling::label_values() const {
  std::vector<Label> out;
  for (const auto& l : labels_)
    if (l) out.push_back(*l);
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::duplicate_label: return "duplicate_label";
    case ViolationKind::missing_zero: return "missing_zero";
    case ViolationKind::multiple_zero: return "multiple_zero";
    case ViolationKind::zero_in_classical: return "zero_in_classical";
    case ViolationKind::label_exceeds_diameter: return "label_exceeds_diameter";
  }
  return "?";
}

bool VerificationReport::exact_cover() const {
  return valid && std::all_of(multiplicity.begin(), multiplicity.end(),
                              [](std::uint32_t m) { return m == 1; });
}

std::vector<Vertex> covered_set(const Graph& g, Vertex v, Label label) {
  if (v >= g.order()) throw ParameterError("vertex " + std::to_string(v) + " out of range");
  std::vector<Vertex> out;
  auto row = g.distances().row(v);
  for (Vertex u = 0; u < row.size(); ++u)
    if (row[u] == label) out.push_back(u);
  return out;
}

VerificationReport verify(const Labeling& lab) {
  const Graph& g = lab.graph();
  const std::size_t n = g.order();
  VerificationReport report;
  report.multiplicity.assign(n, 0);
  const Distance max_finite = g.distances().diameter();

  std::vector<Vertex> zero_holders;
  std::vector<std::optional<Vertex>> first_holder;
  for (auto [v, l] : lab.pairs()) {
    ++report.k;
    if (l >= first_holder.size()) first_holder.resize(std::size_t{l} + 1);
    if (first_holder[l]) {
      report.violations.push_back(
          {ViolationKind::duplicate_label, v, l,
           "label " + std::to_string(l) + " on vertices " + std::to_string(*first_holder[l]) +
               " and " + std::to_string(v)});
    } else {
      first_holder[l] = v;
    }
    if (l == 0) zero_holders.push_back(v);
    if (l > max_finite)
      report.violations.push_back({ViolationKind::label_exceeds_diameter, v, l,
                                   "label " + std::to_string(l) + " on vertex " + std::to_string(v) +
                                       " exceeds the diameter " + std::to_string(max_finite)});
    for (Vertex u = 0; u < n; ++u)
      if (g.distance(v, u) == l) ++report.multiplicity[u];
  }

  if (lab.mode() == LabelMode::extended) {
    if (zero_holders.empty())
      report.violations.push_back({ViolationKind::missing_zero, 0, 0, "no vertex is labeled 0"});
    // duplicate_label already reports extra zeros; keep one explicit record.
    if (zero_holders.size() > 1)
      report.violations.push_back({ViolationKind::multiple_zero, zero_holders[1], 0,
                                   std::to_string(zero_holders.size()) + " vertices are labeled 0"});
  } else {
    for (Vertex v : zero_holders)
      report.violations.push_back({ViolationKind::zero_in_classical, v, 0,
                                   "classical labeling uses 0 on vertex " + std::to_string(v)});
  }

  for (Vertex u = 0; u < n; ++u)
    if (report.multiplicity[u] == 0) report.uncovered.push_back(u);
  report.valid = report.uncovered.empty() && report.violations.empty();
  return report;
}

std::vector<std::size_t> max_sphere_sizes(const Graph& g) {
  const Distance diam = g.diameter();
  std::vector<std::size_t> best(std::size_t{diam} + 1, 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    auto s = g.sphere_sizes(v);
    for (std::size_t i = 0; i < s.size(); ++i) best[i] = std::max(best[i], s[i]);
  }
  return best;
}

std::size_t lower_bound(const Graph& g) {
  const std::size_t n = g.order();
  auto caps = max_sphere_sizes(g);
  std::vector<std::size_t> positive(caps.begin() + 1, caps.end());
  std::sort(positive.begin(), positive.end(), std::greater<>());
  std::size_t covered = 1, k = 1;
  for (std::size_t i = 0; covered < n && i < positive.size(); ++i) {
    covered += positive[i];
    ++k;
  }
  // Unreachable on connected graphs: the spheres of any one vertex already sum to n.
  return k;
}

}  // namespace irrdom
