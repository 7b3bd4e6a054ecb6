#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "irrdom/graph.hpp"

namespace irrdom {

using Label = std::uint32_t;

// extended: exactly one vertex carries label 0 and dominates itself.
// classical: all labels positive (irregular dominating labeling).
enum class LabelMode { extended, classical };

struct LabeledVertex {
  Vertex vertex;
  Label label;
  friend auto operator<=>(const LabeledVertex&, const LabeledVertex&) = default;
};

// Partial assignment vertex -> label on a fixed graph. Structural rules
// (distinct labels, the single 0) are checked by verify(), not here, so that
// malformed input can still be diagnosed.
class Labeling {
 public:
  // One entry per vertex; throws ParameterError if the size differs from the graph order.
  Labeling(std::shared_ptr<const Graph> graph, std::vector<std::optional<Label>> labels,
           LabelMode mode = LabelMode::extended);

  // Throws ParameterError on an out-of-range or repeated vertex.
  static Labeling from_pairs(std::shared_ptr<const Graph> graph, std::span<const LabeledVertex> pairs,
                             LabelMode mode = LabelMode::extended);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  LabelMode mode() const { return mode_; }

  std::optional<Label> at(Vertex v) const { return labels_.at(v); }
  std::span<const std::optional<Label>> labels() const { return labels_; }

  // Labeled vertices in increasing vertex order.
  std::vector<LabeledVertex> pairs() const;
  // Number of labeled vertices (k).
  std::size_t size() const;
  // Sorted label values.
  std::vector<Label> label_values() const;

  Labeling with_mode(LabelMode mode) const { return Labeling(graph_, labels_, mode); }

  friend bool operator==(const Labeling& a, const Labeling& b) {
    return a.mode_ == b.mode_ && a.labels_ == b.labels_ &&
           a.graph_->edges() == b.graph_->edges();
  }

 private:
  std::shared_ptr<const Graph> graph_;
  std::vector<std::optional<Label>> labels_;
  LabelMode mode_;
};

enum class ViolationKind {
  duplicate_label,
  missing_zero,
  multiple_zero,
  zero_in_classical,
  label_exceeds_diameter,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  Vertex vertex;
  Label label;
  std::string message;
};

struct VerificationReport {
  bool valid = false;
  std::size_t k = 0;
  // Number of labeled vertices dominating each vertex.
  std::vector<std::uint32_t> multiplicity;
  std::vector<Vertex> uncovered;
  std::vector<Violation> violations;

  bool exact_cover() const;
};

// Vertices at distance exactly `label` from v; {v} for label 0.
std::vector<Vertex> covered_set(const Graph& g, Vertex v, Label label);

VerificationReport verify(const Labeling& lab);

// Counting lower bound on the size of any extended labeling: the smallest k
// with 1 + (sum of the k-1 largest max-sphere sizes over distinct labels >= 1) >= n.
// Evaluates to ceil((n+1)/2) on paths. Throws DisconnectedGraphError.
std::size_t lower_bound(const Graph& g);

// max over v of s_label(v), for label in [0, diameter].
std::vector<std::size_t> max_sphere_sizes(const Graph& g);

}  // namespace irrdom
