#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "irrdom/domination.hpp"
#include "irrdom/starters.hpp"

namespace irrdom {

// True iff g is the canonical cycle on its vertices (v_i ~ v_{i+1 mod n}).
bool is_canonical_cycle(const Graph& g);
// True iff g is the canonical path x_1 - x_2 - ... - x_n.
bool is_canonical_path(const Graph& g);

// Strong starter of Z_n -> optimal extended labeling of C_n. v_0 gets 0; the
// pair {x, y} (x > y) puts label (x-y)/2 or (n-(x-y))/2, whichever is an
// integer, on the vertex halfway between them. Throws ParameterError if the
// starter is not strong.
Labeling starter_to_cycle_labeling(const Starter& s);

// Inverse of the above. The labeling is first rotated so that its 0 sits on
// v_0; each other labeled vertex contributes the pair of vertices it
// dominates. Throws ParameterError unless lab is a valid optimal extended
// labeling of an odd canonical cycle.
Starter cycle_labeling_to_starter(const Labeling& lab);

// Rotation of a cycle labeling moving its 0 to v_0.
Labeling normalize_cycle_rotation(const Labeling& lab);

struct DoublingTrace {
  Vertex cut;  // unlabeled even vertex of C_2n; its antipode completes the cut
  std::vector<std::optional<Label>> embedded;  // labels doubled onto even vertices
  std::vector<std::optional<Label>> folded;    // everything moved to one side of the cut
  Labeling result;
};

// Optimal labeling of C_n (n odd) -> optimal labeling of C_2n with labels
// [0, n]. Labels are doubled onto v_{2i}; the labeled vertices on the far side
// of the cut {v_c, v_{c+n}} move to their antipodes with x -> n - x (0 -> n);
// the result is that half plus its mirror image through the cut with
// x -> n - x (n -> 0). The cut defaults to the smallest unlabeled even vertex.
DoublingTrace double_cycle_labeling_trace(const Labeling& lab, std::optional<Vertex> cut = std::nullopt);
Labeling double_cycle_labeling(const Labeling& lab, std::optional<Vertex> cut = std::nullopt);

// a_1 -> 0, a_2 -> 3, b_1 -> 1, b_2 -> 2 on crown(n). Throws ParameterError for n < 3.
Labeling crown_labeling(std::uint32_t n);

// Valid classical labeling of P_n -> extended labeling of P_{n+1} with x_{n+1} -> 0.
Labeling extend_path_labeling(const Labeling& idl);

}  // namespace irrdom
