#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irrdom/graph.hpp"

namespace irrdom {

enum class FamilyKind { cycle, path, hypercube, mobius_ladder, crown, complete, complete_bipartite };

std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> family_kind_from_string(std::string_view name);

// Named graph family with its integer parameters. Every kind takes one
// parameter except complete_bipartite (m, n). For mobius_ladder and crown the
// parameter is half the vertex count.
struct FamilySpec {
  FamilyKind kind;
  std::vector<std::uint32_t> params;

  std::string to_string() const;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// "cycle 6", "complete_bipartite 3 4".
FamilySpec parse_family_spec(std::string_view text);

// Throws ParameterError naming the violated bound.
void validate(const FamilySpec& spec);

// Canonical numbering:
//   cycle           v_i ~ v_{i+1 mod n}
//   path            x_1..x_n stored as 0..n-1
//   hypercube       vertex index is the bit string; edges flip one bit
//   mobius_ladder   rim i ~ i+1 mod 2n, rungs i ~ i+n
//   crown           a_1..a_n = 0..n-1, b_1..b_n = n..2n-1, a_i ~ b_j iff i != j
//   complete_bipartite  parts 0..m-1 and m..m+n-1
Graph generate(const FamilySpec& spec);

Graph cycle(std::uint32_t n);
Graph path(std::uint32_t n);
Graph hypercube(std::uint32_t dim);
Graph mobius_ladder(std::uint32_t half);
Graph crown(std::uint32_t n);
Graph complete(std::uint32_t n);
Graph complete_bipartite(std::uint32_t m, std::uint32_t n);

// Recovers the spec from a generated graph's tag.
std::optional<FamilySpec> family_spec_of(const Graph& g);

}  // namespace irrdom
