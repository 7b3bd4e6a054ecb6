#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace irrdom {

// A candidate starter in Z_n: unordered pairs meant to partition Z_n \ {0}.
struct Starter {
  std::uint32_t n = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;

  // Pairs as (larger, smaller), sorted; the canonical form for set comparison.
  Starter normalized() const;
  bool same_pairs(const Starter& other) const { return normalized().pairs == other.normalized().pairs; }
};

// Ordered: skew implies strong implies starter.
enum class StarterClass { invalid = 0, starter = 1, strong = 2, skew = 3 };

std::string_view to_string(StarterClass c);
std::optional<StarterClass> starter_class_from_string(std::string_view s);

// Throws ParameterError for even n. Structurally broken input (wrong pair
// count, repeated or zero elements) classifies as invalid.
StarterClass classify(const Starter& s);

bool is_prime(std::uint64_t p);
// Smallest generator of the multiplicative group mod p; p prime.
std::uint32_t smallest_primitive_root(std::uint32_t p);

// Skew starter over the prime field Z_p, p = 2^k t + 1 with t odd and t > 1:
// with g a primitive root and w = g^(2^(k-1)), the pairs {a, a w} for every a
// whose discrete log mod 2^k lies in [0, 2^(k-1)). For k = 1 this is
// {g^(2i), g^(2i+1)}. Throws ParameterError when p is not prime or t <= 1.
Starter mullin_nemeth(std::uint32_t p);

// Randomised pair-swap hill climbing towards a starter of at least `target`.
// Deterministic for fixed arguments; the result is always re-validated.
// Throws ParameterError for even n or n < 3.
inline constexpr std::uint64_t kDefaultHillClimbBudget = 4'000'000;
std::optional<Starter> hill_climb(std::uint32_t n, StarterClass target, std::uint64_t seed,
                                  std::uint64_t budget = kDefaultHillClimbBudget);

// Runs hill_climb over seeds in parallel; returns the witness of the lowest
// successful seed index.
std::optional<Starter> hill_climb_race(std::uint32_t n, StarterClass target, std::span<const std::uint64_t> seeds,
                                       std::uint64_t budget = kDefaultHillClimbBudget, unsigned workers = 1);

// Complete backtracking over pairings of Z_n \ {0}; n odd, 3 <= n <= 15.
inline constexpr std::uint32_t kExhaustiveStarterMax = 15;
std::optional<Starter> exhaustive_starter_search(std::uint32_t n, StarterClass target);

// "n=17: {9,10} {3,5} ..."
std::string format_starter(const Starter& s);
// Throws ParseError.
Starter parse_starter(std::string_view text);

}  // namespace irrdom
