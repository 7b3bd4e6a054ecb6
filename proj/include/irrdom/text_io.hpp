#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "irrdom/domination.hpp"
#include "irrdom/search.hpp"

namespace irrdom {

enum class Bracket { round, square };

// "(3,1,_,2,0,_)" or "[3,1,0,2]": one token per vertex in index order, '_'
// for unlabeled. Either bracket style is accepted on any graph. Structural
// rules are left to verify(). Throws ParseError.
Labeling parse_labeling(std::string_view text, std::shared_ptr<const Graph> g,
                        LabelMode mode = LabelMode::extended);

// Round brackets for cycles, square otherwise, unless overridden.
std::string format_labeling(const Labeling& lab, std::optional<Bracket> bracket = std::nullopt);

nlohmann::json to_json(const VerificationReport& report, const Labeling& lab);
nlohmann::json to_json(const SearchResult& result, std::size_t k);
nlohmann::json to_json(const GammaResult& result);

}  // namespace irrdom
