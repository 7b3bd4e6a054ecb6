#include "irrdom/text_io.hpp"

#include <cctype>
#include <charconv>

#include "irrdom/errors.hpp"

namespace irrdom {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Labeling parse_labeling(std::string_view text, std::shared_ptr<const Graph> g, LabelMode mode) {
  if (!g) throw ParameterError("parse_labeling: null graph");
  std::string_view body = trim(text);
  if (body.size() < 2 || !((body.front() == '(' && body.back() == ')') || (body.front() == '[' && body.back() == ']')))
    throw ParseError("labeling must be wrapped in (...) or [...]: '" + std::string(text) + "'");
  body = body.substr(1, body.size() - 2);

  std::vector<std::optional<Label>> labels;
  if (!trim(body).empty()) {
    std::size_t start = 0;
    while (true) {
      std::size_t comma = body.find(',', start);
      std::string_view tok = trim(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start));
      if (tok == "_") {
        labels.emplace_back();
      } else {
        Label v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
          throw ParseError("token '" + std::string(tok) + "' is neither a non-negative integer nor '_'");
        labels.emplace_back(v);
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  if (labels.size() != g->order())
    throw ParseError("labeling has " + std::to_string(labels.size()) + " tokens but the graph has " +
                     std::to_string(g->order()) + " vertices");
  return Labeling(std::move(g), std::move(labels), mode);
}

std::string format_labeling(const Labeling& lab, std::optional<Bracket> bracket) {
  const Bracket b = bracket.value_or(lab.graph().is_family("cycle") ? Bracket::round : Bracket::square);
  std::string out(1, b == Bracket::round ? '(' : '[');
  bool first = true;
  for (const auto& l : lab.labels()) {
    if (!first) out += ',';
    first = false;
    out += l ? std::to_string(*l) : "_";
  }
  out += b == Bracket::round ? ')' : ']';
  return out;
}

nlohmann::json to_json(const VerificationReport& report, const Labeling& lab) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"kind", to_string(v.kind)}, {"vertex", v.vertex}, {"label", v.label}, {"message", v.message}});
  return {
      {"valid", report.valid},
      {"k", report.k},
      {"labeling", format_labeling(lab)},
      {"multiplicity", report.multiplicity},
      {"uncovered", report.uncovered},
      {"violations", violations},
  };
}

nlohmann::json to_json(const SearchResult& result, std::size_t k) {
  return {
      {"status", to_string(result.status)},
      {"k", k},
      {"labeling", result.labeling ? nlohmann::json(format_labeling(*result.labeling)) : nlohmann::json(nullptr)},
      {"nodes_explored", result.nodes_explored},
      {"elapsed_ms", result.elapsed.count()},
  };
}

nlohmann::json to_json(const GammaResult& result) {
  auto opt = [](const std::optional<std::size_t>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  return {
      {"status", to_string(result.status)},
      {"gamma_e", opt(result.gamma)},
      {"last_exhausted_k", opt(result.last_exhausted_k)},
      {"labeling", result.witness ? nlohmann::json(format_labeling(*result.witness)) : nlohmann::json(nullptr)},
      {"nodes_explored", result.nodes_explored},
      {"elapsed_ms", result.elapsed.count()},
  };
}

}  // namespace irrdom
