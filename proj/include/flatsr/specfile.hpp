#ifndef FLATSR_SPECFILE_HPP
#define FLATSR_SPECFILE_HPP

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "flatsr/construct.hpp"
#include "flatsr/core.hpp"
#include "flatsr/graph.hpp"
#include "flatsr/semiring.hpp"
#include "flatsr/variety.hpp"

namespace flatsr {

namespace detail {

inline std::vector<std::vector<std::string>> tokenized_lines(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

inline int spec_int(const std::vector<std::string>& toks, std::size_t at, const char* what) {
  if (at >= toks.size()) throw input_error(std::string("build spec: ") + what + " needs a number");
  try {
    std::size_t used = 0;
    int v = std::stoi(toks[at], &used);
    if (used != toks[at].size()) throw input_error("");
    return v;
  } catch (const std::exception&) {
    throw input_error(std::string("build spec: ") + what + " needs a number, got '" + toks[at] +
                      "'");
  }
}

inline void spec_end(const std::vector<std::string>& toks, std::size_t at, const char* what) {
  if (at < toks.size())
    throw input_error(std::string("build spec: trailing content after ") + what + ": '" +
                      toks[at] + "'");
}

// single-line builders, also used for union parts
inline FiniteSemiring build_one_line(const std::vector<std::string>& toks, const Config& cfg) {
  const std::string& kw = toks[0];
  if (kw == "words") {
    std::size_t i = 1;
    bool commutative = false;
    if (i < toks.size() && toks[i] == "commutative") {
      commutative = true;
      ++i;
    }
    std::vector<std::string> ws(toks.begin() + static_cast<long>(i), toks.end());
    if (ws.empty()) throw input_error("build spec: words needs at least one word");
    return from_words(ws, commutative, cfg);
  }
  if (kw == "path") {
    int n = spec_int(toks, 1, "path");
    spec_end(toks, 2, "path");
    return path_semiring(n, cfg);
  }
  if (kw == "cycle") {
    int n = spec_int(toks, 1, "cycle");
    spec_end(toks, 2, "cycle");
    return cycle_semiring(n, cfg);
  }
  if (kw == "s7") {
    spec_end(toks, 1, "s7");
    return s7();
  }
  if (kw == "vngen") {
    int n = spec_int(toks, 1, "vngen");
    spec_end(toks, 2, "vngen");
    return vn_generator(n, cfg);
  }
  throw input_error("build spec: unknown builder '" + kw + "'");
}

}  // namespace detail

/// An input that may carry graph structure alongside its semiring.
struct LoadedInput {
  std::optional<DiGraph> graph;
  FiniteSemiring semiring;
};

/// Builds a semiring from a short spec. First keyword picks the builder:
///   words [commutative] w1 w2 ...
///   path n | cycle n | s7 | vngen n
///   graph <name> / vertices ... / edges ... (the digraph semiring)
///   union omega|zero, then one "part <single-line builder>" line per part
inline LoadedInput load_build_spec(std::istream& in, const Config& cfg = default_config()) {
  auto lines = detail::tokenized_lines(in);
  if (lines.empty()) throw input_error("build spec: empty input");
  const std::string& kw = lines[0][0];
  if (kw == "graph") {
    std::vector<std::string> flat;
    for (const auto& l : lines) flat.insert(flat.end(), l.begin(), l.end());
    auto G = parse_graph_tokens(flat);
    auto S = from_graph(G, cfg);
    return {std::move(G), std::move(S)};
  }
  if (kw == "union") {
    if (lines[0].size() != 2 || (lines[0][1] != "omega" && lines[0][1] != "zero"))
      throw input_error("build spec: union needs 'omega' or 'zero'");
    bool omega = lines[0][1] == "omega";
    std::vector<FiniteSemiring> parts;
    for (std::size_t l = 1; l < lines.size(); ++l) {
      if (lines[l][0] != "part")
        throw input_error("build spec: expected 'part', got '" + lines[l][0] + "'");
      if (lines[l].size() < 2) throw input_error("build spec: empty part");
      std::vector<std::string> rest(lines[l].begin() + 1, lines[l].end());
      parts.push_back(detail::build_one_line(rest, cfg));
    }
    if (parts.empty()) throw input_error("build spec: union needs at least one part");
    auto u = omega ? omega_direct_union(parts, cfg) : zero_direct_union(parts, cfg);
    return {std::nullopt, std::move(u.semiring)};
  }
  if (lines.size() > 1)
    throw input_error("build spec: unexpected extra line starting with '" + lines[1][0] + "'");
  auto S = detail::build_one_line(lines[0], cfg);
  std::optional<DiGraph> G;
  if (kw == "path") G = path_graph(detail::spec_int(lines[0], 1, "path"));
  if (kw == "cycle") G = cycle_graph(detail::spec_int(lines[0], 1, "cycle"));
  return {std::move(G), std::move(S)};
}

/// Loads either an explicit semiring file (first keyword "semiring") or a
/// build spec.
inline LoadedInput load_input(std::istream& in, const Config& cfg = default_config()) {
  std::stringstream buffered;
  buffered << in.rdbuf();
  std::string text = buffered.str();
  {
    std::istringstream probe(text);
    std::string line, first;
    while (std::getline(probe, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      if (ls >> first) break;
    }
    if (first.empty()) throw input_error("input: empty file");
    std::istringstream again(text);
    if (first == "semiring") return {std::nullopt, parse_semiring(again)};
    return load_build_spec(again, cfg);
  }
}

}  // namespace flatsr

#endif
