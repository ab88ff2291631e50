#ifndef FLATSR_GRAPH_HPP
#define FLATSR_GRAPH_HPP

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "flatsr/core.hpp"

namespace flatsr {

/// Directed graph with in-degree and out-degree at most 1, so every weakly
/// connected component is a path or a cycle. Isolated vertices are legal only
/// when allow_isolated is set.
struct DiGraph {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;  // sorted, no duplicates
  bool allow_isolated = false;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
};

inline DiGraph make_graph(std::string name, std::vector<std::string> vertices,
                          std::vector<std::pair<int, int>> edges, bool allow_isolated = false) {
  {
    auto sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw input_error("graph: duplicate vertex name");
  }
  const int n = static_cast<int>(vertices.size());
  for (auto [u, v] : edges)
    if (u < 0 || u >= n || v < 0 || v >= n) throw input_error("graph: edge endpoint out of range");
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw input_error("graph: duplicate edge");
  return DiGraph{std::move(name), std::move(vertices), std::move(edges), allow_isolated};
}

struct GraphVerdict {
  bool valid = true;
  std::string offending_vertex;
  std::string reason;
};

inline GraphVerdict validate_graph(const DiGraph& G) {
  const int n = G.vertex_count();
  std::vector<int> outd(n, 0), ind(n, 0);
  for (auto [u, v] : G.edges) {
    ++outd[u];
    ++ind[v];
  }
  for (int v = 0; v < n; ++v) {
    if (outd[v] > 1) return {false, G.vertices[v], "out-degree exceeds 1"};
    if (ind[v] > 1) return {false, G.vertices[v], "in-degree exceeds 1"};
  }
  if (!G.allow_isolated)
    for (int v = 0; v < n; ++v)
      if (outd[v] == 0 && ind[v] == 0) return {false, G.vertices[v], "isolated vertex"};
  return {};
}

inline void require_valid_graph(const DiGraph& G, const char* op) {
  auto verdict = validate_graph(G);
  if (!verdict.valid)
    throw precondition_error(std::string(op) + ": invalid graph, " + verdict.reason + " at vertex " +
                             verdict.offending_vertex);
}

/// One weakly connected component. A path with k edges lists its k+1 vertices
/// source to sink (an isolated vertex is a 0-edge path); a cycle of length k
/// lists its k vertices starting from the least-named one, following edges.
struct Component {
  bool is_cycle = false;
  int length = 0;  // edge count for paths, cycle length for cycles
  std::vector<int> vertex_indices;
};

struct ComponentSummary {
  std::vector<Component> components;  // ordered by least vertex name
  int max_path_edges = 0;
  int max_path_multiplicity = 0;  // number of paths attaining max_path_edges
  std::vector<int> cycle_length_set;  // sorted, distinct
  bool is_acyclic = true;
};

inline ComponentSummary components(const DiGraph& G) {
  require_valid_graph(G, "components");
  const int n = G.vertex_count();
  std::vector<int> succ(n, -1), pred(n, -1);
  for (auto [u, v] : G.edges) {
    succ[u] = v;
    pred[v] = u;
  }
  std::vector<char> seen(n, 0);
  std::vector<Component> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    // walk back to a source, or detect the cycle containing s
    int start = s;
    bool cycle = false;
    for (int steps = 0; pred[start] != -1; ++steps) {
      start = pred[start];
      if (start == s) {
        cycle = true;
        break;
      }
      if (steps > n) throw std::logic_error("components: pred walk did not terminate");
    }
    Component c;
    c.is_cycle = cycle;
    if (cycle) {
      // start from the least-named cycle vertex
      int least = s;
      for (int v = succ[s]; v != s; v = succ[v])
        if (G.vertices[v] < G.vertices[least]) least = v;
      int v = least;
      do {
        c.vertex_indices.push_back(v);
        seen[v] = 1;
        v = succ[v];
      } while (v != least);
      c.length = static_cast<int>(c.vertex_indices.size());
    } else {
      for (int v = start; v != -1; v = succ[v]) {
        c.vertex_indices.push_back(v);
        seen[v] = 1;
      }
      c.length = static_cast<int>(c.vertex_indices.size()) - 1;
    }
    comps.push_back(std::move(c));
  }
  std::sort(comps.begin(), comps.end(), [&](const Component& a, const Component& b) {
    auto least = [&](const Component& c) {
      const std::string* m = &G.vertices[c.vertex_indices[0]];
      for (int v : c.vertex_indices)
        if (G.vertices[v] < *m) m = &G.vertices[v];
      return *m;
    };
    return least(a) < least(b);
  });
  ComponentSummary out;
  out.components = std::move(comps);
  for (const auto& c : out.components) {
    if (c.is_cycle) {
      out.is_acyclic = false;
      out.cycle_length_set.push_back(c.length);
    } else {
      if (c.length > out.max_path_edges) {
        out.max_path_edges = c.length;
        out.max_path_multiplicity = 1;
      } else if (c.length == out.max_path_edges) {
        ++out.max_path_multiplicity;
      }
    }
  }
  std::sort(out.cycle_length_set.begin(), out.cycle_length_set.end());
  out.cycle_length_set.erase(std::unique(out.cycle_length_set.begin(), out.cycle_length_set.end()),
                             out.cycle_length_set.end());
  return out;
}

/// Compact component descriptor such as "p2+c1" (paths by vertex count,
/// cycles by length, sorted), or "-" for the empty graph. An isolated vertex
/// tags as p1.
inline std::string component_tags(const ComponentSummary& s) {
  std::vector<std::string> tags;
  for (const auto& c : s.components)
    tags.push_back(c.is_cycle ? "c" + std::to_string(c.length)
                              : "p" + std::to_string(c.length + 1));
  std::sort(tags.begin(), tags.end());
  if (tags.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < tags.size(); ++i) out += (i ? "+" : "") + tags[i];
  return out;
}

// ---------------------------------------------------------------------------
// Text format:
//   graph <name>
//   vertices a b c
//   edges a->b b->c
//   allow_isolated            (optional)
// ---------------------------------------------------------------------------

inline DiGraph parse_graph_tokens(const std::vector<std::string>& toks) {
  std::size_t i = 0;
  auto next = [&](const char* what) -> const std::string& {
    if (i >= toks.size()) throw input_error(std::string("graph file: expected ") + what);
    return toks[i++];
  };
  if (next("'graph'") != "graph") throw input_error("graph file: must start with 'graph'");
  std::string name = next("name");
  if (next("'vertices'") != "vertices") throw input_error("graph file: expected 'vertices'");
  std::vector<std::string> vertices;
  std::map<std::string, int> index;
  while (i < toks.size() && toks[i] != "edges") {
    if (!index.emplace(toks[i], static_cast<int>(vertices.size())).second)
      throw input_error("graph file: duplicate vertex " + toks[i]);
    vertices.push_back(toks[i++]);
  }
  if (i >= toks.size()) throw input_error("graph file: expected 'edges'");
  ++i;  // consume 'edges'
  std::vector<std::pair<int, int>> edges;
  bool allow_isolated = false;
  while (i < toks.size()) {
    if (toks[i] == "allow_isolated") {
      allow_isolated = true;
      ++i;
      continue;
    }
    const std::string& e = toks[i++];
    auto arrow = e.find("->");
    if (arrow == std::string::npos) throw input_error("graph file: edge '" + e + "' must use '->'");
    auto u = index.find(e.substr(0, arrow));
    auto v = index.find(e.substr(arrow + 2));
    if (u == index.end() || v == index.end())
      throw input_error("graph file: edge '" + e + "' names an unknown vertex");
    edges.emplace_back(u->second, v->second);
  }
  return make_graph(std::move(name), std::move(vertices), std::move(edges), allow_isolated);
}

inline DiGraph parse_graph(std::istream& in) {
  std::vector<std::string> toks;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string t;
    while (ls >> t) toks.push_back(t);
  }
  return parse_graph_tokens(toks);
}

inline void print_graph(std::ostream& out, const DiGraph& G) {
  out << "graph " << (G.name.empty() ? "G" : G.name) << "\n";
  out << "vertices";
  for (const auto& v : G.vertices) out << ' ' << v;
  out << "\nedges";
  for (auto [u, v] : G.edges) out << ' ' << G.vertices[u] << "->" << G.vertices[v];
  out << "\n";
  if (G.allow_isolated) out << "allow_isolated\n";
}

}  // namespace flatsr

#endif
