#ifndef FLATSR_CONSTRUCT_HPP
#define FLATSR_CONSTRUCT_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flatsr/core.hpp"
#include "flatsr/graph.hpp"
#include "flatsr/iso.hpp"
#include "flatsr/profile.hpp"
#include "flatsr/semiring.hpp"

namespace flatsr {

namespace detail {

// length, then lexicographic
struct ShortLex {
  bool operator()(const std::string& a, const std::string& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline std::string run_length_label(const std::string& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out += w[i];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace detail

/// Semiring of words: elements are the nonempty contiguous factors of the
/// given words (all nonempty sub-multisets when commutative), plus a zero.
/// Product is concatenation (multiset sum) when the result is again an
/// element, zero otherwise; addition is flat. Zero sits at index 0 and the
/// remaining elements follow in shortlex order.
inline FiniteSemiring from_words(const std::vector<std::string>& words, bool commutative,
                                 const Config& cfg = default_config()) {
  if (words.empty()) throw input_error("from_words: no words given");
  for (const auto& w : words) {
    if (w.empty()) throw input_error("from_words: empty word");
    for (char c : w)
      if (c < 'a' || c > 'z') throw input_error("from_words: words use letters a-z only");
  }
  std::set<std::string, detail::ShortLex> factors;
  for (const auto& given : words) {
    std::string w = given;
    if (commutative) std::sort(w.begin(), w.end());
    if (commutative) {
      // distinct letters with multiplicities, then an odometer over exponents
      std::vector<std::pair<char, int>> runs;
      for (char c : w) {
        if (!runs.empty() && runs.back().first == c)
          ++runs.back().second;
        else
          runs.emplace_back(c, 1);
      }
      std::vector<int> e(runs.size(), 0);
      for (;;) {
        std::size_t i = 0;
        while (i < e.size() && e[i] == runs[i].second) e[i++] = 0;
        if (i == e.size()) break;
        ++e[i];
        std::string f;
        for (std::size_t r = 0; r < runs.size(); ++r) f.append(e[r], runs[r].first);
        factors.insert(f);
        if (static_cast<int>(factors.size()) + 1 > cfg.word_element_max)
          throw resource_error("from_words: element count exceeds word_element_max=" +
                               std::to_string(cfg.word_element_max));
      }
    } else {
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t len = 1; i + len <= w.size(); ++len) {
          factors.insert(w.substr(i, len));
          if (static_cast<int>(factors.size()) + 1 > cfg.word_element_max)
            throw resource_error("from_words: element count exceeds word_element_max=" +
                                 std::to_string(cfg.word_element_max));
        }
    }
  }
  std::vector<std::string> elems(factors.begin(), factors.end());
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i) + 1;
  const int n = static_cast<int>(elems.size()) + 1;
  std::vector<int> add(static_cast<std::size_t>(n) * n, 0), mul(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) add[static_cast<std::size_t>(i) * n + i] = i;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      std::string p = elems[i - 1] + elems[j - 1];
      if (commutative) std::sort(p.begin(), p.end());
      auto it = index.find(p);
      mul[static_cast<std::size_t>(i) * n + j] = it == index.end() ? 0 : it->second;
    }
  std::vector<std::string> labels{"0"};
  for (const auto& e : elems) labels.push_back(commutative ? detail::run_length_label(e) : e);
  std::string name = (commutative ? "Sc(" : "S(") + detail::join(words, ",") + ")";
  return make_semiring(n, add, mul, labels, name);
}

/// Semiring of a digraph: {0, ω} plus the vertices, with uv = ω exactly when
/// u->v is an edge, every other product 0, and flat addition. Order is always
/// |V| + 2; zero at index 0, ω at index 1, vertices from index 2 in input
/// order.
inline FiniteSemiring from_graph(const DiGraph& G, const Config& = default_config()) {
  require_valid_graph(G, "from_graph");
  const int nv = G.vertex_count();
  const int n = nv + 2;
  std::vector<int> add(static_cast<std::size_t>(n) * n, 0), mul(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) add[static_cast<std::size_t>(i) * n + i] = i;
  for (auto [u, v] : G.edges) mul[static_cast<std::size_t>(u + 2) * n + (v + 2)] = 1;
  std::vector<std::string> labels{"0", "\xCF\x89"};
  for (const auto& v : G.vertices) labels.push_back(v);
  return make_semiring(n, add, mul, labels, "S_" + (G.name.empty() ? std::string("G") : G.name));
}

inline DiGraph path_graph(int n) {
  if (n < 1) throw input_error("path_graph: need at least 1 vertex");
  std::vector<std::string> vs;
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= n; ++i) vs.push_back("a" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return make_graph("p" + std::to_string(n), std::move(vs), std::move(es), n == 1);
}

inline DiGraph cycle_graph(int n) {
  if (n < 1) throw input_error("cycle_graph: need at least 1 vertex");
  std::vector<std::string> vs;
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= n; ++i) vs.push_back("a" + std::to_string(i));
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return make_graph("c" + std::to_string(n), std::move(vs), std::move(es));
}

/// Path semiring on n vertices a1 -> a2 -> ... -> an.
inline FiniteSemiring path_semiring(int n, const Config& cfg = default_config()) {
  return from_graph(path_graph(n), cfg);
}

/// Cycle semiring on n vertices a1 -> ... -> an -> a1.
inline FiniteSemiring cycle_semiring(int n, const Config& cfg = default_config()) {
  return from_graph(cycle_graph(n), cfg);
}

struct UnionResult {
  FiniteSemiring semiring;
  // embeddings[p][i] is the index in the union of part p's element i
  std::vector<std::vector<int>> embeddings;
};

namespace detail {

inline void require_part_flat(const FiniteSemiring& S, std::size_t p, const char* op) {
  auto rep = verify_axioms(S);
  if (!rep.all_pass())
    throw precondition_error(std::string(op) + ": part " + std::to_string(p + 1) +
                             " is not a semiring");
  auto z = find_zero(S);
  if (!z || !flat_on(S, *z))
    throw precondition_error(std::string(op) + ": part " + std::to_string(p + 1) + " is not flat");
}

inline void check_embeddings(const FiniteSemiring& U, const std::vector<FiniteSemiring>& parts,
                             const std::vector<std::vector<int>>& emb) {
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& S = parts[p];
    const auto& f = emb[p];
    for (int x = 0; x < S.order; ++x)
      for (int y = 0; y < S.order; ++y) {
        if (U.add(f[x], f[y]) != f[S.add(x, y)] || U.mul(f[x], f[y]) != f[S.mul(x, y)])
          throw std::logic_error("direct union: embedding does not preserve operations");
      }
  }
}

// Resolve label clashes between parts: any surviving label used by two parts,
// or colliding with a shared label, gets a 1-based part suffix.
inline std::vector<std::string> dedupe_labels(
    const std::vector<std::vector<std::pair<std::size_t, std::string>>>& per_part,
    const std::vector<std::string>& shared) {
  std::map<std::string, int> uses;
  for (const auto& s : shared) ++uses[s];
  for (const auto& part : per_part)
    for (const auto& [i, l] : part) {
      (void)i;
      ++uses[l];
    }
  std::vector<std::string> out = shared;
  for (std::size_t p = 0; p < per_part.size(); ++p)
    for (const auto& [i, l] : per_part[p]) {
      (void)i;
      out.push_back(uses[l] > 1 ? l + "_" + std::to_string(p + 1) : l);
    }
  return out;
}

}  // namespace detail

/// Direct union over a shared zero: parts keep their own operations, products
/// and sums across parts are 0. All parts must be flat, so the result is flat.
inline UnionResult zero_direct_union(const std::vector<FiniteSemiring>& parts,
                                     const Config& = default_config()) {
  if (parts.empty()) throw input_error("zero_direct_union: no parts");
  std::vector<int> part_zero(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    detail::require_part_flat(parts[p], p, "zero_direct_union");
    part_zero[p] = *find_zero(parts[p]);
  }
  std::vector<std::vector<int>> emb(parts.size());
  std::vector<std::vector<std::pair<std::size_t, std::string>>> labels_by_part(parts.size());
  int n = 1;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    emb[p].assign(parts[p].order, 0);
    for (int x = 0; x < parts[p].order; ++x) {
      if (x == part_zero[p]) continue;
      emb[p][x] = n++;
      labels_by_part[p].emplace_back(static_cast<std::size_t>(x), parts[p].labels[x]);
    }
  }
  std::vector<int> add(static_cast<std::size_t>(n) * n, 0), mul(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) add[static_cast<std::size_t>(i) * n + i] = i;
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int x = 0; x < parts[p].order; ++x)
      for (int y = 0; y < parts[p].order; ++y)
        mul[static_cast<std::size_t>(emb[p][x]) * n + emb[p][y]] = emb[p][parts[p].mul(x, y)];
  auto labels = detail::dedupe_labels(labels_by_part, {"0"});
  std::vector<std::string> names;
  for (const auto& S : parts) names.push_back(S.name);
  auto U = make_semiring(n, add, mul, labels, "zero-union(" + detail::join(names, ",") + ")");
  detail::check_embeddings(U, parts, emb);
  return {std::move(U), std::move(emb)};
}

/// Direct union over a shared zero and a shared annihilator ω: each part must
/// be flat with ω as its unique annihilator. Parts keep their operations with
/// their own ω identified with the shared one; cross products are 0.
inline UnionResult omega_direct_union(const std::vector<FiniteSemiring>& parts,
                                      const Config& cfg = default_config()) {
  if (parts.empty()) throw input_error("omega_direct_union: no parts");
  std::vector<int> part_zero(parts.size()), part_omega(parts.size());
  std::vector<bool> part_nil(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    detail::require_part_flat(parts[p], p, "omega_direct_union");
    auto prof = flat_profile(parts[p], cfg);
    if (prof.annihilators.size() != 1)
      throw precondition_error("omega_direct_union: part " + std::to_string(p + 1) +
                               " does not have a unique annihilator");
    part_zero[p] = *prof.zero;
    part_omega[p] = prof.annihilators[0];
    part_nil[p] = prof.nilpotency_class.has_value();
  }
  std::vector<std::vector<int>> emb(parts.size());
  std::vector<std::vector<std::pair<std::size_t, std::string>>> labels_by_part(parts.size());
  int n = 2;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    emb[p].assign(parts[p].order, 0);
    emb[p][part_omega[p]] = 1;
    for (int x = 0; x < parts[p].order; ++x) {
      if (x == part_zero[p] || x == part_omega[p]) continue;
      emb[p][x] = n++;
      labels_by_part[p].emplace_back(static_cast<std::size_t>(x), parts[p].labels[x]);
    }
  }
  std::vector<int> add(static_cast<std::size_t>(n) * n, 0), mul(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) add[static_cast<std::size_t>(i) * n + i] = i;
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int x = 0; x < parts[p].order; ++x)
      for (int y = 0; y < parts[p].order; ++y) {
        int px = emb[p][x], py = emb[p][y];
        if (px == 0 || py == 0) continue;
        mul[static_cast<std::size_t>(px) * n + py] = emb[p][parts[p].mul(x, y)];
      }
  auto labels = detail::dedupe_labels(labels_by_part, {"0", "\xCF\x89"});
  std::vector<std::string> names;
  for (const auto& S : parts) names.push_back(S.name);
  auto U = make_semiring(n, add, mul, labels, "omega-union(" + detail::join(names, ",") + ")");
  detail::check_embeddings(U, parts, emb);
  if (std::all_of(part_nil.begin(), part_nil.end(), [](bool b) { return b; })) {
    auto prof = flat_profile(U, cfg);
    if (!prof.is_si || prof.annihilators.size() != 1)
      throw std::logic_error("omega_direct_union: union of nilpotent parts is not si");
  }
  return {std::move(U), std::move(emb)};
}

/// The three-element subdirectly irreducible flat semiring that is not
/// nilpotent: inf + x = inf, 1 is a multiplicative identity, a*a = inf.
inline FiniteSemiring s7() {
  std::vector<int> add{0, 0, 0, 0, 1, 0, 0, 0, 2};
  std::vector<int> mul{0, 0, 0, 0, 0, 1, 0, 1, 2};
  return make_semiring(3, add, mul, {"inf", "a", "1"}, "S7");
}

/// Flat extension of a finite semigroup given by its multiplication table.
/// If the semigroup has an absorbing element it must be cancellative off it;
/// otherwise it must be cancellative and a fresh zero is adjoined. The result
/// has the zero at index 0 and flat addition.
inline FiniteSemiring flat_extension(const std::vector<int>& mul_in,
                                     const std::vector<std::string>& labels_in,
                                     const Config& = default_config()) {
  const int n = static_cast<int>(labels_in.size());
  if (n <= 0) throw input_error("flat_extension: empty semigroup");
  if (mul_in.size() != static_cast<std::size_t>(n) * n)
    throw input_error("flat_extension: table size does not match label count");
  for (int v : mul_in)
    if (v < 0 || v >= n) throw input_error("flat_extension: table entry out of range");
  auto at = [&](int x, int y) { return mul_in[static_cast<std::size_t>(x) * n + y]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (at(at(x, y), z) != at(x, at(y, z)))
          throw precondition_error("flat_extension: multiplication not associative at (" +
                                   labels_in[x] + "," + labels_in[y] + "," + labels_in[z] + ")");
  int zero = -1;
  for (int z = 0; z < n; ++z) {
    bool absorbing = true;
    for (int x = 0; x < n && absorbing; ++x)
      if (at(z, x) != z || at(x, z) != z) absorbing = false;
    if (absorbing) {
      zero = z;
      break;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (at(a, b) == at(a, c) && at(a, b) != zero)
          throw precondition_error("flat_extension: not cancellative, " + labels_in[a] + "*" +
                                   labels_in[b] + " = " + labels_in[a] + "*" + labels_in[c]);
        if (at(b, a) == at(c, a) && at(b, a) != zero)
          throw precondition_error("flat_extension: not cancellative, " + labels_in[b] + "*" +
                                   labels_in[a] + " = " + labels_in[c] + "*" + labels_in[a]);
      }
  // position the zero (existing or adjoined) at index 0
  std::vector<int> old_to_new(n);
  int m = zero >= 0 ? n : n + 1;
  std::vector<std::string> labels(1);
  for (int x = 0, next = 1; x < n; ++x) {
    if (x == zero) {
      old_to_new[x] = 0;
      labels[0] = labels_in[x];
    } else {
      old_to_new[x] = next++;
      labels.push_back(labels_in[x]);
    }
  }
  if (zero < 0) {
    labels[0] = "0";
    for (const auto& l : labels_in)
      if (l == "0") throw input_error("flat_extension: label 0 is reserved for the adjoined zero");
  }
  std::vector<int> add(static_cast<std::size_t>(m) * m, 0), mul(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) add[static_cast<std::size_t>(i) * m + i] = i;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      mul[static_cast<std::size_t>(old_to_new[x]) * m + old_to_new[y]] = old_to_new[at(x, y)];
  return make_semiring(m, add, mul, labels, "flat-ext");
}

/// Inverse of from_graph on its image: a flat subdirectly irreducible
/// semiring of nilpotency class at most 3 is the semiring of a unique
/// digraph. The round trip through from_graph is checked internally.
inline DiGraph semiring_to_graph(const FiniteSemiring& S, const Config& cfg = default_config()) {
  auto prof = flat_profile(S, cfg);
  if (!prof.is_flat) throw precondition_error("semiring_to_graph: not flat");
  if (!prof.is_si) throw precondition_error("semiring_to_graph: not subdirectly irreducible");
  if (!prof.nilpotency_class || *prof.nilpotency_class > 3)
    throw precondition_error("semiring_to_graph: nilpotency class exceeds 3");
  if (prof.annihilators.size() != 1)
    throw std::logic_error("semiring_to_graph: si nilpotent without unique annihilator");
  const int zero = *prof.zero, omega = prof.annihilators[0];
  std::vector<int> vertex_of;  // semiring index per vertex
  std::vector<std::string> names;
  for (int x = 0; x < S.order; ++x)
    if (x != zero && x != omega) {
      vertex_of.push_back(x);
      names.push_back(S.label(x));
    }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t u = 0; u < vertex_of.size(); ++u)
    for (std::size_t v = 0; v < vertex_of.size(); ++v)
      if (S.mul(vertex_of[u], vertex_of[v]) == omega)
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  std::string gname = S.name.empty() ? "G" : S.name;
  std::replace(gname.begin(), gname.end(), ' ', '-');
  auto G = make_graph(std::move(gname), std::move(names), std::move(edges));
  auto back = from_graph(G, cfg);
  if (!find_isomorphism(back, S)) throw std::logic_error("semiring_to_graph: round trip failed");
  return G;
}

}  // namespace flatsr

#endif
