#ifndef FLATSR_SEMIRING_HPP
#define FLATSR_SEMIRING_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "flatsr/core.hpp"

namespace flatsr {

/// A finite algebra (S, +, *) given by explicit operation tables over element
/// indices 0..order-1. Nothing is assumed about the tables beyond closedness;
/// verify_axioms decides whether they form an additively idempotent semiring.
/// No index is reserved: a multiplicative zero, when one exists, is detected,
/// not positional.
struct FiniteSemiring {
  int order = 0;
  std::vector<int> add_table;  // order*order, row major
  std::vector<int> mul_table;
  std::vector<std::string> labels;  // optional; distinct when present
  std::string name;

  int add(int a, int b) const { return add_table[static_cast<std::size_t>(a) * order + b]; }
  int mul(int a, int b) const { return mul_table[static_cast<std::size_t>(a) * order + b]; }

  const std::string& label(int i) const { return labels[static_cast<std::size_t>(i)]; }

  bool operator==(const FiniteSemiring& o) const {
    return order == o.order && add_table == o.add_table && mul_table == o.mul_table;
  }
};

inline FiniteSemiring make_semiring(int order, std::vector<int> add, std::vector<int> mul,
                                    std::vector<std::string> labels = {}, std::string name = {}) {
  const std::size_t cells = static_cast<std::size_t>(order) * order;
  if (order <= 0) throw input_error("semiring order must be positive");
  if (add.size() != cells || mul.size() != cells)
    throw input_error("operation table size does not match order " + std::to_string(order));
  for (int v : add)
    if (v < 0 || v >= order) throw input_error("addition table entry out of range");
  for (int v : mul)
    if (v < 0 || v >= order) throw input_error("multiplication table entry out of range");
  if (labels.empty()) {
    labels.reserve(order);
    for (int i = 0; i < order; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != order) throw input_error("label count does not match order");
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw input_error("element labels must be distinct");
  }
  // labels travel through whitespace-separated text files
  for (const auto& l : labels) {
    if (l.empty()) throw input_error("element labels must be nonempty");
    for (char c : l)
      if (std::isspace(static_cast<unsigned char>(c)) || c == '#')
        throw input_error("element label '" + l + "' contains whitespace or '#'");
  }
  return FiniteSemiring{order, std::move(add), std::move(mul), std::move(labels), std::move(name)};
}

enum class Axiom {
  add_associative = 0,
  add_commutative,
  add_idempotent,
  mul_associative,
  left_distributive,   // x(y+z) = xy+xz
  right_distributive,  // (x+y)z = xz+yz
};

inline const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::add_associative: return "add-associative";
    case Axiom::add_commutative: return "add-commutative";
    case Axiom::add_idempotent: return "add-idempotent";
    case Axiom::mul_associative: return "mul-associative";
    case Axiom::left_distributive: return "left-distributive";
    case Axiom::right_distributive: return "right-distributive";
  }
  return "?";
}

/// Verdict per axiom. A false verdict carries the first failing witness in
/// lexicographic index order; its arity is 3 for the ternary laws, 2 for
/// commutativity, 1 for idempotence.
struct AxiomReport {
  struct Entry {
    bool holds = true;
    std::vector<int> witness;
  };
  std::array<Entry, 6> entries;

  const Entry& operator[](Axiom a) const { return entries[static_cast<std::size_t>(a)]; }
  Entry& operator[](Axiom a) { return entries[static_cast<std::size_t>(a)]; }

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.holds) return false;
    return true;
  }
};

inline AxiomReport verify_axioms(const FiniteSemiring& S, const Config& cfg = default_config()) {
  if (S.order > cfg.axiom_order_max)
    throw resource_error("verify_axioms: order " + std::to_string(S.order) +
                         " exceeds axiom_order_max=" + std::to_string(cfg.axiom_order_max));
  const std::size_t cells = static_cast<std::size_t>(S.order) * S.order;
  if (S.add_table.size() != cells || S.mul_table.size() != cells)
    throw input_error("operation table size does not match order");
  for (int v : S.add_table)
    if (v < 0 || v >= S.order) throw input_error("addition table entry out of range");
  for (int v : S.mul_table)
    if (v < 0 || v >= S.order) throw input_error("multiplication table entry out of range");

  AxiomReport r;
  const int n = S.order;
  for (int a = 0; a < n && r[Axiom::add_idempotent].holds; ++a)
    if (S.add(a, a) != a) r[Axiom::add_idempotent] = {false, {a}};
  for (int a = 0; a < n && r[Axiom::add_commutative].holds; ++a)
    for (int b = 0; b < n; ++b)
      if (S.add(a, b) != S.add(b, a)) {
        r[Axiom::add_commutative] = {false, {a, b}};
        break;
      }
  auto scan3 = [n](Axiom which, AxiomReport& rep, auto&& law) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!law(a, b, c)) {
            rep[which] = {false, {a, b, c}};
            return;
          }
  };
  scan3(Axiom::add_associative, r,
        [&](int a, int b, int c) { return S.add(S.add(a, b), c) == S.add(a, S.add(b, c)); });
  scan3(Axiom::mul_associative, r,
        [&](int a, int b, int c) { return S.mul(S.mul(a, b), c) == S.mul(a, S.mul(b, c)); });
  scan3(Axiom::left_distributive, r,
        [&](int a, int b, int c) { return S.mul(a, S.add(b, c)) == S.add(S.mul(a, b), S.mul(a, c)); });
  scan3(Axiom::right_distributive, r,
        [&](int a, int b, int c) { return S.mul(S.add(a, b), c) == S.add(S.mul(a, c), S.mul(b, c)); });
  return r;
}

/// Restriction to a subuniverse given as a sorted index list. Throws if the
/// subset is not closed under both operations.
inline FiniteSemiring restrict_to(const FiniteSemiring& S, const std::vector<int>& subset) {
  std::vector<int> pos(S.order, -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    int e = subset[i];
    if (e < 0 || e >= S.order) throw input_error("restrict_to: element index out of range");
    pos[e] = static_cast<int>(i);
  }
  const int m = static_cast<int>(subset.size());
  if (m == 0) throw input_error("restrict_to: empty subset");
  std::vector<int> add(static_cast<std::size_t>(m) * m), mul(static_cast<std::size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = S.labels.empty() ? "e" + std::to_string(subset[i]) : S.label(subset[i]);
    for (int j = 0; j < m; ++j) {
      int s = S.add(subset[i], subset[j]);
      int p = S.mul(subset[i], subset[j]);
      if (pos[s] < 0 || pos[p] < 0)
        throw precondition_error("restrict_to: subset not closed (" + labels[i] + ", " +
                                 (S.labels.empty() ? std::to_string(subset[j]) : S.label(subset[j])) + ")");
      add[static_cast<std::size_t>(i) * m + j] = pos[s];
      mul[static_cast<std::size_t>(i) * m + j] = pos[p];
    }
  }
  return make_semiring(m, std::move(add), std::move(mul), std::move(labels), S.name);
}

/// Applies a relabeling permutation: element i of the result is element
/// perm[i] of S. Used by tests to manufacture isomorphic copies.
inline FiniteSemiring permuted(const FiniteSemiring& S, const std::vector<int>& perm) {
  const int n = S.order;
  if (static_cast<int>(perm.size()) != n) throw input_error("permuted: size mismatch");
  std::vector<int> inv(n, -1);
  for (int i = 0; i < n; ++i) {
    if (perm[i] < 0 || perm[i] >= n || inv[perm[i]] != -1) throw input_error("permuted: not a permutation");
    inv[perm[i]] = i;
  }
  std::vector<int> add(static_cast<std::size_t>(n) * n), mul(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = S.labels.empty() ? "e" + std::to_string(perm[i]) : S.label(perm[i]);
    for (int j = 0; j < n; ++j) {
      add[static_cast<std::size_t>(i) * n + j] = inv[S.add(perm[i], perm[j])];
      mul[static_cast<std::size_t>(i) * n + j] = inv[S.mul(perm[i], perm[j])];
    }
  }
  return make_semiring(n, std::move(add), std::move(mul), std::move(labels), S.name);
}

// ---------------------------------------------------------------------------
// Text format. Canonical layout, parsed tolerantly ('#' comments, free
// whitespace):
//
//   semiring <name>
//   order <n>
//   elements <n labels>
//   add
//   <n rows of n labels>
//   mul
//   <n rows of n labels>
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> tokenize_stream(std::istream& in) {
  std::vector<std::string> toks;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string t;
    while (ls >> t) toks.push_back(t);
  }
  return toks;
}

}  // namespace detail

inline FiniteSemiring parse_semiring(std::istream& in) {
  auto toks = detail::tokenize_stream(in);
  std::size_t i = 0;
  auto next = [&](const char* what) -> const std::string& {
    if (i >= toks.size()) throw input_error(std::string("semiring file: expected ") + what);
    return toks[i++];
  };
  if (next("'semiring'") != "semiring") throw input_error("semiring file: must start with 'semiring'");
  std::string name = next("name");
  if (next("'order'") != "order") throw input_error("semiring file: expected 'order'");
  int order = 0;
  try {
    order = std::stoi(next("order value"));
  } catch (const std::exception&) {
    throw input_error("semiring file: order is not an integer");
  }
  if (order <= 0) throw input_error("semiring file: order must be positive");
  if (next("'elements'") != "elements") throw input_error("semiring file: expected 'elements'");
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  for (int k = 0; k < order; ++k) {
    std::string l = next("element label");
    if (!index.emplace(l, k).second) throw input_error("semiring file: duplicate label " + l);
    labels.push_back(std::move(l));
  }
  auto read_table = [&](const char* keyword) {
    if (next(keyword) != keyword) throw input_error(std::string("semiring file: expected '") + keyword + "'");
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(order) * order);
    for (int r = 0; r < order; ++r)
      for (int c = 0; c < order; ++c) {
        const std::string& cell = next("table entry");
        auto it = index.find(cell);
        if (it == index.end()) throw input_error("semiring file: unknown element '" + cell + "' in " + keyword + " table");
        t.push_back(it->second);
      }
    return t;
  };
  auto add = read_table("add");
  auto mul = read_table("mul");
  if (i != toks.size()) throw input_error("semiring file: trailing content after tables");
  return make_semiring(order, std::move(add), std::move(mul), std::move(labels), std::move(name));
}

inline void print_semiring(std::ostream& out, const FiniteSemiring& S) {
  out << "semiring " << (S.name.empty() ? "S" : S.name) << "\n";
  out << "order " << S.order << "\n";
  out << "elements";
  for (int k = 0; k < S.order; ++k) out << ' ' << S.label(k);
  out << "\nadd\n";
  for (int r = 0; r < S.order; ++r) {
    for (int c = 0; c < S.order; ++c) out << (c ? " " : "") << S.label(S.add(r, c));
    out << "\n";
  }
  out << "mul\n";
  for (int r = 0; r < S.order; ++r) {
    for (int c = 0; c < S.order; ++c) out << (c ? " " : "") << S.label(S.mul(r, c));
    out << "\n";
  }
}

inline std::string to_text(const FiniteSemiring& S) {
  std::ostringstream os;
  print_semiring(os, S);
  return os.str();
}

inline FiniteSemiring semiring_from_text(const std::string& text) {
  std::istringstream is(text);
  return parse_semiring(is);
}

}  // namespace flatsr

#endif
