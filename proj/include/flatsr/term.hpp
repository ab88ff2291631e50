#ifndef FLATSR_TERM_HPP
#define FLATSR_TERM_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "flatsr/core.hpp"
#include "flatsr/semiring.hpp"

namespace flatsr {

/// A word is a nonempty product of variables, kept as the sequence of
/// variable ids. A term is a nonempty sum of words, normalized to a sorted
/// duplicate-free list (addition is commutative and idempotent; the word
/// order inside each product is significant).
using Word = std::vector<int>;

struct Term {
  std::vector<Word> words;
  bool operator==(const Term& o) const { return words == o.words; }
};

inline Term make_term(std::vector<Word> words) {
  if (words.empty()) throw input_error("term must have at least one word");
  for (const auto& w : words) {
    if (w.empty()) throw input_error("word must have at least one variable");
    for (int v : w)
      if (v < 0) throw input_error("negative variable id");
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return Term{std::move(words)};
}

/// lhs ≈ rhs with var_count distinct variables. Construction renames
/// variables to first-occurrence order (scanning sorted lhs words, then rhs)
/// and re-sorts until stable, so structurally equal identities compare equal
/// regardless of the ids they were built with. var_names[i] names variable i.
struct Identity {
  Term lhs;
  Term rhs;
  int var_count = 0;
  std::vector<std::string> var_names;

  bool operator==(const Identity& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

inline Identity make_identity(Term lhs, Term rhs, std::vector<std::string> names = {}) {
  int max_id = -1;
  for (const Term* t : {&lhs, &rhs})
    for (const auto& w : t->words)
      for (int v : w) max_id = std::max(max_id, v);
  if (names.empty())
    for (int i = 0; i <= max_id; ++i) names.push_back("x" + std::to_string(i + 1));
  if (static_cast<int>(names.size()) < max_id + 1)
    throw input_error("identity: missing variable names");

  for (int round = 0; round < 64; ++round) {
    std::sort(lhs.words.begin(), lhs.words.end());
    lhs.words.erase(std::unique(lhs.words.begin(), lhs.words.end()), lhs.words.end());
    std::sort(rhs.words.begin(), rhs.words.end());
    rhs.words.erase(std::unique(rhs.words.begin(), rhs.words.end()), rhs.words.end());
    std::vector<int> rename(static_cast<std::size_t>(max_id) + 1, -1);
    int next = 0;
    for (const Term* t : {&lhs, &rhs})
      for (const auto& w : t->words)
        for (int v : w)
          if (rename[v] == -1) rename[v] = next++;
    bool stable = true;
    for (int v = 0; v <= max_id && stable; ++v)
      if (rename[v] != -1 && rename[v] != v) stable = false;
    std::vector<std::string> renamed(next);
    for (int v = 0; v <= max_id; ++v)
      if (rename[v] != -1) renamed[rename[v]] = names[v];
    if (stable && next == max_id + 1) {
      names = std::move(renamed);
      break;
    }
    for (Term* t : {&lhs, &rhs})
      for (auto& w : t->words)
        for (int& v : w) v = rename[v];
    names = std::move(renamed);
    max_id = next - 1;
  }
  Identity id;
  id.lhs = std::move(lhs);
  id.rhs = std::move(rhs);
  id.var_count = max_id + 1;
  names.resize(static_cast<std::size_t>(max_id) + 1);
  id.var_names = std::move(names);
  return id;
}

/// assignment[v] is the element index for variable v; -1 means unassigned.
using Assignment = std::vector<int>;

inline int eval_word(const Word& w, const FiniteSemiring& S, const Assignment& a) {
  int acc = -1;
  for (int v : w) {
    if (v >= static_cast<int>(a.size()) || a[v] < 0)
      throw input_error("eval: variable " + std::to_string(v) + " is unassigned");
    if (a[v] >= S.order) throw input_error("eval: assignment value out of range");
    acc = acc < 0 ? a[v] : S.mul(acc, a[v]);
  }
  return acc;
}

inline int eval_term(const Term& t, const FiniteSemiring& S, const Assignment& a) {
  int acc = -1;
  for (const auto& w : t.words) {
    int v = eval_word(w, S, a);
    acc = acc < 0 ? v : S.add(acc, v);
  }
  return acc;
}

struct SatResult {
  bool holds = true;
  std::optional<Assignment> witness;  // least failing assignment when !holds
};

/// Exhaustive check of lhs ≈ rhs over all assignments, in lexicographic
/// order with the last variable varying fastest.
inline SatResult satisfies(const FiniteSemiring& S, const Identity& id, const Config& cfg = default_config()) {
  if (id.var_count > cfg.sat_max_vars)
    throw resource_error("satisfies: identity has " + std::to_string(id.var_count) +
                         " variables, sat_max_vars=" + std::to_string(cfg.sat_max_vars));
  std::uint64_t needed = 1;
  for (int i = 0; i < id.var_count; ++i) {
    if (needed > cfg.sat_eval_budget / static_cast<std::uint64_t>(S.order) + 1)
      needed = cfg.sat_eval_budget + 1;
    else
      needed *= static_cast<std::uint64_t>(S.order);
  }
  if (needed > cfg.sat_eval_budget)
    throw resource_error("satisfies: requires " + std::to_string(S.order) + "^" +
                         std::to_string(id.var_count) +
                         " evaluations, sat_eval_budget=" + std::to_string(cfg.sat_eval_budget));
  Assignment a(static_cast<std::size_t>(std::max(id.var_count, 1)), 0);
  while (true) {
    if (eval_term(id.lhs, S, a) != eval_term(id.rhs, S, a)) {
      Assignment w(a.begin(), a.begin() + id.var_count);
      return {false, std::move(w)};
    }
    int pos = id.var_count - 1;
    while (pos >= 0 && a[pos] == S.order - 1) a[pos--] = 0;
    if (pos < 0) break;
    ++a[pos];
  }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Named identity families
// ---------------------------------------------------------------------------

enum class IdentityFamily {
  pn_cn,      // p_n ≈ c_n
  cn_x3,      // c_n ≈ x^3, fresh x
  pn_x3,      // p_n ≈ x^3, fresh x
  knil,       // x1..xk ≈ y1..yk
  path_swap,  // p_n(x) + p_n(y) ≈ p_n(x1..x_{n-1},y_n) + p_n(y1..y_{n-1},x_n)
  x2_xy,      // x^2 + x y ≈ x^2 + y^2
  x2y2_xy,    // x^2 + y^2 ≈ x^2 + y^2 + x y
  x2_x3,      // x^2 ≈ x^3
};

inline const char* family_name(IdentityFamily f) {
  switch (f) {
    case IdentityFamily::pn_cn: return "PN_CN";
    case IdentityFamily::cn_x3: return "CN_X3";
    case IdentityFamily::pn_x3: return "PN_X3";
    case IdentityFamily::knil: return "KNIL";
    case IdentityFamily::path_swap: return "PATH_SWAP";
    case IdentityFamily::x2_xy: return "X2_XY";
    case IdentityFamily::x2y2_xy: return "X2Y2_XY";
    case IdentityFamily::x2_x3: return "X2_X3";
  }
  return "?";
}

namespace detail {

// summands of p_n over variable ids base..base+n-1: x1x2, x2x3, ..
inline std::vector<Word> path_words(int n, int base = 0) {
  std::vector<Word> w;
  for (int i = 0; i + 1 < n; ++i) w.push_back({base + i, base + i + 1});
  return w;
}

// summands of c_n: p_n plus the closing x_n x_1; c_1 is x1^2
inline std::vector<Word> cycle_words(int n, int base = 0) {
  auto w = path_words(n, base);
  w.push_back({base + n - 1, base});
  return w;
}

inline std::vector<std::string> var_names(const char* stem, int n, std::vector<std::string> tail = {}) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  for (auto& t : tail) names.push_back(std::move(t));
  return names;
}

}  // namespace detail

inline Identity identity_family(IdentityFamily f, int n = 0) {
  switch (f) {
    case IdentityFamily::pn_cn: {
      if (n < 2) throw input_error("PN_CN requires n >= 2");
      return make_identity(make_term(detail::path_words(n)), make_term(detail::cycle_words(n)),
                           detail::var_names("x", n));
    }
    case IdentityFamily::cn_x3: {
      if (n < 1) throw input_error("CN_X3 requires n >= 1");
      return make_identity(make_term(detail::cycle_words(n)), make_term({{n, n, n}}),
                           detail::var_names("x", n, {"x"}));
    }
    case IdentityFamily::pn_x3: {
      if (n < 2) throw input_error("PN_X3 requires n >= 2");
      return make_identity(make_term(detail::path_words(n)), make_term({{n, n, n}}),
                           detail::var_names("x", n, {"x"}));
    }
    case IdentityFamily::knil: {
      if (n < 1) throw input_error("KNIL requires k >= 1");
      Word x, y;
      for (int i = 0; i < n; ++i) x.push_back(i);
      for (int i = 0; i < n; ++i) y.push_back(n + i);
      auto names = detail::var_names("x", n);
      for (auto& s : detail::var_names("y", n)) names.push_back(std::move(s));
      return make_identity(make_term({x}), make_term({y}), std::move(names));
    }
    case IdentityFamily::path_swap: {
      if (n < 2) throw input_error("PATH_SWAP requires n >= 2");
      auto lhs = detail::path_words(n, 0);
      for (auto& w : detail::path_words(n, n)) lhs.push_back(std::move(w));
      // swapped tails: x-path ending in y_n, y-path ending in x_n
      auto rhs = detail::path_words(n, 0);
      rhs.back().back() = 2 * n - 1;
      auto ytail = detail::path_words(n, n);
      ytail.back().back() = n - 1;
      for (auto& w : ytail) rhs.push_back(std::move(w));
      auto names = detail::var_names("x", n);
      for (auto& s : detail::var_names("y", n)) names.push_back(std::move(s));
      return make_identity(make_term(std::move(lhs)), make_term(std::move(rhs)), std::move(names));
    }
    case IdentityFamily::x2_xy:
      return make_identity(make_term({{0, 0}, {0, 1}}), make_term({{0, 0}, {1, 1}}), {"x", "y"});
    case IdentityFamily::x2y2_xy:
      return make_identity(make_term({{0, 0}, {1, 1}}), make_term({{0, 0}, {1, 1}, {0, 1}}), {"x", "y"});
    case IdentityFamily::x2_x3:
      return make_identity(make_term({{0, 0}}), make_term({{0, 0, 0}}), {"x"});
  }
  throw input_error("unknown identity family");
}

// ---------------------------------------------------------------------------
// Separating-identity search
// ---------------------------------------------------------------------------

struct SeparationBounds {
  int max_vars = 3;
  int max_word_len = 3;
  int max_summands = 3;
};

namespace detail {

inline int max_word_length(const Identity& id) {
  std::size_t len = 0;
  for (const Term* t : {&id.lhs, &id.rhs})
    for (const auto& w : t->words) len = std::max(len, w.size());
  return static_cast<int>(len);
}

inline int max_summands(const Identity& id) {
  return static_cast<int>(std::max(id.lhs.words.size(), id.rhs.words.size()));
}

inline bool separates(const FiniteSemiring& A, const FiniteSemiring& B, const Identity& id,
                      const Config& cfg) {
  return satisfies(A, id, cfg).holds && !satisfies(B, id, cfg).holds;
}

}  // namespace detail

/// First identity satisfied by A but not by B, trying the named families
/// first and then every pair of distinct terms within the bounds. The
/// general phase examines T(T-1)/2 ordered pairs where
/// T = sum_{k=1..max_summands} C(W, k) and W = sum_{l=1..max_word_len}
/// max_vars^l; that count must stay within sep_identity_budget.
inline std::optional<Identity> find_separating_identity(const FiniteSemiring& A, const FiniteSemiring& B,
                                                        const SeparationBounds& bounds,
                                                        const Config& cfg = default_config()) {
  if (bounds.max_vars < 1 || bounds.max_word_len < 1 || bounds.max_summands < 1)
    throw input_error("find_separating_identity: bounds must be positive");
  const int vcap = std::min(bounds.max_vars, cfg.sat_max_vars);

  // named families, cheapest first within each parametric family
  {
    std::vector<Identity> fixed;
    if (bounds.max_word_len >= 2 && bounds.max_summands >= 2) {
      fixed.push_back(identity_family(IdentityFamily::x2_xy));
      if (bounds.max_summands >= 3) fixed.push_back(identity_family(IdentityFamily::x2y2_xy));
    }
    if (bounds.max_word_len >= 3) fixed.push_back(identity_family(IdentityFamily::x2_x3));
    for (const auto& id : fixed)
      if (id.var_count <= vcap && detail::separates(A, B, id, cfg)) return id;
    for (int k = 1; 2 * k <= vcap && k <= bounds.max_word_len; ++k) {
      auto id = identity_family(IdentityFamily::knil, k);
      if (detail::separates(A, B, id, cfg)) return id;
    }
    if (bounds.max_word_len >= 2)
      for (int n = 2; n <= vcap && n <= bounds.max_summands; ++n) {
        auto id = identity_family(IdentityFamily::pn_cn, n);
        if (detail::separates(A, B, id, cfg)) return id;
      }
    if (bounds.max_word_len >= 3) {
      for (int n = 1; n + 1 <= vcap && n <= bounds.max_summands; ++n) {
        auto id = identity_family(IdentityFamily::cn_x3, n);
        if (detail::separates(A, B, id, cfg)) return id;
      }
      for (int n = 2; n + 1 <= vcap && n - 1 <= bounds.max_summands; ++n) {
        auto id = identity_family(IdentityFamily::pn_x3, n);
        if (detail::separates(A, B, id, cfg)) return id;
      }
    }
    if (bounds.max_word_len >= 2)
      for (int n = 2; 2 * n <= vcap && 2 * (n - 1) <= bounds.max_summands; ++n) {
        auto id = identity_family(IdentityFamily::path_swap, n);
        if (detail::separates(A, B, id, cfg)) return id;
      }
  }

  // general enumeration: words in shortlex order, terms as index
  // combinations in (size, lex) order, pairs (i, j) with i < j
  std::uint64_t word_count = 0;
  {
    std::uint64_t p = 1;
    for (int l = 1; l <= bounds.max_word_len; ++l) {
      p *= static_cast<std::uint64_t>(bounds.max_vars);
      word_count += p;
      if (word_count > cfg.sep_identity_budget) break;
    }
  }
  std::uint64_t term_count = 0;
  {
    const std::uint64_t cap = cfg.sep_identity_budget + 1;
    for (int k = 1; k <= bounds.max_summands; ++k) {
      // C(word_count, k), clamped
      std::uint64_t c = 1;
      bool over = false;
      for (int i = 0; i < k && !over; ++i) {
        if (word_count < static_cast<std::uint64_t>(i)) {
          c = 0;
          break;
        }
        if (c > cap / std::max<std::uint64_t>(word_count - i, 1)) over = true;
        else c = c * (word_count - i) / (i + 1);
      }
      term_count = over ? cap : std::min(cap, term_count + c);
      if (term_count >= cap) break;
    }
  }
  const std::uint64_t pair_count = (term_count > cfg.sep_identity_budget || term_count > 3000000000ull)
                                       ? std::max(term_count, cfg.sep_identity_budget + 1)
                                       : term_count * (term_count - 1) / 2;
  if (pair_count > cfg.sep_identity_budget)
    throw resource_error("find_separating_identity: " + std::to_string(term_count) +
                         " candidate terms give more pairs than sep_identity_budget=" +
                         std::to_string(cfg.sep_identity_budget));

  std::vector<Word> words;
  for (int l = 1; l <= bounds.max_word_len; ++l) {
    Word w(static_cast<std::size_t>(l), 0);
    while (true) {
      words.push_back(w);
      int pos = l - 1;
      while (pos >= 0 && w[pos] == bounds.max_vars - 1) w[pos--] = 0;
      if (pos < 0) break;
      ++w[pos];
    }
  }
  std::vector<std::vector<int>> terms;
  for (int k = 1; k <= bounds.max_summands; ++k) {
    if (k > static_cast<int>(words.size())) break;
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      terms.push_back(comb);
      int pos = k - 1;
      while (pos >= 0 && comb[pos] == static_cast<int>(words.size()) - k + pos) --pos;
      if (pos < 0) break;
      ++comb[pos];
      for (int i = pos + 1; i < k; ++i) comb[i] = comb[i - 1] + 1;
    }
  }
  auto used_vars_form_prefix = [&](const std::vector<int>& ti, const std::vector<int>& tj) {
    int max_id = -1, count = 0;
    std::vector<char> seen(static_cast<std::size_t>(bounds.max_vars), 0);
    for (const auto* t : {&ti, &tj})
      for (int wi : *t)
        for (int v : words[wi])
          if (!seen[v]) {
            seen[v] = 1;
            ++count;
            max_id = std::max(max_id, v);
          }
    return max_id + 1 == count && count <= vcap;
  };
  auto materialize = [&](const std::vector<int>& t) {
    std::vector<Word> ws;
    ws.reserve(t.size());
    for (int wi : t) ws.push_back(words[wi]);
    return make_term(std::move(ws));
  };
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      // renames with gaps are order-preserving, so any identity over a
      // non-prefix variable set has an equivalent prefix-form pair
      if (!used_vars_form_prefix(terms[i], terms[j])) continue;
      Identity id = make_identity(materialize(terms[i]), materialize(terms[j]));
      if (detail::separates(A, B, id, cfg)) return id;
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Printing and parsing. Grammar:
//   identity := term ('≈' | '=') term
//   term     := product ('+' product)*
//   product  := factor factor*
//   factor   := ident ('^' uint)?
//   ident    := letter (letter | digit)*
// Whitespace separates factors: "x y" is a two-variable product, "xy" is one
// variable named xy. Printing folds runs into exponents: x x y -> "x^2 y".
// ---------------------------------------------------------------------------

inline std::string print_word(const Word& w, const std::vector<std::string>& names) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += ' ';
    out += names[w[i]];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

inline std::string print_term(const Term& t, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < t.words.size(); ++i) {
    if (i) out += " + ";
    out += print_word(t.words[i], names);
  }
  return out;
}

inline std::string print_identity(const Identity& id) {
  return print_term(id.lhs, id.var_names) + " \xE2\x89\x88 " + print_term(id.rhs, id.var_names);
}

/// "x1=a, x2=b" rendering of a failing assignment, by element label.
inline std::string format_assignment(const FiniteSemiring& S, const Identity& id,
                                     const Assignment& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += (i < id.var_names.size() ? id.var_names[i] : "v" + std::to_string(i + 1));
    out += "=" + S.label(a[i]);
  }
  return out;
}

namespace detail {

struct IdentityLexer {
  const std::string& text;
  std::size_t pos = 0;

  explicit IdentityLexer(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw input_error("identity syntax error at position " + std::to_string(pos) + ": " + what);
  }
  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  // returns: "+", "^", "=", an identifier, or an unsigned integer
  std::string next() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '+' || c == '^' || c == '=') {
      ++pos;
      return std::string(1, c);
    }
    if (text.compare(pos, 3, "\xE2\x89\x88") == 0) {
      pos += 3;
      return "=";
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = pos;
      while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
      auto s = text.substr(pos, j - pos);
      pos = j;
      return s;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = pos;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      auto s = text.substr(pos, j - pos);
      pos = j;
      return s;
    }
    fail(std::string("unknown character '") + c + "'");
  }
  std::string peek() {
    std::size_t save = pos;
    if (eof()) return "";
    auto t = next();
    pos = save;
    return t;
  }
};

}  // namespace detail

inline Identity parse_identity(const std::string& text) {
  detail::IdentityLexer lex(text);
  std::map<std::string, int> ids;
  std::vector<std::string> names;
  auto var_id = [&](const std::string& name) {
    auto it = ids.emplace(name, static_cast<int>(names.size()));
    if (it.second) names.push_back(name);
    return it.first->second;
  };
  auto is_ident = [](const std::string& t) {
    return !t.empty() && std::isalpha(static_cast<unsigned char>(t[0]));
  };
  auto parse_term = [&]() {
    std::vector<Word> words;
    while (true) {
      Word w;
      while (is_ident(lex.peek())) {
        int v = var_id(lex.next());
        int exp = 1;
        if (lex.peek() == "^") {
          lex.next();
          auto t = lex.peek();
          if (t.empty() || !std::isdigit(static_cast<unsigned char>(t[0]))) lex.fail("expected exponent");
          lex.next();
          try {
            exp = std::stoi(t);
          } catch (const std::exception&) {
            lex.fail("exponent out of range");
          }
          if (exp < 1 || exp > 1000) lex.fail("exponent must be in [1, 1000]");
        }
        for (int i = 0; i < exp; ++i) w.push_back(v);
      }
      if (w.empty()) lex.fail("expected a product of variables");
      words.push_back(std::move(w));
      if (lex.peek() == "+")
        lex.next();
      else
        break;
    }
    return make_term(std::move(words));
  };
  Term lhs = parse_term();
  if (lex.peek() != "=") lex.fail("expected '≈' or '=' between the two sides");
  lex.next();
  Term rhs = parse_term();
  if (!lex.eof()) lex.fail("trailing content after identity");
  return make_identity(std::move(lhs), std::move(rhs), std::move(names));
}

}  // namespace flatsr

#endif
