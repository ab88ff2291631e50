#ifndef FLATSR_SUBPOWER_HPP
#define FLATSR_SUBPOWER_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flatsr/construct.hpp"
#include "flatsr/core.hpp"
#include "flatsr/graph.hpp"
#include "flatsr/iso.hpp"
#include "flatsr/profile.hpp"
#include "flatsr/semiring.hpp"

namespace flatsr {

/// A subalgebra of a finite direct power, kept as explicit tuples.
/// Generators come first in insertion order.
struct TupleAlgebra {
  FiniteSemiring base;
  int power = 0;
  std::vector<std::vector<int>> elements;
};

/// Rotate right by j: entry i moves to position (i + j) mod m.
inline std::vector<int> cyclic_shift(const std::vector<int>& t, int j) {
  const int m = static_cast<int>(t.size());
  std::vector<int> out(t.size());
  for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(((i + j) % m + m) % m)] = t[i];
  return out;
}

inline TupleAlgebra generate_subpower(const FiniteSemiring& base, int power,
                                      const std::vector<std::vector<int>>& generators,
                                      const Config& cfg = default_config()) {
  if (power < 1) throw input_error("generate_subpower: power must be at least 1");
  if (generators.empty()) throw input_error("generate_subpower: no generators");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != power)
      throw input_error("generate_subpower: generator arity does not match power");
    for (int c : g)
      if (c < 0 || c >= base.order)
        throw input_error("generate_subpower: generator coordinate out of range");
  }
  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> index;
  auto intern = [&](const std::vector<int>& t) {
    auto [it, fresh] = index.emplace(t, static_cast<int>(elems.size()));
    if (fresh) {
      elems.push_back(t);
      if (elems.size() > cfg.closure_max)
        throw resource_error("generate_subpower: closure exceeds closure_max=" +
                             std::to_string(cfg.closure_max));
    }
    return it->second;
  };
  auto combine = [&](const std::vector<int>& x, const std::vector<int>& y, bool mul) {
    std::vector<int> out(x.size());
    for (std::size_t c = 0; c < x.size(); ++c)
      out[c] = mul ? base.mul(x[c], y[c]) : base.add(x[c], y[c]);
    return out;
  };
  for (const auto& g : generators) intern(g);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      // copies: elems may reallocate while interning
      auto a = elems[i], b = elems[j];
      intern(combine(a, b, false));
      intern(combine(a, b, true));
      intern(combine(b, a, true));
    }
  }
  return TupleAlgebra{base, power, std::move(elems)};
}

inline std::string tuple_label(const FiniteSemiring& base, const std::vector<int>& t) {
  std::string out = "(";
  for (std::size_t c = 0; c < t.size(); ++c) out += (c ? "," : "") + base.label(t[c]);
  return out + ")";
}

inline FiniteSemiring to_semiring(const TupleAlgebra& A, const Config& cfg = default_config()) {
  const int n = static_cast<int>(A.elements.size());
  if (n > cfg.materialize_max)
    throw resource_error("to_semiring: tuple algebra exceeds materialize_max=" +
                         std::to_string(cfg.materialize_max));
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[A.elements[i]] = i;
  std::vector<int> add(static_cast<std::size_t>(n) * n), mul(static_cast<std::size_t>(n) * n);
  std::vector<int> t(static_cast<std::size_t>(A.power));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int c = 0; c < A.power; ++c) t[c] = A.base.add(A.elements[i][c], A.elements[j][c]);
      auto ia = index.find(t);
      for (int c = 0; c < A.power; ++c) t[c] = A.base.mul(A.elements[i][c], A.elements[j][c]);
      auto im = index.find(t);
      if (ia == index.end() || im == index.end())
        throw std::logic_error("to_semiring: tuple algebra is not closed");
      add[static_cast<std::size_t>(i) * n + j] = ia->second;
      mul[static_cast<std::size_t>(i) * n + j] = im->second;
    }
  std::vector<std::string> labels;
  for (const auto& e : A.elements) labels.push_back(tuple_label(A.base, e));
  return make_semiring(n, add, mul, labels, "sub(" + A.base.name + "^" + std::to_string(A.power) + ")");
}

/// Indices of tuples with at least one coordinate equal to the base zero.
inline std::vector<int> zero_coordinate_ideal(const TupleAlgebra& A) {
  auto z = find_zero(A.base);
  if (!z) throw precondition_error("zero_coordinate_ideal: base has no zero");
  std::vector<int> J;
  for (std::size_t i = 0; i < A.elements.size(); ++i)
    if (std::find(A.elements[i].begin(), A.elements[i].end(), *z) != A.elements[i].end())
      J.push_back(static_cast<int>(i));
  return J;
}

/// Collapse the tuples with a zero coordinate to a single class. They form a
/// multiplicative ideal that also absorbs addition, so the quotient is again
/// a semiring.
inline FiniteSemiring zero_coordinate_collapse(const TupleAlgebra& A,
                                               const Config& cfg = default_config()) {
  auto S = to_semiring(A, cfg);
  auto J = zero_coordinate_ideal(A);
  if (J.empty()) return S;
  return quotient_by_absorbing_ideal(S, J);
}

// ---------------------------------------------------------------------------
// Named constructions: a small subalgebra A of a direct power of a fixed base,
// whose collapse by the zero-coordinate ideal is a prescribed direct union.
// Each generator family is an orbit of head/tail tuples under cyclic shifts.
// ---------------------------------------------------------------------------

enum class ConstructionCase {
  path_union,   // base union of two paths; quotient: m disjoint paths
  path_tower,   // base one longer path; quotient: full path over m shorter ones
  loop_union,   // base union of two loops; quotient: m disjoint loops
  cycle_union,  // base one cycle; quotient: m disjoint copies of it
  cycle_path,   // base cycle-plus-path union; quotient: m disjoint paths
  mixed,        // base cycles and doubled paths; quotient: m copies of the mix
  mixed_loop,   // base extra loop, cycles and paths; quotient: m copies
};

inline const char* case_name(ConstructionCase c) {
  switch (c) {
    case ConstructionCase::path_union: return "path-union";
    case ConstructionCase::path_tower: return "path-tower";
    case ConstructionCase::loop_union: return "loop-union";
    case ConstructionCase::cycle_union: return "cycle-union";
    case ConstructionCase::cycle_path: return "cycle-path";
    case ConstructionCase::mixed: return "mixed";
    case ConstructionCase::mixed_loop: return "mixed-loop";
  }
  return "?";
}

inline std::optional<ConstructionCase> parse_case(const std::string& s) {
  for (auto c : {ConstructionCase::path_union, ConstructionCase::path_tower,
                 ConstructionCase::loop_union, ConstructionCase::cycle_union,
                 ConstructionCase::cycle_path, ConstructionCase::mixed,
                 ConstructionCase::mixed_loop})
    if (s == case_name(c)) return c;
  return std::nullopt;
}

struct ConstructionParams {
  int n = 0;
  int m = 0;
  int k = 0;
  std::vector<int> I;  // cycle lengths
  std::vector<int> J;  // path vertex counts, never 1
};

struct ConstructionReport {
  ConstructionCase kind = ConstructionCase::path_union;
  ConstructionParams params;
  int power = 0;
  bool padded = false;         // power raised by one to keep generators distinct
  bool reconstruction = false; // generator family filled in, not taken as given
  FiniteSemiring base;
  std::vector<std::vector<int>> generators;
  std::vector<std::string> generator_labels;
  int subpower_size = 0;
  int ideal_size = 0;
  FiniteSemiring quotient;
  FiniteSemiring target;
  std::optional<IsoCertificate> iso;
  std::string note;
};

namespace detail {

struct GenFamily {
  int head = 0;
  int tail = 0;
};

// head at one rotating position, tail everywhere else
inline std::vector<std::vector<int>> shift_orbit(const std::vector<GenFamily>& fams, int power,
                                                 int m) {
  std::vector<std::vector<int>> gens;
  for (const auto& f : fams) {
    std::vector<int> t(static_cast<std::size_t>(power), f.tail);
    t[0] = f.head;
    for (int j = 1; j <= m; ++j) gens.push_back(cyclic_shift(t, j));
  }
  return gens;
}

// diagonal tuples are their own shift orbit
inline std::vector<int> diagonal(int x, int power) {
  return std::vector<int>(static_cast<std::size_t>(power), x);
}

inline bool has_duplicates(const std::vector<std::vector<int>>& gens) {
  std::set<std::vector<int>> seen(gens.begin(), gens.end());
  return seen.size() != gens.size();
}

inline void check_param(int value, const char* what, int lo, const Config& cfg) {
  if (value < lo)
    throw input_error(std::string("construction: ") + what + " must be at least " +
                      std::to_string(lo));
  if (value > cfg.construct_param_max)
    throw input_error(std::string("construction: ") + what + " exceeds construct_param_max=" +
                      std::to_string(cfg.construct_param_max));
}

inline std::vector<int> check_length_set(std::vector<int> v, const char* what, int lo,
                                         const Config& cfg) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  for (int x : v) check_param(x, what, lo, cfg);
  return v;
}

}  // namespace detail

/// Build one named construction: pick the base, lay out the generator
/// tuples, close them inside the direct power, collapse the zero-coordinate
/// ideal and match the result against the prescribed direct union.
inline ConstructionReport lemma_construction(ConstructionCase kind, ConstructionParams params,
                                             const Config& cfg = default_config()) {
  using detail::GenFamily;
  ConstructionReport rep;
  rep.kind = kind;
  const int m = params.m;
  detail::check_param(m, "m", 1, cfg);

  FiniteSemiring base;
  std::vector<GenFamily> fams;
  std::vector<std::vector<int>> diag;  // extra diagonal generators (by base index)
  std::vector<FiniteSemiring> unit_parts;  // one copy of the union the quotient repeats

  // vertex index of a_i within a path or cycle part embedding
  auto vx = [](const std::vector<int>& emb, int i) { return emb[static_cast<std::size_t>(i) + 1]; };

  switch (kind) {
    case ConstructionCase::path_union: {
      detail::check_param(params.n, "n", 2, cfg);
      auto u = omega_direct_union({path_semiring(params.n), path_semiring(params.n)}, cfg);
      base = u.semiring;
      for (int i = 1; i <= params.n; ++i)
        fams.push_back({vx(u.embeddings[0], i), vx(u.embeddings[1], i)});
      unit_parts.push_back(path_semiring(params.n));
      break;
    }
    case ConstructionCase::path_tower: {
      detail::check_param(params.n, "n", 2, cfg);
      detail::check_param(m, "m", 2, cfg);
      base = path_semiring(params.n + 1);
      for (int i = 1; i <= params.n + 1; ++i) diag.push_back({i + 1});
      for (int i = 1; i <= params.n; ++i) fams.push_back({i + 1, i + 2});
      unit_parts.push_back(path_semiring(params.n));
      break;
    }
    case ConstructionCase::loop_union: {
      auto u = omega_direct_union({cycle_semiring(1), cycle_semiring(1)}, cfg);
      base = u.semiring;
      fams.push_back({vx(u.embeddings[0], 1), vx(u.embeddings[1], 1)});
      unit_parts.push_back(cycle_semiring(1));
      break;
    }
    case ConstructionCase::cycle_union: {
      detail::check_param(params.n, "n", 2, cfg);
      base = cycle_semiring(params.n);
      for (int i = 1; i <= params.n; ++i) fams.push_back({i + 1, (i % params.n) + 2});
      unit_parts.push_back(cycle_semiring(params.n));
      break;
    }
    case ConstructionCase::cycle_path: {
      detail::check_param(params.k, "k", 1, cfg);
      detail::check_param(params.n, "n", 2, cfg);
      detail::check_param(m, "m", 2, cfg);
      auto u = omega_direct_union({cycle_semiring(params.k), path_semiring(params.n)}, cfg);
      base = u.semiring;
      for (int i = 1; i <= params.n; ++i)
        fams.push_back({vx(u.embeddings[0], ((i - 1) % params.k) + 1), vx(u.embeddings[1], i)});
      unit_parts.push_back(path_semiring(params.n));
      break;
    }
    case ConstructionCase::mixed: {
      rep.reconstruction = true;
      params.I = detail::check_length_set(std::move(params.I), "cycle length", 2, cfg);
      params.J = detail::check_length_set(std::move(params.J), "path length", 2, cfg);
      if (params.I.empty() && params.J.empty())
        throw input_error("construction: mixed needs at least one cycle or path");
      std::vector<FiniteSemiring> parts;
      for (int c : params.I) parts.push_back(cycle_semiring(c));
      for (int p : params.J) parts.push_back(path_semiring(p));
      for (int p : params.J) parts.push_back(path_semiring(p));
      auto u = omega_direct_union(parts, cfg);
      base = u.semiring;
      const std::size_t nI = params.I.size(), nJ = params.J.size();
      for (std::size_t ci = 0; ci < nI; ++ci) {
        int c = params.I[ci];
        for (int i = 1; i <= c; ++i)
          fams.push_back({vx(u.embeddings[ci], i), vx(u.embeddings[ci], (i % c) + 1)});
      }
      for (std::size_t pi = 0; pi < nJ; ++pi) {
        int p = params.J[pi];
        for (int i = 1; i <= p; ++i)
          fams.push_back({vx(u.embeddings[nI + pi], i), vx(u.embeddings[nI + nJ + pi], i)});
      }
      for (int c : params.I) unit_parts.push_back(cycle_semiring(c));
      for (int p : params.J) unit_parts.push_back(path_semiring(p));
      break;
    }
    case ConstructionCase::mixed_loop: {
      rep.reconstruction = true;
      params.I = detail::check_length_set(std::move(params.I), "cycle length", 1, cfg);
      params.J = detail::check_length_set(std::move(params.J), "path length", 2, cfg);
      if (params.I.empty() || params.I.front() != 1)
        throw input_error("construction: mixed-loop needs cycle length 1 present");
      std::vector<FiniteSemiring> parts;
      parts.push_back(cycle_semiring(1));
      for (int c : params.I) parts.push_back(cycle_semiring(c));
      for (int p : params.J) parts.push_back(path_semiring(p));
      auto u = omega_direct_union(parts, cfg);
      base = u.semiring;
      const int z = vx(u.embeddings[0], 1);
      const int y = vx(u.embeddings[1], 1);
      fams.push_back({y, z});
      for (std::size_t ci = 1; ci < params.I.size(); ++ci) {
        int c = params.I[ci];
        for (int i = 1; i <= c; ++i)
          fams.push_back({vx(u.embeddings[1 + ci], i), vx(u.embeddings[1 + ci], (i % c) + 1)});
      }
      for (std::size_t pi = 0; pi < params.J.size(); ++pi) {
        int p = params.J[pi];
        for (int i = 1; i <= p; ++i)
          fams.push_back({vx(u.embeddings[1 + params.I.size() + pi], i), z});
      }
      for (int c : params.I) unit_parts.push_back(cycle_semiring(c));
      for (int p : params.J) unit_parts.push_back(path_semiring(p));
      break;
    }
  }
  rep.params = params;
  rep.base = base;

  auto build = [&](int power) {
    auto gens = detail::shift_orbit(fams, power, m);
    for (const auto& d : diag) gens.push_back(detail::diagonal(d[0], power));
    return gens;
  };
  int power = m;
  auto gens = build(power);
  if (detail::has_duplicates(gens)) {
    power = m + 1;
    gens = build(power);
    rep.padded = true;
    rep.note = "power raised to m+1: the shift orbit collapses at the given power";
    if (detail::has_duplicates(gens))
      throw std::logic_error("lemma_construction: generators still collide after padding");
  }
  rep.power = power;
  rep.generators = gens;
  for (const auto& g : gens) rep.generator_labels.push_back(tuple_label(base, g));

  auto A = generate_subpower(base, power, gens, cfg);
  rep.subpower_size = static_cast<int>(A.elements.size());
  rep.ideal_size = static_cast<int>(zero_coordinate_ideal(A).size());
  rep.quotient = zero_coordinate_collapse(A, cfg);

  std::vector<FiniteSemiring> target_parts;
  if (kind == ConstructionCase::path_tower) target_parts.push_back(path_semiring(params.n + 1));
  for (int j = 0; j < m; ++j)
    for (const auto& p : unit_parts) target_parts.push_back(p);
  rep.target = omega_direct_union(target_parts, cfg).semiring;

  rep.iso = find_isomorphism(rep.quotient, rep.target);
  return rep;
}

}  // namespace flatsr

#endif
