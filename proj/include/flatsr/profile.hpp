#ifndef FLATSR_PROFILE_HPP
#define FLATSR_PROFILE_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "flatsr/core.hpp"
#include "flatsr/semiring.hpp"

namespace flatsr {

/// Structural summary of one algebra. zero is the element that is both the
/// multiplicative zero and the additive absorber; flatness additionally needs
/// a+b = zero for every distinct pair. nilpotency_class is the least k with
/// S^k = {zero}. annihilators excludes zero itself.
struct FlatProfile {
  std::optional<int> zero;
  bool is_flat = false;
  bool is_zero_cancellative = false;
  std::optional<int> nilpotency_class;
  std::vector<int> annihilators;
  bool is_si = false;
  std::optional<std::vector<int>> least_nonzero_ideal;
};

inline std::optional<int> find_zero(const FiniteSemiring& S) {
  for (int z = 0; z < S.order; ++z) {
    bool ok = true;
    for (int x = 0; x < S.order && ok; ++x)
      ok = S.mul(z, x) == z && S.mul(x, z) == z && S.add(x, z) == z;
    if (ok) return z;
  }
  return std::nullopt;
}

namespace detail {

inline bool flat_on(const FiniteSemiring& S, int zero) {
  for (int a = 0; a < S.order; ++a)
    for (int b = 0; b < S.order; ++b)
      if (a != b && S.add(a, b) != zero) return false;
  return true;
}

inline void require_flat(const FiniteSemiring& S, const char* op, std::optional<int>* zero_out = nullptr) {
  auto z = find_zero(S);
  if (!z || !flat_on(S, *z))
    throw precondition_error(std::string(op) + ": algebra is not flat");
  if (zero_out) *zero_out = z;
}

}  // namespace detail

/// Least subset containing gens and closed under both operations, as sorted
/// indices. Worklist fixpoint; order-independent result.
inline std::vector<int> subalgebra_closure(const FiniteSemiring& S, const std::vector<int>& gens) {
  if (gens.empty()) throw input_error("subalgebra_closure: generator set is empty");
  std::vector<char> in(S.order, 0);
  std::vector<int> work;
  for (int g : gens) {
    if (g < 0 || g >= S.order) throw input_error("subalgebra_closure: generator index out of range");
    if (!in[g]) {
      in[g] = 1;
      work.push_back(g);
    }
  }
  std::vector<int> members = work;
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (int y : members) {
      for (int v : {S.add(x, y), S.add(y, x), S.mul(x, y), S.mul(y, x)}) {
        if (!in[v]) {
          in[v] = 1;
          work.push_back(v);
        }
      }
    }
    // members may have grown via earlier pops; rebuild lazily
    members.clear();
    for (int i = 0; i < S.order; ++i)
      if (in[i]) members.push_back(i);
  }
  return members;
}

/// Smallest multiplicative ideal containing a (two-sided, always carrying
/// zero). a = zero yields {zero}.
inline std::vector<int> principal_ideal(const FiniteSemiring& S, int a) {
  std::optional<int> zero;
  detail::require_flat(S, "principal_ideal", &zero);
  if (a < 0 || a >= S.order) throw input_error("principal_ideal: element index out of range");
  if (a == *zero) return {*zero};
  std::vector<char> in(S.order, 0);
  in[*zero] = 1;
  in[a] = 1;
  std::vector<int> work{a};
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (int s = 0; s < S.order; ++s) {
      for (int v : {S.mul(x, s), S.mul(s, x)}) {
        if (!in[v]) {
          in[v] = 1;
          work.push_back(v);
        }
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < S.order; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

/// All multiplicative ideals (subsets containing zero, closed under left and
/// right multiplication by S), sorted by size then contents. Exponential in
/// the order, hence the ideal_order_max guard.
inline std::vector<std::vector<int>> multiplicative_ideals(const FiniteSemiring& S,
                                                           const Config& cfg = default_config()) {
  std::optional<int> zero;
  detail::require_flat(S, "multiplicative_ideals", &zero);
  if (S.order > cfg.ideal_order_max)
    throw resource_error("multiplicative_ideals: order " + std::to_string(S.order) +
                         " exceeds ideal_order_max=" + std::to_string(cfg.ideal_order_max));
  std::vector<int> nonzero;
  for (int i = 0; i < S.order; ++i)
    if (i != *zero) nonzero.push_back(i);
  const int m = static_cast<int>(nonzero.size());
  std::set<std::vector<int>> found;
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    std::vector<char> in(S.order, 0);
    in[*zero] = 1;
    std::vector<int> work;
    for (int b = 0; b < m; ++b)
      if (mask & (1ull << b)) {
        in[nonzero[b]] = 1;
        work.push_back(nonzero[b]);
      }
    while (!work.empty()) {
      int x = work.back();
      work.pop_back();
      for (int s = 0; s < S.order; ++s)
        for (int v : {S.mul(x, s), S.mul(s, x)})
          if (!in[v]) {
            in[v] = 1;
            work.push_back(v);
          }
    }
    std::vector<int> ideal;
    for (int i = 0; i < S.order; ++i)
      if (in[i]) ideal.push_back(i);
    found.insert(std::move(ideal));
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

/// Collapses an absorbing subset J (x·j, j·x, x+j all land in J) to a single
/// element and returns the quotient. The J class sits at index 0; survivors
/// keep their labels and relative order.
inline FiniteSemiring quotient_by_absorbing_ideal(const FiniteSemiring& S, const std::vector<int>& J) {
  if (J.empty()) throw input_error("quotient_by_absorbing_ideal: J is empty");
  std::vector<char> in_j(S.order, 0);
  for (int j : J) {
    if (j < 0 || j >= S.order) throw input_error("quotient_by_absorbing_ideal: index out of range");
    in_j[j] = 1;
  }
  auto lbl = [&](int i) { return S.labels.empty() ? "e" + std::to_string(i) : S.label(i); };
  for (int j = 0; j < S.order; ++j) {
    if (!in_j[j]) continue;
    for (int x = 0; x < S.order; ++x) {
      if (!in_j[S.mul(x, j)])
        throw precondition_error("quotient_by_absorbing_ideal: J not absorbing: " + lbl(x) + "*" + lbl(j));
      if (!in_j[S.mul(j, x)])
        throw precondition_error("quotient_by_absorbing_ideal: J not absorbing: " + lbl(j) + "*" + lbl(x));
      if (!in_j[S.add(x, j)])
        throw precondition_error("quotient_by_absorbing_ideal: J not absorbing: " + lbl(x) + "+" + lbl(j));
    }
  }
  // class map: J -> 0, survivors keep index order starting at 1
  std::vector<int> cls(S.order, 0);
  int next = 1;
  for (int i = 0; i < S.order; ++i)
    if (!in_j[i]) cls[i] = next++;
  const int m = next;
  std::vector<std::string> labels(m);
  {
    auto z = find_zero(S);
    int rep = (z && in_j[*z]) ? *z : *std::min_element(J.begin(), J.end());
    labels[0] = lbl(rep);
  }
  for (int i = 0; i < S.order; ++i)
    if (!in_j[i]) labels[cls[i]] = lbl(i);
  std::vector<int> add(static_cast<std::size_t>(m) * m, -1), mul(static_cast<std::size_t>(m) * m, -1);
  auto put = [m](std::vector<int>& t, int r, int c, int v, const char* op) {
    int& cell = t[static_cast<std::size_t>(r) * m + c];
    if (cell != -1 && cell != v)
      throw std::logic_error(std::string("quotient_by_absorbing_ideal: ") + op + " not well defined");
    cell = v;
  };
  for (int x = 0; x < S.order; ++x)
    for (int y = 0; y < S.order; ++y) {
      put(add, cls[x], cls[y], cls[S.add(x, y)], "addition");
      put(mul, cls[x], cls[y], cls[S.mul(x, y)], "multiplication");
    }
  auto Q = make_semiring(m, std::move(add), std::move(mul), std::move(labels), S.name);
  // the class map must be a homomorphism onto Q
  for (int x = 0; x < S.order; ++x)
    for (int y = 0; y < S.order; ++y)
      if (Q.add(cls[x], cls[y]) != cls[S.add(x, y)] || Q.mul(cls[x], cls[y]) != cls[S.mul(x, y)])
        throw std::logic_error("quotient_by_absorbing_ideal: class map is not a homomorphism");
  return Q;
}

inline FlatProfile flat_profile(const FiniteSemiring& S, const Config& cfg = default_config()) {
  auto report = verify_axioms(S, cfg);
  if (!report.all_pass()) {
    for (std::size_t k = 0; k < report.entries.size(); ++k)
      if (!report.entries[k].holds)
        throw precondition_error(std::string("flat_profile: input violates ") +
                                 axiom_name(static_cast<Axiom>(k)));
  }
  FlatProfile p;
  p.zero = find_zero(S);
  if (!p.zero) return p;
  const int z = *p.zero;
  p.is_flat = detail::flat_on(S, z);

  p.is_zero_cancellative = true;
  for (int a = 0; a < S.order && p.is_zero_cancellative; ++a)
    for (int b = 0; b < S.order && p.is_zero_cancellative; ++b)
      for (int c = b + 1; c < S.order; ++c) {
        if (S.mul(a, b) == S.mul(a, c) && S.mul(a, b) != z) {
          p.is_zero_cancellative = false;
          break;
        }
        if (S.mul(b, a) == S.mul(c, a) && S.mul(b, a) != z) {
          p.is_zero_cancellative = false;
          break;
        }
      }

  // S^1 = S, S^{k+1} = S * S^k; the chain is decreasing, so it stabilizes
  // within order steps
  {
    std::vector<char> power(S.order, 1);
    int k = 1;
    auto is_zero_only = [&](const std::vector<char>& v) {
      for (int i = 0; i < S.order; ++i)
        if (v[i] && i != z) return false;
      return v[z] != 0;
    };
    while (k <= S.order + 1) {
      if (is_zero_only(power)) {
        p.nilpotency_class = k;
        break;
      }
      std::vector<char> nxt(S.order, 0);
      for (int s = 0; s < S.order; ++s)
        for (int t = 0; t < S.order; ++t)
          if (power[t]) nxt[S.mul(s, t)] = 1;
      if (nxt == power) break;
      power = std::move(nxt);
      ++k;
    }
  }

  for (int w = 0; w < S.order; ++w) {
    if (w == z) continue;
    bool ann = true;
    for (int s = 0; s < S.order && ann; ++s)
      ann = S.mul(w, s) == z && S.mul(s, w) == z;
    if (ann) p.annihilators.push_back(w);
  }

  if (p.is_flat && S.order >= 2) {
    std::vector<char> meet(S.order, 1);
    for (int a = 0; a < S.order; ++a) {
      if (a == z) continue;
      auto ideal = principal_ideal(S, a);
      std::vector<char> in(S.order, 0);
      for (int e : ideal) in[e] = 1;
      for (int i = 0; i < S.order; ++i) meet[i] = meet[i] && in[i];
    }
    std::vector<int> least;
    for (int i = 0; i < S.order; ++i)
      if (meet[i]) least.push_back(i);
    if (least.size() >= 2) {
      p.is_si = true;
      p.least_nonzero_ideal = std::move(least);
    }
    if (p.nilpotency_class && p.is_si != (p.annihilators.size() == 1))
      throw std::logic_error("flat_profile: least-ideal and annihilator criteria disagree");
  }
  return p;
}

}  // namespace flatsr

#endif
