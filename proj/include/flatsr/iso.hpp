#ifndef FLATSR_ISO_HPP
#define FLATSR_ISO_HPP

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

#include "flatsr/core.hpp"
#include "flatsr/semiring.hpp"

namespace flatsr {

/// mapping[i] is the image in B of element i of A.
struct IsoCertificate {
  std::vector<int> mapping;
};

inline bool valid_certificate(const FiniteSemiring& A, const FiniteSemiring& B, const IsoCertificate& cert) {
  if (A.order != B.order || static_cast<int>(cert.mapping.size()) != A.order) return false;
  std::vector<char> hit(B.order, 0);
  for (int v : cert.mapping) {
    if (v < 0 || v >= B.order || hit[v]) return false;
    hit[v] = 1;
  }
  for (int a = 0; a < A.order; ++a)
    for (int b = 0; b < A.order; ++b) {
      if (cert.mapping[A.add(a, b)] != B.add(cert.mapping[a], cert.mapping[b])) return false;
      if (cert.mapping[A.mul(a, b)] != B.mul(cert.mapping[a], cert.mapping[b])) return false;
    }
  return true;
}

namespace detail {

// Joint color refinement over both element sets. Colors are isomorphism
// invariants: any isomorphism maps an element to one of equal color.
inline std::pair<std::vector<int>, std::vector<int>> refine_colors(const FiniteSemiring& A,
                                                                   const FiniteSemiring& B) {
  const int n = A.order;
  auto seed = [n](const FiniteSemiring& S, int x) {
    std::ostringstream os;
    os << (S.mul(x, x) == x) << '|';
    std::vector<int> rowf(n, 0), colf(n, 0), addf(n, 0);
    int as_value_mul = 0, as_value_add = 0;
    for (int y = 0; y < n; ++y) {
      rowf[S.mul(x, y)]++;
      colf[S.mul(y, x)]++;
      addf[S.add(x, y)]++;
    }
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        if (S.mul(r, c) == x) ++as_value_mul;
        if (S.add(r, c) == x) ++as_value_add;
      }
    auto freq = [](std::vector<int> f) {
      f.erase(std::remove(f.begin(), f.end(), 0), f.end());
      std::sort(f.begin(), f.end());
      return f;
    };
    for (int v : freq(rowf)) os << v << ',';
    os << '|';
    for (int v : freq(colf)) os << v << ',';
    os << '|';
    for (int v : freq(addf)) os << v << ',';
    os << '|' << as_value_mul << '|' << as_value_add;
    return os.str();
  };
  std::vector<std::string> sig(2 * n);
  for (int i = 0; i < n; ++i) {
    sig[i] = seed(A, i);
    sig[n + i] = seed(B, i);
  }
  std::vector<int> color(2 * n, 0);
  auto assign = [&]() {
    std::map<std::string, int> dict;
    int classes = 0;
    for (int i = 0; i < 2 * n; ++i) {
      auto it = dict.emplace(sig[i], classes);
      if (it.second) ++classes;
      color[i] = it.first->second;
    }
    return classes;
  };
  int classes = assign();
  for (int round = 0; round < n; ++round) {
    for (int i = 0; i < 2 * n; ++i) {
      const FiniteSemiring& S = i < n ? A : B;
      const int base = i < n ? 0 : n;
      const int x = i - base;
      std::vector<std::array<int, 4>> neigh;
      neigh.reserve(n);
      for (int y = 0; y < n; ++y)
        neigh.push_back({color[base + y], color[base + S.mul(x, y)], color[base + S.mul(y, x)],
                         color[base + S.add(x, y)]});
      std::sort(neigh.begin(), neigh.end());
      std::ostringstream os;
      os << color[i];
      for (const auto& t : neigh) os << ';' << t[0] << ',' << t[1] << ',' << t[2] << ',' << t[3];
      sig[i] = os.str();
    }
    int next = assign();
    if (next == classes) break;
    classes = next;
  }
  return {std::vector<int>(color.begin(), color.begin() + n),
          std::vector<int>(color.begin() + n, color.end())};
}

inline bool iso_dfs(const FiniteSemiring& A, const FiniteSemiring& B, const std::vector<int>& ca,
                    const std::vector<int>& cb, std::vector<int>& f, std::vector<int>& g, int k) {
  const int n = A.order;
  if (k == n) return true;
  for (int v = 0; v < n; ++v) {
    if (g[v] != -1 || ca[k] != cb[v]) continue;
    f[k] = v;
    g[v] = k;
    bool ok = true;
    for (int i = 0; i <= k && ok; ++i) {
      struct Probe {
        int r;  // result in A
        int s;  // required image in B
      };
      const Probe probes[4] = {{A.add(i, k), B.add(f[i], v)},
                               {A.mul(i, k), B.mul(f[i], v)},
                               {A.mul(k, i), B.mul(v, f[i])},
                               {A.add(k, i), B.add(v, f[i])}};
      for (const auto& p : probes) {
        if (f[p.r] != -1) {
          if (f[p.r] != p.s) {
            ok = false;
            break;
          }
        } else if (g[p.s] != -1) {
          ok = false;
          break;
        }
      }
    }
    if (ok && iso_dfs(A, B, ca, cb, f, g, k + 1)) return true;
    f[k] = -1;
    g[v] = -1;
  }
  return false;
}

}  // namespace detail

/// Lexicographically least isomorphism A -> B, or absence. Candidates are
/// pruned by joint color refinement and by partial consistency of both
/// operation tables.
inline std::optional<IsoCertificate> find_isomorphism(const FiniteSemiring& A, const FiniteSemiring& B,
                                                      const Config& cfg = default_config()) {
  if (!verify_axioms(A, cfg).all_pass() || !verify_axioms(B, cfg).all_pass())
    throw precondition_error("find_isomorphism: inputs must satisfy the semiring axioms");
  if (A.order != B.order) return std::nullopt;
  auto [ca, cb] = detail::refine_colors(A, B);
  {
    auto ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return std::nullopt;
  }
  std::vector<int> f(A.order, -1), g(A.order, -1);
  if (!detail::iso_dfs(A, B, ca, cb, f, g, 0)) return std::nullopt;
  IsoCertificate cert{f};
  if (!valid_certificate(A, B, cert)) throw std::logic_error("find_isomorphism: produced invalid certificate");
  return cert;
}

}  // namespace flatsr

#endif
