#ifndef FLATSR_ENUMERATE_HPP
#define FLATSR_ENUMERATE_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "flatsr/construct.hpp"
#include "flatsr/core.hpp"
#include "flatsr/graph.hpp"
#include "flatsr/profile.hpp"
#include "flatsr/semiring.hpp"

namespace flatsr {

/// One isomorphism class of a 3-nilpotent flat semiring. Labels: zero "0",
/// annihilators "w1..wk", the rest "u1..ut".
struct EnumerationRecord {
  std::string class_id;  // "n<order>-<index>"
  int order = 0;
  int annihilator_count = 0;
  bool is_si = false;
  std::string graph_desc;  // component tags when subdirectly irreducible
  FiniteSemiring algebra;
  std::vector<int> table;  // canonical products over the non-annihilators
};

/// All 3-nilpotent flat semirings of order 2..order_max, one canonical
/// representative per isomorphism class.
///
/// Shape of such a semiring: the nonzero elements split into the annihilator
/// set A and the rest N; products vanish except on N x N, where they land in
/// A u {0}. Associativity is automatic (all triple products are 0), both
/// distributive laws reduce to injectivity of rows and columns off zero, and
/// every element of N must have some nonzero product or it would sit in A.
/// Permuting A and N independently is exactly the isomorphism action, so the
/// lex-least table under Sym(A) x Sym(N) is a complete invariant.
inline std::vector<EnumerationRecord> enumerate_3nilpotent(int order_max,
                                                           const Config& cfg = default_config()) {
  if (order_max < 2) throw input_error("enumerate: order_max must be at least 2");
  if (order_max > cfg.enum_order_max)
    throw resource_error("enumerate: order_max exceeds enum_order_max=" +
                         std::to_string(cfg.enum_order_max));
  std::vector<EnumerationRecord> out;
  for (int order = 2; order <= order_max; ++order) {
    int per_order = 0;
    const int nz = order - 1;
    for (int k = 1; k <= nz; ++k) {
      const int t = nz - k;
      const int cells = t * t;
      std::vector<int> f(static_cast<std::size_t>(cells), 0);  // values 0..k
      auto fv = [&](int i, int j) { return f[static_cast<std::size_t>(i) * t + j]; };
      auto admissible = [&]() {
        for (int i = 0; i < t; ++i) {
          bool touched = false;
          for (int j = 0; j < t; ++j) {
            if (fv(i, j) || fv(j, i)) touched = true;
            for (int l = j + 1; l < t; ++l) {
              if (fv(i, j) && fv(i, j) == fv(i, l)) return false;  // row repeat
              if (fv(j, i) && fv(j, i) == fv(l, i)) return false;  // column repeat
            }
          }
          if (!touched) return false;  // would be an extra annihilator
        }
        return true;
      };
      auto canonical = [&]() {
        std::vector<int> pa(static_cast<std::size_t>(k));
        std::iota(pa.begin(), pa.end(), 1);  // value permutation, nonzero values
        std::vector<int> best = f;
        do {
          std::vector<int> pn(static_cast<std::size_t>(t));
          std::iota(pn.begin(), pn.end(), 0);  // element permutation on N
          do {
            std::vector<int> g(f.size());
            for (int i = 0; i < t; ++i)
              for (int j = 0; j < t; ++j) {
                int v = fv(i, j);
                g[static_cast<std::size_t>(pn[i]) * t + pn[j]] = v ? pa[v - 1] : 0;
              }
            if (g < best) best = g;
          } while (std::next_permutation(pn.begin(), pn.end()));
        } while (std::next_permutation(pa.begin(), pa.end()));
        return best;
      };
      for (;;) {
        if (admissible() && f == canonical()) {
          const int n = order;
          std::vector<int> add(static_cast<std::size_t>(n) * n, 0),
              mul(static_cast<std::size_t>(n) * n, 0);
          for (int i = 0; i < n; ++i) add[static_cast<std::size_t>(i) * n + i] = i;
          for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
              mul[static_cast<std::size_t>(k + 1 + i) * n + (k + 1 + j)] = fv(i, j);
          std::vector<std::string> labels{"0"};
          for (int a = 1; a <= k; ++a) labels.push_back("w" + std::to_string(a));
          for (int u = 1; u <= t; ++u) labels.push_back("u" + std::to_string(u));
          EnumerationRecord rec;
          rec.order = order;
          rec.annihilator_count = k;
          rec.table = f;
          rec.class_id = "n" + std::to_string(order) + "-" + std::to_string(++per_order);
          rec.algebra = make_semiring(n, add, mul, labels,
                                      "nil3-" + std::to_string(order) + "-" +
                                          std::to_string(per_order));
          auto prof = flat_profile(rec.algebra, cfg);
          if (!prof.is_flat || !prof.is_zero_cancellative || !prof.nilpotency_class ||
              *prof.nilpotency_class > 3)
            throw std::logic_error("enumerate: generated table is not 3-nilpotent flat");
          if (static_cast<int>(prof.annihilators.size()) != k)
            throw std::logic_error("enumerate: annihilator count mismatch");
          rec.is_si = prof.is_si;
          if (rec.is_si != (k == 1))
            throw std::logic_error("enumerate: subdirect irreducibility disagrees with "
                                   "annihilator count");
          if (rec.is_si) rec.graph_desc = component_tags(components(semiring_to_graph(rec.algebra, cfg)));
          out.push_back(std::move(rec));
        }
        // odometer over the free cells
        int c = 0;
        while (c < cells && f[static_cast<std::size_t>(c)] == k) f[static_cast<std::size_t>(c++)] = 0;
        if (c == cells) break;
        ++f[static_cast<std::size_t>(c)];
      }
    }
  }
  return out;
}

/// One line per record: class id, order, annihilator count, si flag, graph
/// tags when present, and the nonzero products written with labels.
inline std::string print_record(const EnumerationRecord& r) {
  std::string out = r.class_id + " order=" + std::to_string(r.order) +
                    " annihilators=" + std::to_string(r.annihilator_count) +
                    " si=" + (r.is_si ? "true" : "false");
  if (r.is_si) out += " graph=" + r.graph_desc;
  std::string prods;
  const auto& S = r.algebra;
  for (int i = 0; i < S.order; ++i)
    for (int j = 0; j < S.order; ++j)
      if (S.mul(i, j) != 0) {
        if (!prods.empty()) prods += " ";
        prods += S.label(i) + "*" + S.label(j) + "=" + S.label(S.mul(i, j));
      }
  out += " products " + (prods.empty() ? "-" : prods);
  return out;
}

}  // namespace flatsr

#endif
