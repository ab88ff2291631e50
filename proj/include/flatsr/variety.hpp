#ifndef FLATSR_VARIETY_HPP
#define FLATSR_VARIETY_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "flatsr/construct.hpp"
#include "flatsr/core.hpp"
#include "flatsr/graph.hpp"
#include "flatsr/profile.hpp"
#include "flatsr/semiring.hpp"
#include "flatsr/term.hpp"

namespace flatsr {

/// Named varieties of flat semirings, all contained in the k-nilpotent ones:
///   NF(k)    flats where every product of k factors is the same
///   VN(n)    generated by the cycles whose length divides n, with a loop pair
///   VAC      generated by all path semirings
///   VCN(n)   generated by the length-n cycle semiring
///   VI(P)    flats avoiding every cycle whose length divides a prime in P
///   VPN(n)   generated by the n-vertex path semiring
///   VPNPN(n) generated by the union of two n-vertex path semirings
enum class VarietyTag { nf, vn, vac, vcn, vi, vpn, vpnpn };

struct VarietyDescriptor {
  VarietyTag tag = VarietyTag::vac;
  int n = 0;
  std::vector<int> primes;
};

namespace detail {

inline bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace detail

/// Parses "NF:k", "VN:n", "VAC", "VCN:n", "VI:q1,q2,...", "VPN:n", "VPNPN:n".
inline VarietyDescriptor parse_variety(const std::string& s) {
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);
  auto need_int = [&](int lo) {
    int v;
    try {
      std::size_t used = 0;
      v = std::stoi(rest, &used);
      if (used != rest.size()) throw input_error("");
    } catch (const std::exception&) {
      throw input_error("variety: '" + head + "' needs an integer parameter");
    }
    if (v < lo)
      throw input_error("variety: parameter of " + head + " must be at least " +
                        std::to_string(lo));
    return v;
  };
  if (head == "VAC") {
    if (!rest.empty()) throw input_error("variety: VAC takes no parameter");
    return {VarietyTag::vac, 0, {}};
  }
  if (head == "NF") return {VarietyTag::nf, need_int(1), {}};
  if (head == "VN") return {VarietyTag::vn, need_int(2), {}};
  if (head == "VCN") return {VarietyTag::vcn, need_int(1), {}};
  if (head == "VPN") return {VarietyTag::vpn, need_int(1), {}};
  if (head == "VPNPN") return {VarietyTag::vpnpn, need_int(1), {}};
  if (head == "VI") {
    VarietyDescriptor d{VarietyTag::vi, 0, {}};
    std::string item;
    std::istringstream in(rest);
    while (std::getline(in, item, ',')) {
      int q;
      try {
        std::size_t used = 0;
        q = std::stoi(item, &used);
        if (used != item.size()) throw input_error("");
      } catch (const std::exception&) {
        throw input_error("variety: VI takes a comma-separated list of primes");
      }
      if (!detail::is_prime(q))
        throw input_error("variety: VI parameter " + std::to_string(q) + " is not prime");
      d.primes.push_back(q);
    }
    if (d.primes.empty()) throw input_error("variety: VI needs at least one prime");
    std::sort(d.primes.begin(), d.primes.end());
    d.primes.erase(std::unique(d.primes.begin(), d.primes.end()), d.primes.end());
    return d;
  }
  throw input_error("variety: unknown name '" + head + "'");
}

inline std::string display_variety(const VarietyDescriptor& d) {
  switch (d.tag) {
    case VarietyTag::nf: return "NF(" + std::to_string(d.n) + ")";
    case VarietyTag::vn: return "VN(" + std::to_string(d.n) + ")";
    case VarietyTag::vac: return "VAC";
    case VarietyTag::vcn: return "VCN(" + std::to_string(d.n) + ")";
    case VarietyTag::vi: {
      std::string out = "VI(";
      for (std::size_t i = 0; i < d.primes.size(); ++i)
        out += (i ? "," : "") + std::to_string(d.primes[i]);
      return out + ")";
    }
    case VarietyTag::vpn: return "VPN(" + std::to_string(d.n) + ")";
    case VarietyTag::vpnpn: return "VPNPN(" + std::to_string(d.n) + ")";
  }
  return "?";
}

struct MembershipVerdict {
  bool member = false;
  std::string reason;
  std::optional<Identity> certificate;  // identity refuting membership
  std::optional<Assignment> witness;    // least assignment where it fails
};

namespace detail {

inline MembershipVerdict refuse(const FiniteSemiring& S, Identity id, std::string reason,
                                const Config& cfg) {
  auto r = satisfies(S, id, cfg);
  if (r.holds) throw std::logic_error("variety: refutation certificate unexpectedly holds");
  return {false, std::move(reason), std::move(id), r.witness};
}

inline MembershipVerdict accept(std::string reason) {
  return {true, std::move(reason), std::nullopt, std::nullopt};
}

}  // namespace detail

/// Structural membership for semirings of valid digraphs. Refusals carry a
/// defining identity of the variety together with a least failing assignment
/// in the graph's semiring.
inline MembershipVerdict decide_membership(const DiGraph& G, const VarietyDescriptor& d,
                                           const Config& cfg = default_config()) {
  auto s = components(G);
  auto S = [&] { return from_graph(G, cfg); };
  using detail::accept;
  using detail::refuse;
  switch (d.tag) {
    case VarietyTag::nf: {
      if (d.n >= 3) return accept("every product of 3 factors is 0 in a digraph semiring");
      if (d.n == 2) {
        if (G.edges.empty()) return accept("no edges, so all products of 2 factors are 0");
        return refuse(S(), identity_family(IdentityFamily::knil, 2),
                      "an edge gives two distinct products of 2 factors", cfg);
      }
      return refuse(S(), identity_family(IdentityFamily::knil, 1),
                    "a digraph semiring has at least 2 elements", cfg);
    }
    case VarietyTag::vn: {
      if (s.max_path_edges > d.n - 2)
        return refuse(S(), identity_family(IdentityFamily::pn_cn, d.n),
                      "a path with " + std::to_string(s.max_path_edges) +
                          " edges exceeds the bound " + std::to_string(d.n - 2),
                      cfg);
      for (int len : s.cycle_length_set)
        if (d.n % len != 0)
          return refuse(S(), identity_family(IdentityFamily::pn_cn, d.n),
                        "cycle length " + std::to_string(len) + " does not divide " +
                            std::to_string(d.n),
                        cfg);
      return accept("paths have at most " + std::to_string(d.n - 2) +
                    " edges and every cycle length divides " + std::to_string(d.n));
    }
    case VarietyTag::vac: {
      if (s.is_acyclic) return accept("acyclic");
      int len = s.cycle_length_set.front();
      return refuse(S(), identity_family(IdentityFamily::cn_x3, len),
                    "contains a cycle of length " + std::to_string(len), cfg);
    }
    case VarietyTag::vcn: {
      // isolated vertices stay members even at n = 1: zero-multiplication
      // semirings embed into powers of the loop semiring
      const int path_bound = std::max(d.n - 2, 0);
      if (s.max_path_edges > path_bound)
        return refuse(S(), identity_family(IdentityFamily::pn_cn, std::max(d.n, 2)),
                      "a path with " + std::to_string(s.max_path_edges) +
                          " edges exceeds the bound " + std::to_string(path_bound),
                      cfg);
      for (int len : s.cycle_length_set) {
        if (d.n % len != 0)
          return refuse(S(), identity_family(IdentityFamily::pn_cn, std::max(d.n, 2)),
                        "cycle length " + std::to_string(len) + " does not divide " +
                            std::to_string(d.n),
                        cfg);
        if (len != d.n)
          return refuse(S(), identity_family(IdentityFamily::cn_x3, len),
                        "contains a cycle of length " + std::to_string(len) +
                            ", a proper divisor of " + std::to_string(d.n),
                        cfg);
      }
      return accept("every cycle has length exactly " + std::to_string(d.n) +
                    " and paths fit the bound");
    }
    case VarietyTag::vi: {
      for (int len : s.cycle_length_set)
        for (int q : d.primes)
          if (q % len == 0)
            return refuse(S(), identity_family(IdentityFamily::cn_x3, q),
                          "cycle length " + std::to_string(len) + " divides " + std::to_string(q),
                          cfg);
      return accept("no cycle length divides any of the given primes");
    }
    case VarietyTag::vpn: {
      if (!s.is_acyclic) {
        int len = s.cycle_length_set.front();
        return refuse(S(), identity_family(IdentityFamily::cn_x3, len),
                      "contains a cycle of length " + std::to_string(len), cfg);
      }
      if (s.max_path_edges > d.n - 1)
        return refuse(S(), identity_family(IdentityFamily::pn_x3, d.n + 1),
                      "a path with " + std::to_string(s.max_path_edges) +
                          " edges exceeds the bound " + std::to_string(d.n - 1),
                      cfg);
      // at n = 1 a union of isolated vertices is already in the single-vertex
      // variety, so the multiplicity rule only bites from n = 2 on
      if (d.n >= 2 && s.max_path_edges == d.n - 1 && s.max_path_multiplicity >= 2)
        return refuse(S(), identity_family(IdentityFamily::path_swap, d.n),
                      std::to_string(s.max_path_multiplicity) + " disjoint paths attain the top length " +
                          std::to_string(d.n - 1),
                      cfg);
      return accept("acyclic with at most one path of " + std::to_string(d.n - 1) + " edges");
    }
    case VarietyTag::vpnpn: {
      if (!s.is_acyclic) {
        int len = s.cycle_length_set.front();
        return refuse(S(), identity_family(IdentityFamily::cn_x3, len),
                      "contains a cycle of length " + std::to_string(len), cfg);
      }
      if (s.max_path_edges > d.n - 1)
        return refuse(S(), identity_family(IdentityFamily::pn_x3, d.n + 1),
                      "a path with " + std::to_string(s.max_path_edges) +
                          " edges exceeds the bound " + std::to_string(d.n - 1),
                      cfg);
      return accept("acyclic with paths of at most " + std::to_string(d.n - 1) + " edges");
    }
  }
  throw std::logic_error("decide_membership: unhandled variety");
}

/// Membership for a general flat semiring. Subdirectly irreducible inputs of
/// nilpotency class at most 3 go through their digraph; everything else is
/// decided equationally, which only works for the finitely based cases.
inline MembershipVerdict decide_membership(const FiniteSemiring& S, const VarietyDescriptor& d,
                                           const Config& cfg = default_config()) {
  auto prof = flat_profile(S, cfg);
  if (!prof.is_flat) throw precondition_error("membership: input semiring is not flat");
  if (prof.is_si && prof.nilpotency_class && *prof.nilpotency_class <= 3)
    return decide_membership(semiring_to_graph(S, cfg), d, cfg);
  using detail::accept;
  using detail::refuse;
  auto knil3 = [&]() -> std::optional<MembershipVerdict> {
    auto id = identity_family(IdentityFamily::knil, 3);
    auto r = satisfies(S, id, cfg);
    if (r.holds) return std::nullopt;
    return MembershipVerdict{false, "products of 3 factors are not all equal", id, r.witness};
  };
  switch (d.tag) {
    case VarietyTag::nf: {
      auto id = identity_family(IdentityFamily::knil, d.n);
      auto r = satisfies(S, id, cfg);
      if (r.holds)
        return accept("all products of " + std::to_string(d.n) + " factors coincide");
      return MembershipVerdict{false,
                               "products of " + std::to_string(d.n) + " factors are not all equal",
                               id, r.witness};
    }
    case VarietyTag::vn: {
      if (auto v = knil3()) return *v;
      auto id = identity_family(IdentityFamily::pn_cn, d.n);
      auto r = satisfies(S, id, cfg);
      if (r.holds) return accept("3-nilpotent and the open and closed walk sums agree");
      return MembershipVerdict{false, "open and closed walk sums differ", id, r.witness};
    }
    case VarietyTag::vac: {
      if (auto v = knil3()) return *v;
      // a nonzero closed-walk sum needs a cycle among at most order-2
      // vertices, so these lengths are exhaustive
      for (int len = 1; len <= S.order - 2; ++len) {
        auto id = identity_family(IdentityFamily::cn_x3, len);
        auto r = satisfies(S, id, cfg);
        if (!r.holds)
          return MembershipVerdict{
              false, "a closed walk sum of length " + std::to_string(len) + " is nonzero", id,
              r.witness};
      }
      return accept("3-nilpotent with every closed walk sum zero");
    }
    case VarietyTag::vi: {
      if (auto v = knil3()) return *v;
      for (int q : d.primes) {
        auto id = identity_family(IdentityFamily::cn_x3, q);
        auto r = satisfies(S, id, cfg);
        if (!r.holds)
          return MembershipVerdict{
              false, "a closed walk sum of length " + std::to_string(q) + " is nonzero", id,
              r.witness};
      }
      return accept("3-nilpotent and avoids the given closed walk lengths");
    }
    case VarietyTag::vcn:
    case VarietyTag::vpn:
    case VarietyTag::vpnpn:
      throw input_error("membership in " + display_variety(d) +
                        " is only decided for subdirectly irreducible inputs of nilpotency class "
                        "at most 3");
  }
  throw std::logic_error("decide_membership: unhandled variety");
}

/// Least variety of the path kind containing the semiring of an acyclic
/// digraph: VPN(n) when a single path attains the top length, VPNPN(n) when
/// several do. At n = 1 these coincide; the name still records multiplicity.
inline VarietyDescriptor classify_acyclic(const DiGraph& G, const Config& = default_config()) {
  auto s = components(G);
  if (!s.is_acyclic)
    throw precondition_error("classify_acyclic: graph has a cycle of length " +
                             std::to_string(s.cycle_length_set.front()));
  int n = s.max_path_edges + 1;
  bool single = s.max_path_multiplicity <= 1;
  return {single ? VarietyTag::vpn : VarietyTag::vpnpn, n, {}};
}

/// Generating semiring of VN(n): the union of a loop pair with one cycle for
/// each divisor of n.
inline FiniteSemiring vn_generator(int n, const Config& cfg = default_config()) {
  if (n < 2) throw input_error("vn_generator: n must be at least 2");
  if (n > cfg.vn_n_max)
    throw resource_error("vn_generator: n exceeds vn_n_max=" + std::to_string(cfg.vn_n_max));
  std::vector<FiniteSemiring> parts{cycle_semiring(1)};
  for (int k = 1; k <= n; ++k)
    if (n % k == 0) parts.push_back(cycle_semiring(k));
  auto U = omega_direct_union(parts, cfg).semiring;
  if (n <= 4) {
    auto r = satisfies(U, identity_family(IdentityFamily::pn_cn, n), cfg);
    if (!r.holds) throw std::logic_error("vn_generator: defining identity fails on the generator");
  }
  return U;
}

inline bool in_nf_k(const FiniteSemiring& S, int k, const Config& cfg = default_config()) {
  return satisfies(S, identity_family(IdentityFamily::knil, k), cfg).holds;
}

}  // namespace flatsr

#endif
