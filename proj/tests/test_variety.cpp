#include "doctest.h"
#include "flatsr/flatsr.hpp"

using namespace flatsr;

TEST_CASE("variety descriptors parse and display") {
  for (const char* s : {"NF:3", "VN:2", "VAC", "VCN:1", "VI:2,3", "VPN:3", "VPNPN:2"}) {
    auto d = parse_variety(s);
    std::string shown = display_variety(d);
    // display uses parentheses, parse uses colons; spot check both ways
    CHECK(!shown.empty());
  }
  CHECK(display_variety(parse_variety("NF:3")) == "NF(3)");
  CHECK(display_variety(parse_variety("VI:3,2,3")) == "VI(2,3)");  // sorted, deduped
  CHECK(display_variety(parse_variety("VAC")) == "VAC");

  CHECK_THROWS_AS(parse_variety("VN"), input_error);
  CHECK_THROWS_AS(parse_variety("VN:1"), input_error);
  CHECK_THROWS_AS(parse_variety("VI:4"), input_error);  // not prime
  CHECK_THROWS_AS(parse_variety("VI:"), input_error);
  CHECK_THROWS_AS(parse_variety("VAC:2"), input_error);
  CHECK_THROWS_AS(parse_variety("XX:1"), input_error);
  CHECK_THROWS_AS(parse_variety("NF:x"), input_error);
}

TEST_CASE("graph membership in the cycle varieties") {
  auto c2 = cycle_graph(2);
  CHECK(decide_membership(c2, parse_variety("VN:2")).member);
  CHECK(decide_membership(c2, parse_variety("VN:4")).member);
  auto v = decide_membership(c2, parse_variety("VN:3"));
  CHECK(!v.member);
  REQUIRE(v.certificate);
  REQUIRE(v.witness);
  // the certificate genuinely fails on the graph's semiring
  auto S = from_graph(c2);
  CHECK(eval_term(v.certificate->lhs, S, *v.witness) !=
        eval_term(v.certificate->rhs, S, *v.witness));

  CHECK(decide_membership(c2, parse_variety("VCN:2")).member);
  CHECK(!decide_membership(c2, parse_variety("VCN:4")).member);  // proper divisor present
  CHECK(!decide_membership(c2, parse_variety("VCN:3")).member);
  CHECK(!decide_membership(c2, parse_variety("VAC")).member);
  CHECK(!decide_membership(c2, parse_variety("VI:2")).member);
  CHECK(decide_membership(c2, parse_variety("VI:3")).member);
  CHECK(decide_membership(c2, parse_variety("NF:3")).member);
  CHECK(!decide_membership(c2, parse_variety("NF:2")).member);
}

TEST_CASE("graph membership in the path varieties") {
  auto p3 = path_graph(3);
  CHECK(decide_membership(p3, parse_variety("VPN:3")).member);
  CHECK(decide_membership(p3, parse_variety("VPN:4")).member);
  CHECK(!decide_membership(p3, parse_variety("VPN:2")).member);
  CHECK(decide_membership(p3, parse_variety("VPNPN:3")).member);
  CHECK(decide_membership(p3, parse_variety("VAC")).member);

  // two top-length paths force the doubled variety
  auto two = make_graph("p3p3", {"a", "b", "c", "d", "e", "f"}, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  CHECK(!decide_membership(two, parse_variety("VPN:3")).member);
  CHECK(decide_membership(two, parse_variety("VPNPN:3")).member);
  auto refusal = decide_membership(two, parse_variety("VPN:3"));
  REQUIRE(refusal.certificate);
  CHECK(*refusal.certificate == identity_family(IdentityFamily::path_swap, 3));
}

TEST_CASE("classification of acyclic graphs") {
  CHECK(display_variety(classify_acyclic(path_graph(3))) == "VPN(3)");
  auto two = make_graph("p2p2", {"a", "b", "c", "d"}, {{0, 1}, {2, 3}});
  CHECK(display_variety(classify_acyclic(two)) == "VPNPN(2)");
  CHECK(display_variety(classify_acyclic(path_graph(1))) == "VPN(1)");
  CHECK_THROWS_AS(classify_acyclic(cycle_graph(2)), precondition_error);
}

TEST_CASE("semiring membership routes through the graph when possible") {
  auto S = cycle_semiring(2);
  CHECK(decide_membership(S, parse_variety("VN:2")).member);
  CHECK(!decide_membership(S, parse_variety("VN:3")).member);
  CHECK(decide_membership(S, parse_variety("VCN:2")).member);

  // non-si input: only the equationally decided varieties work
  auto U = zero_direct_union({cycle_semiring(2), cycle_semiring(2)}).semiring;
  CHECK(decide_membership(U, parse_variety("VN:2")).member);
  CHECK(decide_membership(U, parse_variety("VI:3")).member);
  CHECK(!decide_membership(U, parse_variety("VI:2")).member);
  CHECK(decide_membership(U, parse_variety("VAC")).member == false);
  CHECK_THROWS_AS(decide_membership(U, parse_variety("VPN:2")), input_error);

  // the witness algebra is not nilpotent, so it goes the equational route too
  CHECK(!decide_membership(s7(), parse_variety("NF:3")).member);
  CHECK(!decide_membership(s7(), parse_variety("VN:2")).member);
}

TEST_CASE("membership rejects non-flat input") {
  auto L = make_semiring(2, {0, 1, 1, 1}, {0, 0, 0, 1}, {"bot", "top"}, "lattice");
  CHECK_THROWS_AS(decide_membership(L, parse_variety("VAC")), precondition_error);
}

TEST_CASE("vn generator satisfies its defining identity") {
  auto G2 = vn_generator(2);
  CHECK(G2.order == 6);  // loop pair with the 1- and 2-cycles
  CHECK(satisfies(G2, identity_family(IdentityFamily::pn_cn, 2)).holds);
  CHECK(decide_membership(G2, parse_variety("VN:2")).member);
  CHECK_THROWS_AS(vn_generator(1), input_error);
  Config cfg;
  cfg.vn_n_max = 3;
  CHECK_THROWS_AS(vn_generator(4, cfg), resource_error);
}

TEST_CASE("nilpotency filtration strictness") {
  for (int k = 1; k <= 3; ++k) {
    auto S = from_words({std::string(static_cast<std::size_t>(k), 'a')}, false);
    CHECK(in_nf_k(S, k + 1));
    CHECK(!in_nf_k(S, k));
  }
}
