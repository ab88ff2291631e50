#include <sstream>

#include "doctest.h"
#include "flatsr/flatsr.hpp"

using namespace flatsr;

TEST_CASE("make_semiring validates shape") {
  std::vector<int> add{0, 0, 0, 1}, mul{0, 0, 0, 0};
  CHECK_NOTHROW(make_semiring(2, add, mul, {"0", "a"}, "t"));
  CHECK_THROWS_AS(make_semiring(3, add, mul, {"0", "a", "b"}, "t"), input_error);
  CHECK_THROWS_AS(make_semiring(2, add, mul, {"0"}, "t"), input_error);
  CHECK_THROWS_AS(make_semiring(2, add, mul, {"0", "0"}, "t"), input_error);
  CHECK_THROWS_AS(make_semiring(2, std::vector<int>{0, 0, 0, 2}, mul, {"0", "a"}, "t"), input_error);
  CHECK_THROWS_AS(make_semiring(2, add, mul, {"0", "a b"}, "t"), input_error);
  CHECK_THROWS_AS(make_semiring(0, {}, {}, {}, "t"), input_error);
}

TEST_CASE("axioms hold on the three-element witness algebra") {
  auto S = s7();
  auto rep = verify_axioms(S);
  CHECK(rep.all_pass());
  CHECK(S.order == 3);
  CHECK(S.label(0) == "inf");
  CHECK(S.mul(2, 2) == 2);  // 1*1 = 1
  CHECK(S.mul(1, 1) == 0);  // a*a = inf
}

TEST_CASE("axiom failures carry a least witness") {
  // break associativity of multiplication in the witness algebra
  auto S = s7();
  S.mul_table[1 * 3 + 2] = 2;  // a*1 := 1
  auto rep = verify_axioms(S);
  CHECK(!rep.all_pass());
  const auto& e = rep[Axiom::mul_associative];
  bool assoc_or_dist = !e.holds || !rep[Axiom::left_distributive].holds ||
                       !rep[Axiom::right_distributive].holds;
  CHECK(assoc_or_dist);
  if (!e.holds) {
    REQUIRE(e.witness.size() == 3);
    auto at = [&](int x, int y) { return S.mul(x, y); };
    int a = e.witness[0], b = e.witness[1], c = e.witness[2];
    CHECK(at(at(a, b), c) != at(a, at(b, c)));
  }
}

TEST_CASE("idempotence failure is caught") {
  std::vector<int> add{0, 1, 1, 0}, mul{0, 0, 0, 0};
  auto S = make_semiring(2, add, mul, {"0", "a"}, "bad");
  auto rep = verify_axioms(S);
  CHECK(!rep[Axiom::add_idempotent].holds);
  CHECK(rep[Axiom::add_idempotent].witness == std::vector<int>{1});
}

TEST_CASE("verify_axioms respects the order cap") {
  Config cfg;
  cfg.axiom_order_max = 2;
  CHECK_THROWS_AS(verify_axioms(s7(), cfg), resource_error);
}

TEST_CASE("text round trip") {
  auto S = s7();
  auto text = to_text(S);
  auto T = semiring_from_text(text);
  CHECK(S == T);
  CHECK(T.name == "S7");
  CHECK(T.labels == S.labels);
}

TEST_CASE("parser tolerates comments and free whitespace") {
  std::string text =
      "# witness algebra\n"
      "semiring S7\norder 3\n"
      "elements inf a 1  # labels\n"
      "add\ninf inf inf\ninf a inf\n inf inf 1\n"
      "mul\ninf inf inf\ninf inf a\ninf a 1\n";
  std::istringstream in(text);
  auto T = parse_semiring(in);
  CHECK(T == s7());
}

TEST_CASE("parser rejects malformed input") {
  auto bad = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_semiring(in), input_error);
  };
  bad("");
  bad("semiring X order 2 elements 0 a add 0 0 0 a");                       // missing mul
  bad("semiring X order 2 elements 0 a add 0 0 0 b mul 0 0 0 0");           // unknown label
  bad("semiring X order 1 elements 0 a add 0 mul 0");                       // count mismatch
  bad("ring X order 2 elements 0 a add 0 0 0 a mul 0 0 0 0");               // wrong header
}

TEST_CASE("restrict_to checks closure") {
  auto S = s7();
  auto sub = restrict_to(S, {0, 1});  // {inf, a}: a*a = inf, closed
  CHECK(sub.order == 2);
  CHECK(verify_axioms(sub).all_pass());
  CHECK(sub.label(1) == "a");
  // {inf, 1} is closed too; {a, 1} is not (a+1 = inf)
  CHECK_NOTHROW(restrict_to(S, {0, 2}));
  CHECK_THROWS_AS(restrict_to(S, {1, 2}), precondition_error);
  CHECK_THROWS_AS(restrict_to(S, std::vector<int>{}), input_error);
  CHECK_THROWS_AS(restrict_to(S, {0, 5}), input_error);
}

TEST_CASE("permuted produces an isomorphic copy") {
  auto S = s7();
  auto P = permuted(S, {2, 0, 1});
  CHECK(P.order == 3);
  CHECK(P.label(0) == "1");
  CHECK(verify_axioms(P).all_pass());
  auto cert = find_isomorphism(P, S);
  REQUIRE(cert);
  CHECK(valid_certificate(P, S, *cert));
  CHECK_THROWS_AS(permuted(S, {0, 0, 1}), input_error);
  CHECK_THROWS_AS(permuted(S, {0, 1}), input_error);
}
