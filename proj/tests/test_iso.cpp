#include <numeric>

#include "doctest.h"
#include "flatsr/flatsr.hpp"

using namespace flatsr;

TEST_CASE("permuted copies are isomorphic with a valid certificate") {
  for (const auto& S : {s7(), path_semiring(3), cycle_semiring(2), from_words({"ab"}, false)}) {
    std::vector<int> perm(static_cast<std::size_t>(S.order));
    std::iota(perm.begin(), perm.end(), 0);
    std::rotate(perm.begin(), perm.begin() + 1, perm.end());
    auto P = permuted(S, perm);
    auto cert = find_isomorphism(S, P);
    REQUIRE(cert);
    CHECK(valid_certificate(S, P, *cert));
  }
}

TEST_CASE("order mismatch is not isomorphic") {
  CHECK(!find_isomorphism(s7(), path_semiring(3)));
}

TEST_CASE("group-with-zero is not the zero-divisor algebra") {
  // same order, same flatness profile, different multiplication: in S7 the
  // square of a is the zero, in the mutant the nonzero part is a group
  auto A = s7();
  auto B = s7();
  B.mul_table[1 * 3 + 1] = 2;  // a*a := 1
  CHECK(verify_axioms(B).all_pass());
  auto pa = flat_profile(A), pb = flat_profile(B);
  CHECK(pa.is_flat == pb.is_flat);
  CHECK(pa.annihilators == pb.annihilators);
  CHECK(!find_isomorphism(A, B));
}

TEST_CASE("same order and annihilator count can still differ") {
  // zero multiplication on two generators vs u*u = w
  auto Z = make_semiring(3, {0, 0, 0, 0, 1, 0, 0, 0, 2}, {0, 0, 0, 0, 0, 0, 0, 0, 0},
                         {"0", "w1", "w2"}, "zero-mult");
  auto U = make_semiring(3, {0, 0, 0, 0, 1, 0, 0, 0, 2}, {0, 0, 0, 0, 0, 0, 0, 0, 1},
                         {"0", "w", "u"}, "square");
  CHECK(verify_axioms(Z).all_pass());
  CHECK(verify_axioms(U).all_pass());
  CHECK(!find_isomorphism(Z, U));
  CHECK(find_isomorphism(U, U));
}

TEST_CASE("certificate validation is strict") {
  auto S = s7();
  IsoCertificate id{{0, 1, 2}};
  CHECK(valid_certificate(S, S, id));
  CHECK(!valid_certificate(S, S, IsoCertificate{{0, 2, 1}}));  // swaps a and 1
  CHECK(!valid_certificate(S, S, IsoCertificate{{0, 1}}));     // wrong size
  CHECK(!valid_certificate(S, S, IsoCertificate{{0, 1, 1}}));  // not injective
  CHECK(!valid_certificate(S, S, IsoCertificate{{0, 1, 3}}));  // out of range
  CHECK(!valid_certificate(S, path_semiring(2), id));          // order mismatch
}

TEST_CASE("the least isomorphism is returned") {
  // zero multiplication on 3 elements: any permutation fixing 0 works, the
  // search must return the identity
  auto Z = make_semiring(3, {0, 0, 0, 0, 1, 0, 0, 0, 2}, std::vector<int>(9, 0),
                         {"0", "w1", "w2"}, "zero-mult");
  auto cert = find_isomorphism(Z, Z);
  REQUIRE(cert);
  CHECK(cert->mapping == std::vector<int>{0, 1, 2});
}

TEST_CASE("non-semiring inputs are rejected") {
  auto bad = make_semiring(2, {0, 1, 1, 0}, {0, 0, 0, 0}, {"0", "a"}, "bad");
  CHECK_THROWS_AS(find_isomorphism(bad, bad), precondition_error);
}

TEST_CASE("word semiring isomorphisms from the construction remarks") {
  auto c1 = find_isomorphism(path_semiring(2), from_words({"ab"}, false));
  REQUIRE(c1);
  auto c2 = find_isomorphism(cycle_semiring(1), from_words({"aa"}, false));
  REQUIRE(c2);
  auto c3 = find_isomorphism(cycle_semiring(2), from_words({"ab"}, true));
  REQUIRE(c3);
  // the ordered and commutative word semirings on ab differ: ba is an
  // element of one and not the other, but both have order 4
  CHECK(!find_isomorphism(from_words({"ab"}, false), from_words({"ab"}, true)));
}
