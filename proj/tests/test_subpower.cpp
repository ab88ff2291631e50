#include <set>

#include "doctest.h"
#include "flatsr/flatsr.hpp"

using namespace flatsr;

TEST_CASE("cyclic_shift rotates right") {
  CHECK(cyclic_shift({1, 2, 3}, 1) == std::vector<int>{3, 1, 2});
  CHECK(cyclic_shift({1, 2, 3}, 3) == std::vector<int>{1, 2, 3});
  CHECK(cyclic_shift({1, 2, 3}, -1) == std::vector<int>{2, 3, 1});
}

TEST_CASE("generate_subpower closes under both operations") {
  auto base = s7();
  auto A = generate_subpower(base, 2, {{1, 2}, {2, 1}});
  // closure check: every pairwise sum and product is present
  std::set<std::vector<int>> seen(A.elements.begin(), A.elements.end());
  for (const auto& x : A.elements)
    for (const auto& y : A.elements) {
      std::vector<int> s{base.add(x[0], y[0]), base.add(x[1], y[1])};
      std::vector<int> p{base.mul(x[0], y[0]), base.mul(x[1], y[1])};
      CHECK(seen.count(s));
      CHECK(seen.count(p));
    }
  auto S = to_semiring(A);
  CHECK(S.order == static_cast<int>(A.elements.size()));
  CHECK(verify_axioms(S).all_pass());

  CHECK_THROWS_AS(generate_subpower(base, 0, {{}}), input_error);
  CHECK_THROWS_AS(generate_subpower(base, 2, {}), input_error);
  CHECK_THROWS_AS(generate_subpower(base, 2, {{1}}), input_error);
  CHECK_THROWS_AS(generate_subpower(base, 2, {{1, 9}}), input_error);
  Config cfg;
  cfg.closure_max = 2;
  CHECK_THROWS_AS(generate_subpower(base, 2, {{1, 2}, {2, 1}}, cfg), resource_error);
}

TEST_CASE("zero coordinate ideal and collapse") {
  auto base = path_semiring(2);  // zero at 0
  auto A = generate_subpower(base, 2, {{2, 3}, {3, 2}});
  auto J = zero_coordinate_ideal(A);
  for (int i : J) {
    bool has_zero = false;
    for (int c : A.elements[static_cast<std::size_t>(i)]) has_zero = has_zero || c == 0;
    CHECK(has_zero);
  }
  auto Q = zero_coordinate_collapse(A);
  CHECK(Q.order == static_cast<int>(A.elements.size() - J.size()) + 1);
  CHECK(verify_axioms(Q).all_pass());
  CHECK(flat_profile(Q).is_flat);
}

TEST_CASE("case names round trip") {
  for (auto c : {ConstructionCase::path_union, ConstructionCase::path_tower,
                 ConstructionCase::loop_union, ConstructionCase::cycle_union,
                 ConstructionCase::cycle_path, ConstructionCase::mixed,
                 ConstructionCase::mixed_loop})
    CHECK(parse_case(case_name(c)) == c);
  CHECK(!parse_case("nonsense"));
}

TEST_CASE("construction reports are internally consistent") {
  ConstructionParams p;
  p.n = 2;
  p.m = 3;
  auto rep = lemma_construction(ConstructionCase::path_union, p, default_config());
  CHECK(rep.power == 3);
  CHECK(!rep.padded);
  CHECK(rep.subpower_size - rep.ideal_size + 1 == rep.quotient.order);
  CHECK(rep.generators.size() == rep.generator_labels.size());
  REQUIRE(rep.iso);
  CHECK(valid_certificate(rep.quotient, rep.target, *rep.iso));
  // quotient is the m-fold union of the unit, here 3 paths on 2 vertices
  CHECK(rep.quotient.order == 2 + 3 * 2);
}

TEST_CASE("degenerate shift orbits are padded") {
  ConstructionParams p;
  p.n = 2;
  p.m = 2;
  auto rep = lemma_construction(ConstructionCase::cycle_union, p, default_config());
  CHECK(rep.padded);
  CHECK(rep.power == 3);
  REQUIRE(rep.iso);
  CHECK(valid_certificate(rep.quotient, rep.target, *rep.iso));
  CHECK(rep.quotient.order == 2 + 2 * 2);
  CHECK(!rep.note.empty());
}

TEST_CASE("tower construction embeds the longer path") {
  ConstructionParams p;
  p.n = 2;
  p.m = 2;
  auto rep = lemma_construction(ConstructionCase::path_tower, p, default_config());
  REQUIRE(rep.iso);
  // target: one path on n+1 vertices plus m paths on n vertices
  CHECK(rep.target.order == 2 + 3 + 2 * 2);
  CHECK(rep.quotient.order == rep.target.order);
}

TEST_CASE("reconstruction cases fill in generator families") {
  ConstructionParams p;
  p.m = 2;
  p.I = {2};
  p.J = {2};
  auto rep = lemma_construction(ConstructionCase::mixed, p, default_config());
  CHECK(rep.reconstruction);
  REQUIRE(rep.iso);
  CHECK(valid_certificate(rep.quotient, rep.target, *rep.iso));

  ConstructionParams q;
  q.m = 2;
  q.I = {1, 2};
  q.J = {2};
  auto rl = lemma_construction(ConstructionCase::mixed_loop, q, default_config());
  CHECK(rl.reconstruction);
  REQUIRE(rl.iso);
  CHECK(valid_certificate(rl.quotient, rl.target, *rl.iso));
}

TEST_CASE("construction parameter validation") {
  ConstructionParams p;
  p.m = 1;
  p.n = 1;
  CHECK_THROWS_AS(lemma_construction(ConstructionCase::path_union, p, default_config()),
                  input_error);
  ConstructionParams big;
  big.m = 99;
  big.n = 2;
  CHECK_THROWS_AS(lemma_construction(ConstructionCase::path_union, big, default_config()),
                  input_error);
  ConstructionParams noloop;
  noloop.m = 2;
  noloop.I = {2};
  noloop.J = {2};
  CHECK_THROWS_AS(lemma_construction(ConstructionCase::mixed_loop, noloop, default_config()),
                  input_error);
  ConstructionParams empty;
  empty.m = 2;
  CHECK_THROWS_AS(lemma_construction(ConstructionCase::mixed, empty, default_config()),
                  input_error);
}
