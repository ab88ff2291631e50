#include <set>

#include "doctest.h"
#include "flatsr/flatsr.hpp"

using namespace flatsr;

TEST_CASE("suite roster is stable") {
  auto names = list_suites();
  CHECK(names == std::vector<std::string>{"s7-sanity", "cycle-grid", "si-enum", "small-isos",
                                          "nilpotent-chain", "constructions", "vn-generator",
                                          "vi-distinct", "x2x3", "acyclic-chain", "acyclic-bases"});
  CHECK_THROWS_AS(run_suite("nope"), input_error);
}

TEST_CASE("every suite passes and is well formed") {
  for (const auto& name : list_suites()) {
    CAPTURE(name);
    auto r = run_suite(name);
    CHECK(r.name == name);
    CHECK(!r.checks.empty());
    CHECK(r.elapsed_ms >= 0.0);
    std::set<std::string> ids;
    for (const auto& c : r.checks) {
      CAPTURE(c.id);
      CHECK(!c.id.empty());
      CHECK(!c.anchor.empty());
      CHECK(c.pass);
      ids.insert(c.id);
    }
    CHECK(ids.size() == r.checks.size());
    CHECK(r.passed() == static_cast<int>(r.checks.size()));
    CHECK(r.failed() == 0);
    CHECK(r.pass());
  }
}

TEST_CASE("suite shapes") {
  CHECK(run_suite("cycle-grid").checks.size() == 35);
  CHECK(run_suite("constructions").checks.size() == 15);
  auto s = run_suite("s7-sanity");
  bool saw_scan = false;
  for (const auto& c : s.checks)
    if (c.id == "mutation-coverage") {
      saw_scan = true;
      CHECK(c.detail.find("33/36") != std::string::npos);
      CHECK(c.detail.find("mul[a][a]->1") != std::string::npos);
      CHECK(c.detail.find("mul[a][1]->inf") != std::string::npos);
      CHECK(c.detail.find("mul[1][a]->inf") != std::string::npos);
    }
  CHECK(saw_scan);
}

TEST_CASE("run_all covers the roster in order") {
  auto all = run_all();
  auto names = list_suites();
  REQUIRE(all.size() == names.size());
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].name == names[i]);
}
