#include "doctest.h"
#include "pseudoroots/errors.hpp"
#include "pseudoroots/verify.hpp"

using namespace pseudoroots;

TEST_CASE("every suite passes on a small configuration") {
  verify::Options opt;
  opt.seed = 7;
  opt.cases = 2;
  for (const auto& s : verify::suites()) {
    CAPTURE(s.name);
    const auto r = s.run(opt);
    CHECK(r.passed);
    CHECK(r.suite == s.name);
    CHECK_FALSE(r.counterexample.has_value());
  }
}

TEST_CASE("suites are deterministic in the seed") {
  verify::Options opt;
  opt.seed = 3;
  opt.cases = 3;
  for (const char* name : {"derive", "two-oracle", "diamond-ops"}) {
    const auto* s = verify::find_suite(name);
    REQUIRE(s != nullptr);
    CHECK(verify::to_json(s->run(opt)).dump() == verify::to_json(s->run(opt)).dump());
  }
}

TEST_CASE("census numbers on the square") {
  verify::Options opt;
  opt.n = 2;
  const auto r = verify::find_suite("census")->run(opt);
  CHECK(r.summary["per_n"]["2"]["subsets"] == 6);
  CHECK(r.summary["per_n"]["2"]["sufficient"] == 4);
  CHECK(r.summary["per_n"]["2"]["table"].size() == 6);
}

TEST_CASE("unknown suites and bad bounds") {
  CHECK(verify::find_suite("nope") == nullptr);
  verify::Options opt;
  opt.n = 9;
  CHECK_THROWS_AS(verify::find_suite("census")->run(opt), InputError);
}

TEST_CASE("failures carry a counterexample") {
  verify::Result r;
  r.fail("first");
  r.fail("second");
  CHECK_FALSE(r.passed);
  CHECK(r.counterexample == "first");
  CHECK(r.findings.size() == 2);
}
