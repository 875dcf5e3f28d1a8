#include <doctest.h>

#include "oracles.hpp"
#include "tpcells/error.hpp"
#include "tpcells/suites.hpp"

using namespace tpcells;

TEST_CASE("every suite passes on A2") {
  const auto a2 = CartanData::make('A', 2);
  const auto results = run_suites("all", a2, {{1}, {2}}, 1);
  CHECK(results.size() >= suite_names().size());
  for (const auto& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("non-applicable suites skip") {
  const auto g2 = CartanData::make('G', 2);
  const auto r = suite_braid(g2, 1, 0);
  CHECK_FALSE(r.applicable);
  CHECK(r.pass);
  CHECK(r.detail.rfind("skipped", 0) == 0);
}

TEST_CASE("unknown suite") {
  CHECK_THROWS_AS(run_suites("nope", CartanData::make('A', 2), {}, 1), InputError);
}

TEST_CASE("census oracles agree with a brute-force count") {
  for (int n = 2; n <= 4; ++n) {
    std::size_t pairs = 0;
    const auto perms = oracle::all_perms(n);
    for (const auto& w : perms)
      for (const auto& v : perms) pairs += oracle::bruhat_leq(v, w);
    std::size_t total = 0;
    for (auto c : oracle_full_census(n)) total += c;
    CHECK(total == pairs);
  }
  CHECK(oracle_full_census(3) == std::vector<std::size_t>{6, 8, 4, 1});
  CHECK(oracle_qj_census(3, {2}) == std::vector<std::size_t>{3, 3, 1});
}
