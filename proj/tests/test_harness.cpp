#include <doctest.h>

#include <set>

#include "mseg/combinatorics.hpp"
#include "mseg/conditions.hpp"
#include "mseg/error.hpp"
#include "mseg/harness.hpp"
#include "mseg/notation.hpp"

using namespace mseg;

TEST_CASE("generators are deterministic and respect their parameters") {
  GenParams p;
  p.max_segments = 6;
  p.coord_range = 3;
  p.max_length = 2;
  p.lines = 3;
  p.seed = 99;
  std::set<std::string> labels;
  for (std::uint64_t k = 0; k < 500; ++k) {
    const Multisegment m = gen_ms(p, k);
    CHECK(m == gen_ms(p, k));
    CHECK(m.size() <= 6);
    for (const auto& d : m.segments()) {
      CHECK(d.begin() >= -3);
      CHECK(d.end() <= 3);
      CHECK(d.length() <= 2);
      labels.insert(d.line());
    }
  }
  CHECK(labels == std::set<std::string>{"0", "1", "2"});

  GenParams other = p;
  other.seed = 100;
  int differ = 0;
  for (std::uint64_t k = 0; k < 50; ++k) differ += gen_ms(p, k) != gen_ms(other, k);
  CHECK(differ > 25);
}

TEST_CASE("generator edge cases") {
  GenParams p;
  p.max_segments = 0;
  CHECK(gen_ms(p, 0).empty());
  CHECK(gen_ladder(p, 0).empty());
  p.max_segments = 3;
  p.coord_range = 0;
  for (std::uint64_t k = 0; k < 20; ++k) {
    const Multisegment m = gen_ms(p, k);
    for (const auto& d : m.segments()) CHECK(d == Segment(0, 0));
  }
  p.lines = 0;
  CHECK_THROWS_AS(gen_ms(p, 0), Error);
}

TEST_CASE("generated ladders are ladders") {
  GenParams p;
  p.max_segments = 8;
  p.coord_range = 10;
  std::size_t longest = 0;
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const Multisegment m = gen_ladder(p, k);
    CHECK(is_ladder(m));
    CHECK_FALSE(m.empty());
    longest = std::max(longest, m.size());
  }
  CHECK(longest == 8);
}

TEST_CASE("Rng uniform stays in range") {
  Rng rng(1, 2);
  for (int t = 0; t < 10000; ++t) {
    const auto v = rng.uniform(-3, 4);
    CHECK(v >= -3);
    CHECK(v <= 4);
  }
  CHECK(rng.uniform(5, 5) == 5);
}

TEST_CASE("reduction step compatibility on hand examples") {
  // m = [0,0], m2 = [1,1]: LC(m,m2) fails; the step removes [1,1] from m2
  // but takes [0,1] from the sum, so the reductions are incompatible.
  const Multisegment m{Segment(0, 0)}, m2{Segment(1, 1)};
  RankConfig cfg;
  CHECK_FALSE(check_lc(m, m2, cfg).holds);
  CHECK(mw_step(ms_add(m, m2)).reduced != ms_add(m, mw_step(m2).reduced));
  // m = [0,2], m2 = [1,3]+[0,2]: compatible and LC holds.
  const Multisegment a{Segment(0, 2)}, b{Segment(1, 3), Segment(0, 2)};
  CHECK(check_lc(a, b, cfg).holds);
  CHECK(check_lc(a, mw_step(b).reduced, cfg).holds);
  CHECK(mw_step(ms_add(a, b)).reduced == ms_add(a, mw_step(b).reduced));
}

TEST_CASE("every suite passes a small run") {
  GenParams p;
  RankConfig cfg;
  cfg.certify = true;
  SuiteLimits lim{40, 20000};
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const auto reports = run_suite(name, p, cfg, lim);
    REQUIRE_FALSE(reports.empty());
    for (const auto& r : reports) {
      CAPTURE(r.name);
      CHECK(r.passed());
      CHECK(r.hypothesis_satisfied >= lim.target);
      CHECK(r.instances_generated >= r.hypothesis_satisfied);
      for (const auto& v : r.violations) MESSAGE(v.detail);
    }
  }
}

TEST_CASE("suite runs are reproducible") {
  GenParams p;
  p.seed = 5;
  RankConfig cfg;
  SuiteLimits lim{30, 5000};
  const auto a = prop_3ms(p, cfg, lim), b = prop_3ms(p, cfg, lim);
  CHECK(a.instances_generated == b.instances_generated);
  CHECK(a.hypothesis_satisfied == b.hypothesis_satisfied);
  CHECK(a.false_verdict_bound == b.false_verdict_bound);
}

TEST_CASE("attempt cap stops generation") {
  GenParams p;
  RankConfig cfg;
  const auto r = prop_sumofseg_geom(p, cfg, SuiteLimits{1000000, 50});
  CHECK(r.instances_generated == 50);
  CHECK(r.hypothesis_satisfied < 1000000);
}

TEST_CASE("invariance bundles report separately") {
  GenParams p;
  RankConfig cfg;
  const auto reps = suite_invariances(p, cfg, SuiteLimits{20, 5000});
  std::set<std::string> names;
  for (const auto& r : reps) names.insert(r.name);
  CHECK(names.size() == reps.size());
  CHECK(names.count("mw_involution") == 1);
  CHECK(names.count("matching_oracle") == 1);
  CHECK_THROWS_AS(run_suite("no_such_suite", p, cfg), std::out_of_range);
}
