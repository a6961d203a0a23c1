#include <doctest.h>

#include "mseg/combinatorics.hpp"
#include "mseg/conditions.hpp"
#include "mseg/error.hpp"
#include "mseg/harness.hpp"
#include "mseg/notation.hpp"
#include "oracles.hpp"

using namespace mseg;

namespace {

IndexPair P(std::size_t i, std::size_t j) { return {i - 1, j - 1}; }

CoeffVector coeffs(const PairSet& support, std::map<IndexPair, long> values) {
  CoeffVector c;
  c.support = support;
  for (const auto& [k, v] : values) c.values[k] = v;
  return c;
}

const Multisegment kFourSeg = parse_mseg("[1,2]+[-1,1]+[0,0]+[-2,-1]");

mpq_class pow_bound(std::size_t rows, const RankConfig& cfg) {
  mpq_class q(mpz_class(static_cast<unsigned long>(rows)), mpz_class(std::to_string(cfg.prime - 1)));
  q.canonicalize();
  mpq_class out = 1;
  for (int t = 0; t < cfg.trials; ++t) out *= q;
  return out;
}

}  // namespace

TEST_CASE("GLS matrix of [1,2]+[0,1]") {
  const Multisegment m{Segment(1, 2), Segment(0, 1)};
  const PairSet xs = pairset_x(m);
  // columns in pair order: (1,1), (2,1), (2,2)
  const IntMatrix a = gls_matrix(m, coeffs(xs, {{P(2, 1), 1}}));
  REQUIRE(a.rows() == 1);
  REQUIRE(a.cols() == 3);
  const PairSet ys = pairset_y(m);
  CHECK(a(0, ys.position(P(1, 1))) == -1);
  CHECK(a(0, ys.position(P(2, 2))) == 1);
  CHECK(a(0, ys.position(P(2, 1))) == 0);

  const IntMatrix z = gls_matrix(m, coeffs(xs, {}));
  CHECK(z == IntMatrix(1, 3));

  const Multisegment single{Segment(0, 4)};
  const IntMatrix s = gls_matrix(single, coeffs(PairSet{}, {}));
  CHECK(s.rows() == 0);
  CHECK(s.cols() == 1);
}

TEST_CASE("GLS matrix agrees with the formula oracle") {
  GenParams p;
  p.max_segments = 6;
  Rng rng(3, 3);
  for (std::uint64_t k = 0; k < 300; ++k) {
    const Multisegment m = gen_ms(p, k);
    const PairSet xs = pairset_x(m);
    std::map<IndexPair, long> lam;
    for (const auto& q : xs) lam[q] = static_cast<long>(rng.uniform(-20, 20));
    const IntMatrix a = gls_matrix(m, coeffs(xs, lam));
    const IntMatrix b = oracle::gls_rows(m, lam);
    CHECK(a == b);
  }
}

TEST_CASE("support is enforced") {
  const Multisegment m{Segment(1, 2), Segment(0, 1)};
  CHECK_THROWS_AS(gls_matrix(m, coeffs(PairSet{}, {})), Error);
  CHECK_THROWS_AS(gls_matrix(m, coeffs(pairset_x(m), {{P(1, 2), 3}})), Error);
  try {
    lc_matrix(m, m, coeffs(pairset_x(m), {}), coeffs(PairSet{}, {}));
    FAIL("expected SupportMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SupportMismatch);
  }
}

TEST_CASE("LC matrices") {
  const Multisegment a{Segment(0, 0)}, b{Segment(1, 1)};
  const IntMatrix m1 = lc_matrix(a, b, coeffs({}, {}), coeffs({}, {}));
  CHECK(m1.rows() == 1);
  CHECK(m1.cols() == 0);
  const IntMatrix m2 = lc_matrix(a, Multisegment{Segment(5, 5)}, coeffs({}, {}), coeffs({}, {}));
  CHECK(m2.rows() == 0);
  CHECK(m2.cols() == 0);
  const IntMatrix ml = lc_matrix(kFourSeg, kFourSeg, coeffs(pairset_x(kFourSeg), {}),
                                 coeffs(pairset_x(kFourSeg), {}));
  CHECK(ml.rows() == pairset_x(kFourSeg).size());
}

TEST_CASE("the cross family on the diagonal is the negated GLS family") {
  // Taken literally, the two defining double sums differ by an overall sign.
  GenParams p;
  p.max_segments = 6;
  Rng rng(9, 9);
  for (std::uint64_t k = 0; k < 200; ++k) {
    const Multisegment m = gen_ms(p, k);
    const PairSet xs = pairset_x(m);
    std::map<IndexPair, long> lam;
    for (const auto& q : xs) lam[q] = static_cast<long>(rng.uniform(-9, 9));
    const IntMatrix g = gls_matrix(m, coeffs(xs, lam));
    const IntMatrix c = lc_matrix(m, m, coeffs(xs, lam), coeffs(xs, lam));
    REQUIRE(g.rows() == c.rows());
    REQUIRE(g.cols() == c.cols());
    for (std::size_t r = 0; r < g.rows(); ++r)
      for (std::size_t col = 0; col < g.cols(); ++col) CHECK(c(r, col) == -g(r, col));
  }
}

TEST_CASE("GLS verdicts") {
  RankConfig cfg;
  const Verdict lec = check_gls(kFourSeg, cfg);
  CHECK_FALSE(lec.holds);
  CHECK_FALSE(lec.witness.has_value());
  CHECK(lec.trials_run == cfg.trials);
  CHECK(lec.false_verdict_bound == pow_bound(pairset_x(kFourSeg).size(), cfg));

  const Verdict lad = check_gls(Multisegment{Segment(1, 2), Segment(0, 1)}, cfg);
  CHECK(lad.holds);
  REQUIRE(lad.witness.has_value());
  CHECK(lad.witness->lam.support == PairSet{P(2, 1)});
  CHECK(lad.false_verdict_bound == 0);

  const Verdict zero = check_gls(Multisegment{}, cfg);
  CHECK(zero.holds);
  CHECK(zero.trials_run == 0);
  CHECK(check_gls(Multisegment{Segment(3, 7)}, cfg).holds);
}

TEST_CASE("LC, IG and LI verdicts") {
  RankConfig cfg;
  const Multisegment a{Segment(0, 0)}, b{Segment(1, 1)};
  const Verdict ab = check_lc(a, b, cfg);
  CHECK_FALSE(ab.holds);
  CHECK(ab.certified);  // more rows than columns
  CHECK(ab.false_verdict_bound == 0);
  CHECK(check_lc(b, a, cfg).holds);

  const Verdict lec = check_lc(kFourSeg, kFourSeg, cfg);
  CHECK(lec.holds);
  REQUIRE(lec.witness.has_value());
  REQUIRE(lec.witness->lam2.has_value());
  CHECK(lec.witness->lam.support == pairset_x(kFourSeg));

  CHECK_FALSE(check_ig(a, b, cfg).holds);
  const Verdict far = check_ig(Multisegment{Segment(1, 2)}, Multisegment{Segment(5, 6)}, cfg);
  CHECK(far.holds);
  CHECK(far.converse_witness.has_value());

  CHECK(li_for_good(Multisegment{Segment(1, 2)}, Multisegment{Segment(0, 1)}, cfg).holds);
  CHECK_FALSE(li_for_good(a, b, cfg).holds);
  const Multisegment not_ladder{Segment(0, 1), Segment(0, 2)};
  try {
    li_for_good(not_ladder, not_ladder, cfg);
    FAIL("expected NotApplicable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotApplicable);
  }
}

TEST_CASE("IG is the conjunction of the two LC verdicts") {
  GenParams p;
  p.max_segments = 4;
  RankConfig cfg;
  for (std::uint64_t k = 0; k < 200; ++k) {
    const Multisegment m = gen_ladder(p, 2 * k), m2 = gen_ladder(p, 2 * k + 1);
    CHECK(check_ig(m, m2, cfg).holds == (check_lc(m, m2, cfg).holds && check_lc(m2, m, cfg).holds));
  }
}

TEST_CASE("five- and six-segment examples fail LC(m,m)") {
  RankConfig cfg;
  CHECK_FALSE(check_lc(parse_mseg("[1,3]+[-2,2]+[-1,1]+[0,0]+[-3,-1]"),
                       parse_mseg("[1,3]+[-2,2]+[-1,1]+[0,0]+[-3,-1]"), cfg).holds);
  CHECK_FALSE(check_lc(parse_mseg("[2,4]+[-2,3]+[-1,2]+[0,1]+[-4,0]+[-3,-1]"),
                       parse_mseg("[2,4]+[-2,3]+[-1,2]+[0,1]+[-4,0]+[-3,-1]"), cfg).holds);
}

TEST_CASE("certified witnesses have full exact rank") {
  GenParams p;
  p.max_segments = 6;
  p.lines = 2;
  RankConfig cfg;
  cfg.certify = true;
  int seen = 0;
  for (std::uint64_t k = 0; k < 200; ++k) {
    const Multisegment m = gen_ms(p, 2 * k), m2 = gen_ms(p, 2 * k + 1);
    const Verdict g = check_gls(m, cfg);
    if (g.holds) {
      CHECK(g.certified);
      REQUIRE(g.witness.has_value());
      CHECK(g.witness->lam.support == pairset_x(m));
      const IntMatrix a = gls_matrix(m, g.witness->lam);
      CHECK(oracle::rank_q(a) == a.rows());
      ++seen;
    } else if (!g.certified) {
      CHECK(g.false_verdict_bound > 0);
      CHECK(g.false_verdict_bound <= pow_bound(pairset_x(m).size(), cfg));
    }
    const Verdict l = check_lc(m, m2, cfg);
    if (l.holds) {
      CHECK(l.certified);
      REQUIRE(l.witness.has_value());
      const IntMatrix a = lc_matrix(m, m2, l.witness->lam, *l.witness->lam2);
      CHECK(oracle::rank_q(a) == a.rows());
    }
  }
  CHECK(seen > 50);
}

TEST_CASE("verdicts are deterministic and split by line") {
  RankConfig cfg;
  cfg.seed = 17;
  const Multisegment m = parse_mseg("a:[1,2]+a:[0,1]+b:[1,2]+b:[-1,1]+b:[0,0]+b:[-2,-1]");
  const Verdict v1 = check_gls(m, cfg), v2 = check_gls(m, cfg);
  CHECK(v1 == v2);
  CHECK_FALSE(v1.holds);  // the b block fails GLS
  const Multisegment ok = parse_mseg("a:[1,2]+a:[0,1]+b:[3,4]+b:[2,3]");
  const Verdict v3 = check_gls(ok, cfg);
  CHECK(v3.holds);
  REQUIRE(v3.witness.has_value());
  CHECK(v3.witness->lam.values.size() == 2);
}

TEST_CASE("invalid configuration is rejected") {
  RankConfig cfg;
  cfg.prime = 12;
  CHECK_THROWS_AS(check_gls(Multisegment{}, cfg), Error);
  cfg.prime = kMersenne61;
  cfg.trials = -1;
  CHECK_THROWS_AS(check_lc(Multisegment{}, Multisegment{}, cfg), Error);
}
