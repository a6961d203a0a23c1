#include "mseg/conditions.hpp"

#include <algorithm>
#include <functional>
#include <span>

#include "mseg/combinatorics.hpp"
#include "mseg/error.hpp"

namespace mseg {

namespace {

void require_support(const CoeffVector& lam, const PairSet& expected, const char* what) {
  if (lam.support != expected)
    throw Error(ErrorCode::SupportMismatch, std::string(what) + ": support differs from the X pair set");
  for (const auto& [k, v] : lam.values)
    if (!expected.contains(k))
      throw Error(ErrorCode::SupportMismatch, std::string(what) + ": key " + to_string(k) + " outside support");
}

// Index of the first segment of a contiguous line block in m.
std::size_t block_offset(const Multisegment& m, const std::string& line) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i].line() == line) return i;
  return m.size();
}

std::vector<std::string> union_lines(const Multisegment& a, const Multisegment& b) {
  auto la = lines(a);
  auto lb = lines(b);
  std::vector<std::string> out;
  std::set_union(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(out));
  return out;
}

CoeffVector make_coeffs(const PairSet& support, std::span<const std::uint64_t> values) {
  CoeffVector c;
  c.support = support;
  std::size_t k = 0;
  for (const auto& p : support) c.values[p] = mpz_class(std::to_string(values[k++]));
  return c;
}

struct BlockOutcome {
  bool holds = false;
  bool certified = false;
  int trials = 0;
  mpq_class bound = 0;
  std::vector<std::uint64_t> values;  // witness draws, key order
};

// Randomized full-row-rank test of build(values) for rows x cols matrices.
BlockOutcome run_trials(std::size_t rows, std::size_t cols, std::size_t nkeys,
                        const RankConfig& cfg,
                        const std::function<IntMatrix(std::span<const std::uint64_t>)>& build) {
  auto draw = [&](int trial) {
    CoeffStream stream(cfg.seed, static_cast<std::uint64_t>(trial));
    std::vector<std::uint64_t> v(nkeys);
    for (auto& x : v) x = stream.next_nonzero(cfg.prime);
    return v;
  };

  BlockOutcome out;
  if (rows == 0) {
    out.holds = true;
    out.certified = true;
    out.values = draw(1);
    return out;
  }
  if (rows > cols) {
    out.certified = true;  // pigeonhole
    return out;
  }
  for (int t = 1; t <= cfg.trials; ++t) {
    auto values = draw(t);
    const IntMatrix a = build(values);
    out.trials = t;
    if (rank_mod_p(a, cfg.prime) == rows) {
      out.holds = true;
      out.certified = cfg.certify && rank_exact(a) == rows;
      out.values = std::move(values);
      return out;
    }
  }
  mpq_class per_trial(mpz_class(static_cast<unsigned long>(rows)),
                      mpz_class(std::to_string(cfg.prime - 1)));
  per_trial.canonicalize();
  mpq_class bound = 1;
  for (int t = 0; t < cfg.trials; ++t) bound *= per_trial;
  out.bound = bound;
  return out;
}

// Conjunction of block outcomes into a verdict (witness filled by caller).
struct Accumulator {
  Verdict v;
  bool any_false = false;
  bool deterministic_false = false;

  Accumulator() {
    v.holds = true;
    v.certified = true;
  }

  void add(const BlockOutcome& b) {
    v.trials_run += b.trials;
    if (b.holds) {
      v.certified = v.certified && b.certified;
      return;
    }
    any_false = true;
    if (b.certified) deterministic_false = true;
    v.false_verdict_bound += b.bound;
  }

  Verdict finish() {
    if (!any_false) {
      v.false_verdict_bound = 0;
      return v;
    }
    v.holds = false;
    v.witness.reset();
    v.certified = deterministic_false;
    if (deterministic_false) v.false_verdict_bound = 0;
    return v;
  }
};

}  // namespace

IntMatrix gls_matrix(const Multisegment& m, const CoeffVector& lam) {
  const PairSet xs = pairset_x(m);
  const PairSet ys = pairset_y(m);
  require_support(lam, xs, "gls_matrix");
  const std::size_t n = m.size();
  IntMatrix a(xs.size(), ys.size());
  std::size_t row = 0;
  for (const auto& [i, j] : xs) {
    for (std::size_t k = 0; k < n; ++k)
      if (xs.contains({k, j}) && ys.contains({i, k})) a(row, ys.position({i, k})) += lam.at({k, j});
    for (std::size_t l = 0; l < n; ++l)
      if (ys.contains({l, j}) && xs.contains({i, l})) a(row, ys.position({l, j})) -= lam.at({i, l});
    ++row;
  }
  return a;
}

IntMatrix lc_matrix(const Multisegment& m, const Multisegment& m2, const CoeffVector& lam,
                    const CoeffVector& lam2) {
  const PairSet xm = pairset_x(m);
  const PairSet xm2 = pairset_x(m2);
  require_support(lam, xm, "lc_matrix (first)");
  require_support(lam2, xm2, "lc_matrix (second)");
  const PairSet xs = pairset_x_cross(m, m2);
  const PairSet ys = pairset_y_cross(m, m2);
  IntMatrix a(xs.size(), ys.size());
  std::size_t row = 0;
  for (const auto& [i, j] : xs) {
    for (std::size_t r = 0; r < m.size(); ++r)
      if (xm.contains({i, r}) && ys.contains({r, j})) a(row, ys.position({r, j})) += lam.at({i, r});
    for (std::size_t s = 0; s < m2.size(); ++s)
      if (xm2.contains({s, j}) && ys.contains({i, s})) a(row, ys.position({i, s})) -= lam2.at({s, j});
    ++row;
  }
  return a;
}

Verdict check_gls(const Multisegment& m, const RankConfig& cfg) {
  cfg.validate();
  Accumulator acc;
  std::map<IndexPair, mpz_class> witness;
  for (const auto& line : lines(m)) {
    const Multisegment block = restrict_to_line(m, line);
    const std::size_t off = block_offset(m, line);
    const PairSet xs = pairset_x(block);
    const std::size_t cols = pairset_y(block).size();
    auto out = run_trials(xs.size(), cols, xs.size(), cfg, [&](std::span<const std::uint64_t> v) {
      return gls_matrix(block, make_coeffs(xs, v));
    });
    acc.add(out);
    if (!out.holds) break;
    std::size_t k = 0;
    for (const auto& p : xs)
      witness[{p.first + off, p.second + off}] = mpz_class(std::to_string(out.values[k++]));
  }
  Verdict v = acc.finish();
  if (v.holds) v.witness = Witness{CoeffVector{pairset_x(m), std::move(witness)}, std::nullopt};
  return v;
}

Verdict check_lc(const Multisegment& m, const Multisegment& m2, const RankConfig& cfg) {
  cfg.validate();
  Accumulator acc;
  std::map<IndexPair, mpz_class> w1, w2;
  for (const auto& line : union_lines(m, m2)) {
    const Multisegment b1 = restrict_to_line(m, line);
    const Multisegment b2 = restrict_to_line(m2, line);
    const std::size_t off1 = block_offset(m, line);
    const std::size_t off2 = block_offset(m2, line);
    const PairSet x1 = pairset_x(b1);
    const PairSet x2 = pairset_x(b2);
    const std::size_t rows = pairset_x_cross(b1, b2).size();
    const std::size_t cols = pairset_y_cross(b1, b2).size();
    auto out = run_trials(rows, cols, x1.size() + x2.size(), cfg,
                          [&](std::span<const std::uint64_t> v) {
                            return lc_matrix(b1, b2, make_coeffs(x1, v.first(x1.size())),
                                             make_coeffs(x2, v.subspan(x1.size())));
                          });
    acc.add(out);
    if (!out.holds) break;
    std::size_t k = 0;
    for (const auto& p : x1)
      w1[{p.first + off1, p.second + off1}] = mpz_class(std::to_string(out.values[k++]));
    for (const auto& p : x2)
      w2[{p.first + off2, p.second + off2}] = mpz_class(std::to_string(out.values[k++]));
  }
  Verdict v = acc.finish();
  if (v.holds)
    v.witness = Witness{CoeffVector{pairset_x(m), std::move(w1)},
                        CoeffVector{pairset_x(m2), std::move(w2)}};
  return v;
}

Verdict check_ig(const Multisegment& m, const Multisegment& m2, const RankConfig& cfg) {
  Verdict fwd = check_lc(m, m2, cfg);
  Verdict bwd = check_lc(m2, m, cfg);
  Verdict v;
  v.holds = fwd.holds && bwd.holds;
  v.trials_run = fwd.trials_run + bwd.trials_run;
  if (v.holds) {
    v.certified = fwd.certified && bwd.certified;
    v.witness = std::move(fwd.witness);
    v.converse_witness = std::move(bwd.witness);
    return v;
  }
  // Certainly false if either failing side is deterministic.
  const bool fwd_sure = !fwd.holds && fwd.certified;
  const bool bwd_sure = !bwd.holds && bwd.certified;
  v.certified = fwd_sure || bwd_sure;
  if (!v.certified) {
    if (!fwd.holds) v.false_verdict_bound += fwd.false_verdict_bound;
    if (!bwd.holds) v.false_verdict_bound += bwd.false_verdict_bound;
  }
  return v;
}

Verdict li_for_good(const Multisegment& m, const Multisegment& m2, const RankConfig& cfg) {
  if (!is_ladder(m) && !is_ladder(m2))
    throw Error(ErrorCode::NotApplicable, "LI is decided only when one side is a ladder");
  // For a ladder m2, LI(m,m2) <=> LI(m2v, mv) <=> LC(m2v, mv) <=> LC(m,m2).
  return check_lc(m, m2, cfg);
}

}  // namespace mseg
