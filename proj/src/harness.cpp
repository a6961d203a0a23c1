#include "mseg/harness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "mseg/combinatorics.hpp"
#include "mseg/conditions.hpp"
#include "mseg/error.hpp"
#include "mseg/notation.hpp"

namespace mseg {

void GenParams::validate() const {
  if (max_segments < 0) throw Error(ErrorCode::InvalidConfig, "max_segments must be >= 0");
  if (coord_range < 0) throw Error(ErrorCode::InvalidConfig, "coord_range must be >= 0");
  if (max_length < 1) throw Error(ErrorCode::InvalidConfig, "max_length must be >= 1");
  if (lines < 1) throw Error(ErrorCode::InvalidConfig, "lines must be >= 1");
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : state_(splitmix64_mix(seed) ^ splitmix64_mix(stream + 0xD1B54A32D192ED03ull)) {}

std::uint64_t Rng::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  return splitmix64_mix(state_);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  return lo + static_cast<std::int64_t>(next() % span);
}

namespace {

std::string pick_line(const GenParams& p, Rng& rng) {
  return p.lines <= 1 ? kDefaultLine : std::to_string(rng.uniform(0, p.lines - 1));
}

Segment random_segment(Rng& rng, const std::string& line, Coord lo, Coord hi, Coord max_len) {
  const Coord b = rng.uniform(lo, hi);
  const Coord e = rng.uniform(b, std::min(hi, b + max_len - 1));
  return Segment(line, b, e);
}

Multisegment random_block(const GenParams& p, Rng& rng, Coord lo, Coord hi) {
  const auto n = rng.uniform(0, p.max_segments);
  std::vector<Segment> segs;
  for (std::int64_t k = 0; k < n; ++k)
    segs.push_back(random_segment(rng, kDefaultLine, lo, hi, p.max_length));
  return Multisegment(std::move(segs));
}

}  // namespace

Multisegment gen_ms(const GenParams& p, Rng& rng) {
  p.validate();
  const auto n = rng.uniform(0, p.max_segments);
  std::vector<Segment> segs;
  for (std::int64_t k = 0; k < n; ++k) {
    const std::string line = pick_line(p, rng);
    segs.push_back(random_segment(rng, line, -p.coord_range, p.coord_range, p.max_length));
  }
  return Multisegment(std::move(segs));
}

Multisegment gen_ladder(const GenParams& p, Rng& rng) {
  p.validate();
  if (p.max_segments == 0) return {};
  const auto n = rng.uniform(1, p.max_segments);
  const std::string line = pick_line(p, rng);
  const Coord R = p.coord_range;
  std::vector<Segment> segs{random_segment(rng, line, -R, R, p.max_length)};
  while (static_cast<std::int64_t>(segs.size()) < n) {
    const Segment& last = segs.back();
    if (last.end() >= R) break;
    // b' in [b+1, e+1], e' in [e+1, b'+len-1] gives last < next.
    const Coord b = rng.uniform(last.begin() + 1, last.end() + 1);
    const Coord e = rng.uniform(last.end() + 1, std::min(R, b + p.max_length - 1));
    segs.emplace_back(line, b, e);
  }
  return Multisegment(std::move(segs));
}

Multisegment gen_ms(const GenParams& p, std::uint64_t index) {
  Rng rng(p.seed, index);
  return gen_ms(p, rng);
}

Multisegment gen_ladder(const GenParams& p, std::uint64_t index) {
  Rng rng(p.seed, index);
  return gen_ladder(p, rng);
}

namespace {

// Per-instance bookkeeping around verdict calls.
class Recorder {
 public:
  Recorder(PropertyReport& rep, const RankConfig& cfg) : rep_(rep), cfg_(cfg) {}

  void begin_instance() { uncertain_ = false; }

  bool gls(const Multisegment& m) { return note(check_gls(m, cfg_), {m}, "GLS"); }
  bool lc(const Multisegment& m, const Multisegment& m2) {
    return note(check_lc(m, m2, cfg_), {m, m2}, "LC");
  }

  void violation(std::vector<Multisegment> inputs, std::string detail) {
    rep_.violations.push_back({std::move(inputs), std::move(detail), uncertain_});
  }

 private:
  bool note(const Verdict& v, std::vector<Multisegment> inputs, const char* what) {
    if (!v.holds && !v.certified) {
      uncertain_ = true;
      rep_.false_verdict_bound += v.false_verdict_bound;
    }
    if (v.holds) ++rep_.true_verdicts;
    // With certify on, a modular witness the exact rank rejects is a defect.
    if (cfg_.certify && v.holds && !v.certified) {
      ++rep_.exact_disagreements;
      rep_.violations.push_back({std::move(inputs),
                                 std::string(what) + ": exact rank disagrees with modular rank",
                                 false});
    }
    return v.holds;
  }

  PropertyReport& rep_;
  const RankConfig& cfg_;
  bool uncertain_ = false;
};

// Runs body(rng, rec) per instance; body returns whether the hypothesis held.
PropertyReport run_property(const std::string& name, const GenParams& p, const RankConfig& cfg,
                            SuiteLimits lim,
                            const std::function<bool(Rng&, Recorder&)>& body,
                            const std::function<bool()>& done = {}) {
  p.validate();
  cfg.validate();
  PropertyReport rep;
  rep.name = name;
  rep.cfg = cfg;
  Recorder rec(rep, cfg);
  auto finished = [&] { return done ? done() : rep.hypothesis_satisfied >= lim.target; };
  for (std::uint64_t k = 0; !finished() && k < lim.max_attempts; ++k) {
    Rng rng(p.seed, k);
    rec.begin_instance();
    ++rep.instances_generated;
    if (body(rng, rec)) ++rep.hypothesis_satisfied;
  }
  return rep;
}

CuspidalPoint point_in_support(const Multisegment& m, Rng& rng) {
  const Segment& d = m[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(m.size()) - 1))];
  return {d.line(), rng.uniform(d.begin(), d.end())};
}

GenParams single_line_params(GenParams p) {
  p.lines = 1;
  return p;
}

}  // namespace

PropertyReport prop_mm_minus(const GenParams& p0, const RankConfig& cfg, SuiteLimits lim) {
  const GenParams p = single_line_params(p0);
  return run_property("mm_minus", p, cfg, lim, [&](Rng& rng, Recorder& rec) {
    const Multisegment m = gen_ms(p, rng);
    const Multisegment m2 = gen_ms(p, rng);
    if (m.empty() || m2.empty() || !(max_end(m) < max_end(m2))) return false;
    const Multisegment m2r = mw_step(m2).reduced;
    const bool lhs = rec.lc(m, m2);
    const bool lc_reduced = rec.lc(m, m2r);
    const bool same = mw_step(ms_add(m, m2)).reduced == ms_add(m, m2r);
    if (lhs != (lc_reduced && same))
      rec.violation({m, m2}, "LC(m,m2)=" + std::to_string(lhs) + " but LC(m,m2^-)=" +
                                 std::to_string(lc_reduced) +
                                 ", reduction compatible=" + std::to_string(same));
    return true;
  });
}

PropertyReport prop_splitdisj(const GenParams& p, const RankConfig& cfg, SuiteLimits lim) {
  const Coord R = std::max<Coord>(p.coord_range, 2);
  return run_property("splitdisj", p, cfg, lim, [&](Rng& rng, Recorder& rec) {
    const Multisegment m1 = random_block(p, rng, -R, -2);
    const Multisegment m1b = random_block(p, rng, -R, -2);
    const Multisegment m2 = random_block(p, rng, 2, R);
    const Multisegment m2b = random_block(p, rng, 2, R);
    if (!rec.lc(ms_add(m1, m2), ms_add(m1b, m2b))) return false;
    const bool low = rec.lc(m1, m1b);
    const bool high = rec.lc(m2, m2b);
    if (!low || !high)
      rec.violation({m1, m2, m1b, m2b}, "LC of the sums holds but a block fails (low=" +
                                            std::to_string(low) + ", high=" +
                                            std::to_string(high) + ")");
    return true;
  });
}

PropertyReport prop_gedelta(const GenParams& p, const RankConfig& cfg, SuiteLimits lim) {
  return run_property("gedelta", p, cfg, lim, [&](Rng& rng, Recorder& rec) {
    const Multisegment m = gen_ms(p, rng);
    const Multisegment m2 = gen_ms(p, rng);
    const Segment d = random_segment(rng, pick_line(p, rng), -p.coord_range, p.coord_range,
                                     2 * p.coord_range + 1);
    if (!rec.lc(m, m2)) return false;
    const std::pair<Filter, const char*> filters[] = {
        {Filter::GeSeg, ">="}, {Filter::EndIn, "end in"}, {Filter::BeginIn, "begin in"}};
    for (const auto& [f, label] : filters) {
      if (!rec.lc(ms_filter(m, f, d), ms_filter(m2, f, d)))
        rec.violation({m, m2, Multisegment{d}},
                      std::string("LC fails after the '") + label + "' filter by " + format(d));
    }
    return true;
  });
}

PropertyReport prop_3ms(const GenParams& p, const RankConfig& cfg, SuiteLimits lim) {
  std::map<int, std::size_t> counts{{2, 0}, {3, 0}, {4, 0}, {5, 0}};
  auto least = [&] {
    std::size_t lo = counts.begin()->second;
    for (const auto& [part, c] : counts) lo = std::min(lo, c);
    return lo;
  };
  PropertyReport rep = run_property(
      "3ms", p, cfg, lim,
      [&](Rng& rng, Recorder& rec) {
        const Multisegment m = gen_ms(p, rng);
        const Multisegment m1 = gen_ms(p, rng);
        const Multisegment n = gen_ms(p, rng);
        const Multisegment mm1 = ms_add(m, m1);
        const bool a = rec.lc(m, m1);
        const bool a_rev = rec.lc(m1, m);
        const bool sum_n = rec.lc(mm1, n);
        const bool m_n = rec.lc(m, n);
        const bool m1_n = rec.lc(m1, n);
        const bool m_m1n = rec.lc(m, ms_add(m1, n));
        bool any = false;
        auto part = [&](int k, bool hyp, bool concl, const char* what) {
          if (!hyp) return;
          any = true;
          ++counts[k];
          if (!concl) rec.violation({m, m1, n}, "part " + std::to_string(k) + ": " + what);
        };
        part(2, a && sum_n, m_m1n && m_n, "LC(m,m'+n) and LC(m,n) expected");
        part(3, a && m_n, m_m1n, "LC(m,m'+n) expected");
        part(4, m_n && m1_n, sum_n, "LC(m+m',n) expected");
        part(5, a && a_rev, sum_n == (m_n && m1_n), "LC(m+m',n) <=> LC(m,n) and LC(m',n) expected");
        return any;
      },
      [&] { return least() >= lim.target; });
  // Report the weakest part so the target applies to every part.
  rep.hypothesis_satisfied = least();
  return rep;
}

PropertyReport prop_sumofseg_geom(const GenParams& p, const RankConfig& cfg, SuiteLimits lim) {
  return run_property("sumofseg_geom", p, cfg, lim, [&](Rng& rng, Recorder& rec) {
    const Multisegment m = gen_ms(p, rng);
    const Multisegment m1 = gen_ms(p, rng);
    const Multisegment n = ms_add(m, m1);
    if (!rec.gls(m) || !rec.gls(m1) || !rec.lc(m, m1) || !rec.lc(n, m)) return false;
    if (!rec.gls(n)) rec.violation({m, m1}, "GLS(m+m') fails");
    return true;
  });
}

PropertyReport prop_rhoext_geom(const GenParams& p0, const RankConfig& cfg, SuiteLimits lim) {
  const GenParams p = single_line_params(p0);
  return run_property("rhoext_geom", p, cfg, lim, [&](Rng& rng, Recorder& rec) {
    const Multisegment m = gen_ms(p, rng);
    const Multisegment m2 = gen_ms(p, rng);
    if (m.empty()) return false;
    const CuspidalPoint rho = point_in_support(m, rng);
    if (derivative(m2, rho).mu != 0) return false;
    const Multisegment dm = derivative(m, rho).derived;
    const RhoFrontier fr = rho_frontier(m, m2, rho);
    const bool lhs = rec.lc(m, m2);
    const bool lc_derived = rec.lc(dm, m2);
    const bool balanced = fr.xt.size() == fr.yt.size();
    if (lhs != (lc_derived && balanced))
      rec.violation({m, m2}, "rho=" + format(rho) + ": LC(m,m2)=" + std::to_string(lhs) +
                                 ", LC(d m,m2)=" + std::to_string(lc_derived) + ", #X=" +
                                 std::to_string(fr.xt.size()) + ", #Y=" +
                                 std::to_string(fr.yt.size()));
    return true;
  });
}

PropertyReport prop_ladder_gls(const GenParams& p, const RankConfig& cfg, SuiteLimits lim) {
  return run_property("ladder_gls", p, cfg, lim, [&](Rng& rng, Recorder& rec) {
    const Multisegment m = gen_ladder(p, rng);
    if (!is_ladder(m)) {
      rec.violation({m}, "generator produced a non-ladder");
      return true;
    }
    if (!rec.gls(m)) rec.violation({m}, "GLS fails on a ladder");
    return true;
  });
}

namespace {

using Bundle = std::function<bool(const GenParams&, Rng&, Recorder&)>;

bool bundle_mw_involution(const GenParams& p, Rng& rng, Recorder& rec) {
  const Multisegment m = gen_ms(p, rng);
  const Multisegment md = mw_dual(m);
  if (mw_dual(md) != m) rec.violation({m}, "(m^#)^# = " + format(mw_dual(md)));
  if (supp(md) != supp(m)) rec.violation({m}, "supp(m^#) differs, m^# = " + format(md));
  return true;
}

bool bundle_mw_delta(const GenParams& p, Rng& rng, Recorder& rec) {
  const Multisegment m = gen_ms(p, rng);
  if (m.empty()) return false;
  const Segment delta = mw_step(m).delta;
  const CuspidalPoint top = max_end(m);
  std::optional<Segment> least;
  for (const auto& d : mw_dual(m))
    if (d.end_point() == top && (!least || d < *least)) least = d;
  if (!least || *least != delta)
    rec.violation({m}, "Delta(m) = " + format(delta) + " is not the least segment of m^# ending at max m");
  return true;
}

bool bundle_gls_involutions(const GenParams& p, Rng& rng, Recorder& rec) {
  const Multisegment m = gen_ms(p, rng);
  const bool g = rec.gls(m);
  const bool gd = rec.gls(ms_dual(m));
  const bool gs = rec.gls(mw_dual(m));
  if (g != gd || g != gs)
    rec.violation({m}, "GLS(m)=" + std::to_string(g) + ", GLS(dual)=" + std::to_string(gd) +
                           ", GLS(m^#)=" + std::to_string(gs));
  return true;
}

bool bundle_lc_dual_symmetry(const GenParams& p, Rng& rng, Recorder& rec) {
  const Multisegment m = gen_ms(p, rng);
  const Multisegment m2 = gen_ms(p, rng);
  const bool a = rec.lc(m, m2);
  const bool b = rec.lc(ms_dual(m2), ms_dual(m));
  if (a != b)
    rec.violation({m, m2}, "LC(m,m2)=" + std::to_string(a) + " but LC(m2v,mv)=" + std::to_string(b));
  return true;
}

bool bundle_gls_implies_lc(const GenParams& p, Rng& rng, Recorder& rec) {
  const Multisegment m = gen_ms(p, rng);
  if (!rec.gls(m)) return false;
  if (!rec.lc(m, m)) rec.violation({m}, "GLS(m) holds but LC(m,m) fails");
  return true;
}

bool bundle_pairset_decomposition(const GenParams& p, Rng& rng, Recorder& rec) {
  const Multisegment m = gen_ms(p, rng);
  const Multisegment m2 = gen_ms(p, rng);
  const Multisegment s = ms_add(m, m2);
  const auto nx = pairset_x(m).size() + pairset_x(m2).size() + pairset_x_cross(m, m2).size() +
                  pairset_x_cross(m2, m).size();
  const auto ny = pairset_y(m).size() + pairset_y(m2).size() + pairset_y_cross(m, m2).size() +
                  pairset_y_cross(m2, m).size();
  if (pairset_x(s).size() != nx) rec.violation({m, m2}, "X of the sum is not the disjoint union");
  if (pairset_y(s).size() != ny) rec.violation({m, m2}, "Y of the sum is not the disjoint union");
  return true;
}

bool bundle_mw_frontier(const GenParams& p0, Rng& rng, Recorder& rec) {
  const GenParams p = single_line_params(p0);
  const Multisegment m = gen_ms(p, rng);
  const Multisegment m2 = gen_ms(p, rng);
  if (m.empty() || m2.empty() || !(max_end(m) < max_end(m2))) return false;
  Frontier fr;
  try {
    fr = mw_frontier(m, m2);
  } catch (const std::logic_error& e) {
    rec.violation({m, m2}, e.what());
    return true;
  }
  const auto chain = leading_indices(m2);
  auto chain_pos = [&](std::size_t j) -> std::optional<std::size_t> {
    auto it = std::find(chain.begin(), chain.end(), j);
    if (it == chain.end()) return std::nullopt;
    return static_cast<std::size_t>(it - chain.begin());
  };
  // Explicit forms of the two frontier sets.
  std::vector<IndexPair> xs, ys;
  for (const auto& q : pairset_x_cross(m, m2))
    if (chain_pos(q.second) && m[q.first].end() == m2[q.second].end() - 1) xs.push_back(q);
  for (const auto& q : pairset_y_cross(m, m2)) {
    const auto pos = chain_pos(q.second);
    if (pos && *pos >= 1 && m[q.first].end() == m2[q.second].end()) ys.push_back(q);
  }
  if (PairSet(xs) != fr.xt) rec.violation({m, m2}, "X frontier differs from its explicit form");
  if (PairSet(ys) != fr.yt) rec.violation({m, m2}, "Y frontier differs from its explicit form");

  for (std::size_t k = 0; k < fr.f.size(); ++k) {
    if (!fr.xt.contains(fr.f[k].second)) rec.violation({m, m2}, "f leaves the X frontier");
    if (k > 0 && !(fr.f[k - 1].second < fr.f[k].second))
      rec.violation({m, m2}, "f is not strictly monotone");
  }
  const bool compatible = mw_step(ms_add(m, m2)).reduced == ms_add(m, mw_step(m2).reduced);
  if (fr.xt.size() <= fr.yt.size() && !fr.surjective)
    rec.violation({m, m2}, "f not surjective although #X <= #Y");
  if (fr.surjective != compatible)
    rec.violation({m, m2}, "f surjective=" + std::to_string(fr.surjective) +
                               " but reduction compatible=" + std::to_string(compatible));
  return true;
}

bool bundle_char_inequality(const GenParams& p, Rng& rng, Recorder& rec) {
  const Multisegment m = gen_ms(p, rng);
  const Multisegment m2 = gen_ms(p, rng);
  if (m.empty()) return false;
  const CuspidalPoint rho = point_in_support(m, rng);
  if (derivative(m2, rho).mu != 0) return false;
  const RhoFrontier fr = rho_frontier(m, m2, rho);
  if (fr.xt.size() < fr.yt.size())
    rec.violation({m, m2}, "rho=" + format(rho) + ": #X=" + std::to_string(fr.xt.size()) +
                               " < #Y=" + std::to_string(fr.yt.size()));
  return true;
}

bool bundle_soc_derivative(const GenParams& p, Rng& rng, Recorder& rec) {
  const Multisegment m = gen_ms(p, rng);
  if (m.empty()) return false;
  const CuspidalPoint rho = point_in_support(m, rng);
  const DerivativeResult d = derivative(m, rho);
  Multisegment back = d.derived;
  for (std::size_t k = 0; k < d.mu; ++k) back = soc_cuspidal(back, rho);
  if (back != m)
    rec.violation({m}, "rho=" + format(rho) + ": rebuilding from the derivative gives " + format(back));
  if (derivative(d.derived, rho).mu != 0)
    rec.violation({m}, "rho=" + format(rho) + ": derivative is not rho-reduced");
  return true;
}

bool bundle_diagonal_embedding(const GenParams& p, Rng& rng, Recorder& rec) {
  const Multisegment m = gen_ms(p, rng);
  CoeffVector lam;
  lam.support = pairset_x(m);
  for (const auto& q : lam.support) lam.values[q] = rng.uniform(-50, 50);
  const IntMatrix g = gls_matrix(m, lam);
  const IntMatrix c = lc_matrix(m, m, lam, lam);
  bool same = g.rows() == c.rows() && g.cols() == c.cols();
  for (std::size_t r = 0; same && r < g.rows(); ++r)
    for (std::size_t k = 0; same && k < g.cols(); ++k) same = c(r, k) == -g(r, k);
  if (!same) rec.violation({m}, "cross-condition rows do not mirror the GLS rows");
  return true;
}

bool bundle_matching_oracle(const GenParams& p, Rng& rng, Recorder& rec) {
  const Multisegment m = gen_ms(p, rng);
  if (m.empty()) return false;
  const CuspidalPoint rho = point_in_support(m, rng);
  const RhoSets rs = rho_sets(m, rho);
  if (rs.x.size() + rs.y.size() > 12) return false;
  const Matching best = best_matching(m, rho);
  if (!is_maximal_matching(m, rho, best)) rec.violation({m}, "rho=" + format(rho) + ": best matching not maximal");
  if (has_crossing(m, best)) rec.violation({m}, "rho=" + format(rho) + ": best matching has a crossing");
  const auto ref = segments_at(m, best.a_set);
  for (const auto& r : enumerate_maximal_matchings(m, rho)) {
    if (segments_at(m, r.a_set) != ref) {
      rec.violation({m}, "rho=" + format(rho) + ": maximal matchings disagree on A");
      break;
    }
  }
  return true;
}

const std::vector<std::pair<std::string, Bundle>>& bundles() {
  static const std::vector<std::pair<std::string, Bundle>> all = {
      {"mw_involution", bundle_mw_involution},
      {"mw_delta", bundle_mw_delta},
      {"gls_involutions", bundle_gls_involutions},
      {"lc_dual_symmetry", bundle_lc_dual_symmetry},
      {"gls_implies_lc", bundle_gls_implies_lc},
      {"pairset_decomposition", bundle_pairset_decomposition},
      {"mw_frontier", bundle_mw_frontier},
      {"char_inequality", bundle_char_inequality},
      {"soc_derivative", bundle_soc_derivative},
      {"diagonal_embedding", bundle_diagonal_embedding},
      {"matching_oracle", bundle_matching_oracle},
  };
  return all;
}

PropertyReport run_bundle(const std::string& name, const Bundle& b, const GenParams& p,
                          const RankConfig& cfg, SuiteLimits lim) {
  return run_property(name, p, cfg, lim, [&](Rng& rng, Recorder& rec) { return b(p, rng, rec); });
}

using SuiteFn = PropertyReport (*)(const GenParams&, const RankConfig&, SuiteLimits);

const std::vector<std::pair<std::string, SuiteFn>>& propositions() {
  static const std::vector<std::pair<std::string, SuiteFn>> all = {
      {"mm_minus", prop_mm_minus},         {"splitdisj", prop_splitdisj},
      {"gedelta", prop_gedelta},           {"3ms", prop_3ms},
      {"sumofseg_geom", prop_sumofseg_geom}, {"rhoext_geom", prop_rhoext_geom},
      {"ladder_gls", prop_ladder_gls},
  };
  return all;
}

}  // namespace

std::vector<PropertyReport> suite_invariances(const GenParams& p, const RankConfig& cfg,
                                              SuiteLimits lim) {
  std::vector<PropertyReport> out;
  for (const auto& [name, b] : bundles()) out.push_back(run_bundle(name, b, p, cfg, lim));
  return out;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : propositions()) out.push_back(name);
  out.push_back("invariances");
  for (const auto& [name, b] : bundles()) out.push_back(name);
  return out;
}

std::vector<PropertyReport> run_suite(const std::string& name, const GenParams& p,
                                      const RankConfig& cfg, SuiteLimits lim) {
  for (const auto& [n, fn] : propositions())
    if (n == name) return {fn(p, cfg, lim)};
  if (name == "invariances") return suite_invariances(p, cfg, lim);
  for (const auto& [n, b] : bundles())
    if (n == name) return {run_bundle(n, b, p, cfg, lim)};
  throw std::out_of_range("unknown suite: " + name);
}

}  // namespace mseg
