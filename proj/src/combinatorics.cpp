#include "mseg/combinatorics.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <sstream>

#include "mseg/error.hpp"

namespace mseg {

std::string to_string(const IndexPair& p) {
  std::ostringstream os;
  os << '(' << p.first + 1 << ',' << p.second + 1 << ')';
  return os.str();
}

PairSet::PairSet(std::vector<IndexPair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

std::size_t PairSet::position(const IndexPair& p) const {
  return static_cast<std::size_t>(std::lower_bound(pairs_.begin(), pairs_.end(), p) -
                                  pairs_.begin());
}

PairSet set_difference(const PairSet& a, const PairSet& b) {
  std::vector<IndexPair> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PairSet(std::move(out));
}

namespace {

bool y_related(const Segment& a, const Segment& b) {
  return a.line() == b.line() && a.begin() <= b.begin() && b.begin() <= a.end() &&
         a.end() <= b.end();
}

template <class Pred>
PairSet collect_pairs(const Multisegment& m, const Multisegment& m2, Pred pred) {
  std::vector<IndexPair> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m2.size(); ++j)
      if (pred(m[i], m2[j])) out.push_back({i, j});
  return PairSet(std::move(out));
}

}  // namespace

PairSet pairset_x(const Multisegment& m) { return collect_pairs(m, m, precedes); }
PairSet pairset_y(const Multisegment& m) { return collect_pairs(m, m, y_related); }
PairSet pairset_x_cross(const Multisegment& m, const Multisegment& m2) {
  return collect_pairs(m, m2, precedes);
}
PairSet pairset_y_cross(const Multisegment& m, const Multisegment& m2) {
  return collect_pairs(m, m2, y_related);
}

std::vector<std::size_t> leading_indices(const Multisegment& m) {
  if (m.empty())
    throw Error(ErrorCode::EmptyMultisegment, "leading indices of the zero multisegment");
  // Descending canonical order: index 0 is the maximal segment ending at
  // max m, and the first candidate found in a scan is the maximal one.
  std::vector<std::size_t> chain{0};
  for (;;) {
    const Segment& cur = m[chain.back()];
    std::optional<std::size_t> next;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k].end() == cur.end() - 1 && precedes(m[k], cur)) {
        next = k;
        break;
      }
    }
    if (!next) break;
    chain.push_back(*next);
  }
  return chain;
}

std::vector<std::optional<Segment>> truncate_chain(const Multisegment& m,
                                                   const std::vector<std::size_t>& chain) {
  std::vector<std::optional<Segment>> out(m.begin(), m.end());
  for (auto i : chain) out[i] = surgery(m[i], Surgery::RightTrunc);
  return out;
}

MwStep mw_step(const Multisegment& m) {
  const auto chain = leading_indices(m);
  const Segment& top = m[chain.front()];
  const Segment& bottom = m[chain.back()];
  Segment delta(top.line(), bottom.end(), top.end());
  std::vector<Segment> rest;
  for (auto& d : truncate_chain(m, chain))
    if (d) rest.push_back(std::move(*d));
  return {std::move(delta), Multisegment(std::move(rest))};
}

Multisegment mw_dual(const Multisegment& m) {
  std::vector<Segment> out;
  for (const auto& line : lines(m)) {
    Multisegment cur = restrict_to_line(m, line);
    while (!cur.empty()) {
      auto step = mw_step(cur);
      out.push_back(step.delta);
      cur = std::move(step.reduced);
    }
  }
  return Multisegment(std::move(out));
}

Frontier mw_frontier(const Multisegment& m, const Multisegment& m2) {
  if (m.empty() || m2.empty())
    throw Error(ErrorCode::PreconditionViolated, "mw_frontier needs nonzero multisegments");
  if (!single_line(m, m2))
    throw Error(ErrorCode::PreconditionViolated, "mw_frontier needs a single line");
  if (!(max_end(m) < max_end(m2)))
    throw Error(ErrorCode::PreconditionViolated, "mw_frontier needs max m < max m2");

  const auto chain = leading_indices(m2);
  const auto trunc = truncate_chain(m2, chain);

  std::vector<IndexPair> x_minus, y_minus;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m2.size(); ++j) {
      if (!trunc[j]) continue;
      if (precedes(m[i], *trunc[j])) x_minus.push_back({i, j});
      if (y_related(m[i], *trunc[j])) y_minus.push_back({i, j});
    }
  }

  Frontier out;
  out.xt = set_difference(pairset_x_cross(m, m2), PairSet(std::move(x_minus)));
  out.yt = set_difference(pairset_y_cross(m, m2), PairSet(std::move(y_minus)));

  std::set<IndexPair> image;
  for (const auto& p : out.yt) {
    auto it = std::find(chain.begin(), chain.end(), p.second);
    if (it == chain.end() || it == chain.begin())
      throw std::logic_error("mw_frontier: Y-frontier pair outside the chain tail");
    IndexPair target{p.first, *(it - 1)};
    out.f.emplace_back(p, target);
    image.insert(target);
  }
  out.surjective = image.size() == out.xt.size() &&
                   std::all_of(out.xt.begin(), out.xt.end(),
                               [&](const IndexPair& q) { return image.count(q) > 0; });
  return out;
}

RhoSets rho_sets(const Multisegment& m, const CuspidalPoint& rho) {
  RhoSets out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].line() != rho.line) continue;
    if (m[i].begin() == rho.pos + 1) out.x.push_back(i);
    if (m[i].begin() == rho.pos) out.y.push_back(i);
  }
  return out;
}

Matching make_matching(const Multisegment& m, const CuspidalPoint& rho,
                       std::vector<IndexPair> pairs) {
  const auto rs = rho_sets(m, rho);
  auto in = [](const std::vector<std::size_t>& v, std::size_t k) {
    return std::find(v.begin(), v.end(), k) != v.end();
  };
  std::set<std::size_t> used_i, used_j;
  for (const auto& p : pairs) {
    if (!in(rs.y, p.first) || !in(rs.x, p.second))
      throw Error(ErrorCode::InvalidMatching, "pair " + to_string(p) + " outside Y^rho x X^rho");
    if (!precedes(m[p.first], m[p.second]))
      throw Error(ErrorCode::InvalidMatching, "pair " + to_string(p) + " violates precedence");
    if (!used_i.insert(p.first).second || !used_j.insert(p.second).second)
      throw Error(ErrorCode::InvalidMatching, "matching is not one-to-one");
  }
  Matching r;
  std::sort(pairs.begin(), pairs.end());
  r.pairs = std::move(pairs);
  for (auto i : rs.y)
    if (!used_i.count(i)) r.a_set.push_back(i);
  for (auto j : rs.x)
    if (!used_j.count(j)) r.b_set.push_back(j);
  return r;
}

Matching best_matching(const Multisegment& m, const CuspidalPoint& rho) {
  const auto rs = rho_sets(m, rho);
  std::vector<std::size_t> xs = rs.x;
  std::stable_sort(xs.begin(), xs.end(), [&](std::size_t a, std::size_t b) {
    if (m[a] != m[b]) return m[a] < m[b];
    return a < b;
  });
  std::vector<bool> taken(m.size(), false);
  std::vector<IndexPair> pairs;
  for (auto j : xs) {
    // rs.y is in increasing index order, i.e. decreasing segment order.
    for (auto i : rs.y) {
      if (!taken[i] && precedes(m[i], m[j])) {
        taken[i] = true;
        pairs.push_back({i, j});
        break;
      }
    }
  }
  return make_matching(m, rho, std::move(pairs));
}

bool is_maximal_matching(const Multisegment& m, const CuspidalPoint& rho, const Matching& r) {
  const Matching checked = make_matching(m, rho, r.pairs);
  const auto rs = rho_sets(m, rho);
  std::vector<std::optional<std::size_t>> fwd(m.size()), bwd(m.size());
  for (const auto& p : checked.pairs) {
    fwd[p.first] = p.second;
    bwd[p.second] = p.first;
  }
  for (auto i : rs.y) {
    for (auto j : rs.x) {
      if (!precedes(m[i], m[j])) continue;
      const bool ok = (fwd[i] && bwd[j]) ||
                      (fwd[i] && !bwd[j] && m[j] >= m[*fwd[i]]) ||
                      (!fwd[i] && bwd[j] && m[i] <= m[*bwd[j]]);
      if (!ok) return false;
    }
  }
  return true;
}

bool has_crossing(const Multisegment& m, const Matching& r) {
  for (const auto& [i, j] : r.pairs)
    for (const auto& [i2, j2] : r.pairs)
      if (m[i] < m[i2] && precedes(m[i2], m[j]) && m[j] < m[j2]) return true;
  return false;
}

std::vector<Matching> enumerate_maximal_matchings(const Multisegment& m,
                                                  const CuspidalPoint& rho) {
  const auto rs = rho_sets(m, rho);
  if (rs.x.size() + rs.y.size() > 12)
    throw Error(ErrorCode::TooLarge, "matching enumeration limited to |X|+|Y| <= 12");

  std::vector<Matching> out;
  std::vector<IndexPair> cur;
  std::vector<bool> used(m.size(), false);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == rs.y.size()) {
      Matching r = make_matching(m, rho, cur);
      if (is_maximal_matching(m, rho, r)) out.push_back(std::move(r));
      return;
    }
    const std::size_t i = rs.y[k];
    rec(k + 1);
    for (auto j : rs.x) {
      if (used[j] || !precedes(m[i], m[j])) continue;
      used[j] = true;
      cur.push_back({i, j});
      rec(k + 1);
      cur.pop_back();
      used[j] = false;
    }
  };
  rec(0);
  return out;
}

DerivativeResult derivative(const Multisegment& m, const CuspidalPoint& rho) {
  Matching r = best_matching(m, rho);
  std::vector<bool> in_a(m.size(), false);
  for (auto i : r.a_set) in_a[i] = true;
  std::vector<Segment> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!in_a[i]) {
      out.push_back(m[i]);
    } else if (auto d = surgery(m[i], Surgery::LeftTrunc)) {
      out.push_back(*d);
    }
  }
  DerivativeResult res;
  res.mu = r.a_set.size();
  res.derived = Multisegment(std::move(out));
  res.a_set = std::move(r.a_set);
  res.b_set = std::move(r.b_set);
  return res;
}

Multisegment soc_cuspidal(const Multisegment& m, const CuspidalPoint& rho) {
  const Matching r = best_matching(m, rho);
  if (r.b_set.empty()) return ms_add(m, Multisegment{Segment(rho.line, rho.pos, rho.pos)});
  // b_set is in increasing index order, so its first entry is maximal.
  const std::size_t i0 = r.b_set.front();
  std::vector<Segment> out(m.begin(), m.end());
  out[i0] = *surgery(m[i0], Surgery::LeftExt);
  return Multisegment(std::move(out));
}

RhoFrontier rho_frontier(const Multisegment& m, const Multisegment& m2,
                         const CuspidalPoint& rho) {
  const auto a_set = derivative(m, rho).a_set;
  const auto rs2 = rho_sets(m2, rho);
  auto in = [](const std::vector<std::size_t>& v, std::size_t k) {
    return std::find(v.begin(), v.end(), k) != v.end();
  };
  std::vector<IndexPair> xt, yt;
  for (const auto& p : pairset_x_cross(m, m2))
    if (in(a_set, p.first) && in(rs2.x, p.second)) xt.push_back(p);
  for (const auto& p : pairset_y_cross(m, m2))
    if (in(a_set, p.first) && in(rs2.y, p.second)) yt.push_back(p);
  return {PairSet(std::move(xt)), PairSet(std::move(yt))};
}

}  // namespace mseg
