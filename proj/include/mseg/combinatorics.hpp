#pragma once

// Zelevinsky / Moeglin-Waldspurger combinatorics: index pair sets, the
// MW involution, frontier sets and rho-matchings.

#include <cstddef>
#include <utility>
#include <vector>

#include "mseg/index_pair.hpp"
#include "mseg/multiseg.hpp"

namespace mseg {

// X_m = {(i,j) : m[i] precedes m[j]}.
PairSet pairset_x(const Multisegment& m);
// Y_m = {(i,j) : m[i] precedes the right shift of m[j]}, i.e.
// b_i <= b_j <= e_i <= e_j on a common line. Contains the diagonal.
PairSet pairset_y(const Multisegment& m);
// Cross versions: first index into m, second into m2.
PairSet pairset_x_cross(const Multisegment& m, const Multisegment& m2);
PairSet pairset_y_cross(const Multisegment& m, const Multisegment& m2);

// Leading-index chain i_1, i_2, ... of a nonzero multisegment.
std::vector<std::size_t> leading_indices(const Multisegment& m);

struct MwStep {
  Segment delta;
  Multisegment reduced;
};

// One step of the MW algorithm: (Delta(m), m^-).
MwStep mw_step(const Multisegment& m);

// Same as mw_step but also returns the per-index truncations of m, with
// nullopt where a singleton chain member disappeared.
std::vector<std::optional<Segment>> truncate_chain(const Multisegment& m,
                                                   const std::vector<std::size_t>& chain);

// The MW involution m -> m^#.
Multisegment mw_dual(const Multisegment& m);

struct Frontier {
  PairSet xt;
  PairSet yt;
  std::vector<std::pair<IndexPair, IndexPair>> f;  // yt -> xt, sorted by source
  bool surjective = false;
};

// xt = X_{m,m2} \ X_{m,m2^-}, yt = Y_{m,m2} \ Y_{m,m2^-} with m2^- indexed
// like m2, and f(i, i'_j) = (i, i'_{j-1}) along the leading chain of m2.
// Requires m, m2 nonzero, on a single line, max_end(m) < max_end(m2).
Frontier mw_frontier(const Multisegment& m, const Multisegment& m2);

struct RhoSets {
  std::vector<std::size_t> x;  // b = rho.pos + 1
  std::vector<std::size_t> y;  // b = rho.pos
};
RhoSets rho_sets(const Multisegment& m, const CuspidalPoint& rho);

// A rho-matching: a partial bijection Y^rho -> X^rho with m[i] preceding m[j].
struct Matching {
  std::vector<IndexPair> pairs;      // (i in Y^rho, j in X^rho), sorted
  std::vector<std::size_t> a_set;    // unmatched Y^rho indices
  std::vector<std::size_t> b_set;    // unmatched X^rho indices
};

// Validates pairs against (m, rho) and fills the unmatched sets.
// Throws Error(InvalidMatching).
Matching make_matching(const Multisegment& m, const CuspidalPoint& rho,
                       std::vector<IndexPair> pairs);

Matching best_matching(const Multisegment& m, const CuspidalPoint& rho);
bool is_maximal_matching(const Multisegment& m, const CuspidalPoint& rho, const Matching& r);
// True iff r has (i,j),(i',j') with m[i] < m[i'] precedes m[j] < m[j'].
bool has_crossing(const Multisegment& m, const Matching& r);

// Exhaustive test oracle; throws Error(TooLarge) when |Y^rho|+|X^rho| > 12.
std::vector<Matching> enumerate_maximal_matchings(const Multisegment& m,
                                                  const CuspidalPoint& rho);

struct DerivativeResult {
  std::size_t mu = 0;
  Multisegment derived;
  std::vector<std::size_t> a_set;
  std::vector<std::size_t> b_set;
};
DerivativeResult derivative(const Multisegment& m, const CuspidalPoint& rho);

// soc(rho x Z(m)) as a multisegment.
Multisegment soc_cuspidal(const Multisegment& m, const CuspidalPoint& rho);

struct RhoFrontier {
  PairSet xt;
  PairSet yt;
};
RhoFrontier rho_frontier(const Multisegment& m, const Multisegment& m2,
                         const CuspidalPoint& rho);

}  // namespace mseg
