#pragma once

// The linear-independence criteria GLS(m), LC(m,m') and IG(m,m').
//
// Each condition asks whether some coefficient vector makes a family of
// vectors linearly independent. We test random evaluations modulo a prime:
// a full-rank evaluation is a witness (TRUE, optionally re-checked over Q),
// while repeated rank deficiency gives FALSE with a Schwartz-Zippel bound.

#include <gmpxx.h>

#include <map>
#include <optional>

#include "mseg/index_pair.hpp"
#include "mseg/linalg.hpp"
#include "mseg/multiseg.hpp"

namespace mseg {

// Coordinates over an X-type pair set; keys absent from values are zero.
struct CoeffVector {
  PairSet support;
  std::map<IndexPair, mpz_class> values;

  mpz_class at(const IndexPair& p) const {
    auto it = values.find(p);
    return it == values.end() ? mpz_class(0) : it->second;
  }

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;
};

struct Witness {
  CoeffVector lam;                  // over X_m
  std::optional<CoeffVector> lam2;  // over X_{m2}; LC only

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  bool holds = false;
  bool certified = false;
  std::optional<Witness> witness;
  // IG only: the witness for the converse LC(m2, m).
  std::optional<Witness> converse_witness;
  int trials_run = 0;
  // Upper bound on the probability that a FALSE verdict is wrong; 0 when the
  // verdict is TRUE or deterministic.
  mpq_class false_verdict_bound = 0;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Rows v_{i,j}(lam) for (i,j) in X_m, columns indexed by Y_m.
// Throws Error(SupportMismatch) unless lam.support == X_m and keys lie in it.
IntMatrix gls_matrix(const Multisegment& m, const CoeffVector& lam);

// Rows v_{i,j}(lam, lam2) for (i,j) in X_{m,m2}, columns indexed by Y_{m,m2}.
IntMatrix lc_matrix(const Multisegment& m, const Multisegment& m2, const CoeffVector& lam,
                    const CoeffVector& lam2);

Verdict check_gls(const Multisegment& m, const RankConfig& cfg);
Verdict check_lc(const Multisegment& m, const Multisegment& m2, const RankConfig& cfg);
// LC(m, m2) and LC(m2, m).
Verdict check_ig(const Multisegment& m, const Multisegment& m2, const RankConfig& cfg);

// LI(m, m2) for pairs where a ladder is involved; ladders are good, so LI
// coincides with LC. Throws Error(NotApplicable) when neither is a ladder.
Verdict li_for_good(const Multisegment& m, const Multisegment& m2, const RankConfig& cfg);

}  // namespace mseg
