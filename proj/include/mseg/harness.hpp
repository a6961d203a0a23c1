#pragma once

// Random instance generation and property suites over the conditions.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mseg/linalg.hpp"
#include "mseg/multiseg.hpp"

namespace mseg {

struct GenParams {
  int max_segments = 5;
  Coord coord_range = 4;  // b, e in [-R, R]
  Coord max_length = 4;
  int lines = 1;
  std::uint64_t seed = 0;

  // Throws Error(InvalidConfig).
  void validate() const;
};

// SplitMix64 generator; std distributions differ across standard libraries.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t next();
  // Uniform in [lo, hi]; requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return next() >> 63; }

 private:
  std::uint64_t state_;
};

Multisegment gen_ms(const GenParams& p, std::uint64_t index);
Multisegment gen_ladder(const GenParams& p, std::uint64_t index);

// Same generators driven by an existing stream.
Multisegment gen_ms(const GenParams& p, Rng& rng);
Multisegment gen_ladder(const GenParams& p, Rng& rng);

struct Violation {
  std::vector<Multisegment> inputs;
  std::string detail;
  // Some FALSE verdict involved was uncertified (could be a sampling miss).
  bool possibly_spurious = false;
};

struct PropertyReport {
  std::string name;
  std::size_t instances_generated = 0;
  std::size_t hypothesis_satisfied = 0;
  std::vector<Violation> violations;
  RankConfig cfg;
  // Sum of the bounds of every uncertified FALSE verdict the suite relied on.
  mpq_class false_verdict_bound = 0;
  // TRUE verdicts seen, and those the exact rank refused to confirm (certify on).
  std::size_t true_verdicts = 0;
  std::size_t exact_disagreements = 0;

  bool passed() const { return violations.empty(); }
};

struct SuiteLimits {
  std::size_t target = 200;         // hypothesis-satisfying instances wanted
  std::size_t max_attempts = 20000;  // generated instances at most
};

PropertyReport prop_mm_minus(const GenParams& p, const RankConfig& cfg, SuiteLimits lim = {});
PropertyReport prop_splitdisj(const GenParams& p, const RankConfig& cfg, SuiteLimits lim = {});
PropertyReport prop_gedelta(const GenParams& p, const RankConfig& cfg, SuiteLimits lim = {});
// Parts (2) to (5); hypothesis_satisfied is the smallest per-part count, and
// generation continues until every part reaches the target.
PropertyReport prop_3ms(const GenParams& p, const RankConfig& cfg, SuiteLimits lim = {});
PropertyReport prop_sumofseg_geom(const GenParams& p, const RankConfig& cfg, SuiteLimits lim = {});
PropertyReport prop_rhoext_geom(const GenParams& p, const RankConfig& cfg, SuiteLimits lim = {});

// GLS on generated ladders (always expected TRUE).
PropertyReport prop_ladder_gls(const GenParams& p, const RankConfig& cfg, SuiteLimits lim = {});

// One report per invariance bundle; lim.target instances each.
std::vector<PropertyReport> suite_invariances(const GenParams& p, const RankConfig& cfg,
                                              SuiteLimits lim = {});

// Names accepted by run_suite: the prop_* suites without prefix, "ladder_gls",
// "invariances" and the individual invariance bundle names.
std::vector<std::string> suite_names();
// Throws std::out_of_range for an unknown name.
std::vector<PropertyReport> run_suite(const std::string& name, const GenParams& p,
                                      const RankConfig& cfg, SuiteLimits lim = {});

}  // namespace mseg
