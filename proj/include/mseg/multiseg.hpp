#pragma once

// Segments and multisegments on labeled integer lines.
//
// A segment [b,e] on line L stands for the cuspidal points L:b, L:b+1, ..., L:e.
// Lines are opaque labels; nothing on distinct lines ever interacts.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mseg {

using Coord = std::int64_t;

inline const std::string kDefaultLine = "0";

struct CuspidalPoint {
  std::string line = kDefaultLine;
  Coord pos = 0;

  // Global order: line label lexicographically, then position.
  friend auto operator<=>(const CuspidalPoint&, const CuspidalPoint&) = default;
  friend bool operator==(const CuspidalPoint&, const CuspidalPoint&) = default;
};

class Segment {
 public:
  // Throws Error(EmptySegment) when b > e.
  Segment(std::string line, Coord b, Coord e);
  Segment(Coord b, Coord e) : Segment(kDefaultLine, b, e) {}

  const std::string& line() const noexcept { return line_; }
  Coord begin() const noexcept { return b_; }
  Coord end() const noexcept { return e_; }
  Coord length() const noexcept { return e_ - b_ + 1; }

  CuspidalPoint begin_point() const { return {line_, b_}; }
  CuspidalPoint end_point() const { return {line_, e_}; }

  bool contains(const CuspidalPoint& p) const noexcept {
    return p.line == line_ && b_ <= p.pos && p.pos <= e_;
  }

  // Total order: line label, then end, then begin. With equal ends this is
  // reverse inclusion: [0,1] < [1,1].
  friend std::strong_ordering operator<=>(const Segment& a, const Segment& b);
  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  std::string line_;
  Coord b_;
  Coord e_;
};

std::strong_ordering total_cmp(const Segment& a, const Segment& b);

// The linking relation: a precedes b iff they share a line and
// b(a) < b(b) <= e(a)+1 and e(b) > e(a).
bool precedes(const Segment& a, const Segment& b);

enum class Surgery {
  RightTrunc,   // [b, e-1]
  LeftTrunc,    // [b+1, e]
  RightExt,     // [b, e+1]
  LeftExt,      // [b-1, e]
  ShiftRight,   // [b+1, e+1]
  ShiftLeft,    // [b-1, e-1]
  Dual,         // [-e, -b], same line label
};

// Absent (nullopt) when a truncation empties a singleton.
std::optional<Segment> surgery(const Segment& d, Surgery kind);

using SuppMultiset = std::map<CuspidalPoint, std::int64_t>;

// A finite multiset of segments, stored in strictly descending total order
// with equal segments adjacent. Positions in that list are the segment
// indices used by every pair set, matching and matrix in this library.
class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(std::vector<Segment> segs);
  Multisegment(std::initializer_list<Segment> segs)
      : Multisegment(std::vector<Segment>(segs)) {}

  const std::vector<Segment>& segments() const noexcept { return segs_; }
  std::size_t size() const noexcept { return segs_.size(); }
  bool empty() const noexcept { return segs_.empty(); }
  const Segment& operator[](std::size_t i) const { return segs_[i]; }

  auto begin() const noexcept { return segs_.begin(); }
  auto end() const noexcept { return segs_.end(); }

  friend bool operator==(const Multisegment&, const Multisegment&) = default;

 private:
  std::vector<Segment> segs_;
};

Multisegment ms_add(const Multisegment& a, const Multisegment& b);
SuppMultiset supp(const Multisegment& m);
SuppMultiset supp(const Segment& d);
SuppMultiset dual(const SuppMultiset& s);
Multisegment ms_dual(const Multisegment& m);

// Throws Error(EmptyMultisegment) for the zero multisegment.
CuspidalPoint max_end(const Multisegment& m);

struct MaxSplit {
  Multisegment mx;   // segments ending at max_end(m)
  Multisegment nmx;  // the rest
};
MaxSplit split_mx(const Multisegment& m);

bool is_ladder(const Multisegment& m);

// True iff no segment of m precedes a segment of m2.
bool sli_sufficient(const Multisegment& m, const Multisegment& m2);

enum class Filter { GeSeg, EndIn, BeginIn };
Multisegment ms_filter(const Multisegment& m, Filter kind, const Segment& d);

// Distinct line labels in ascending order.
std::vector<std::string> lines(const Multisegment& m);
Multisegment restrict_to_line(const Multisegment& m, const std::string& line);
bool single_line(const Multisegment& a, const Multisegment& b);

// Segments at the given indices, sorted; the multiset used to compare
// index subsets up to equivalence.
std::vector<Segment> segments_at(const Multisegment& m,
                                 std::span<const std::size_t> indices);

}  // namespace mseg
