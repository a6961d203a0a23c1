#include "mseg/multiseg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mseg/error.hpp"

namespace mseg {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySegment: return "EmptySegment";
    case ErrorCode::EmptyMultisegment: return "EmptyMultisegment";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidMatching: return "InvalidMatching";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SupportMismatch: return "SupportMismatch";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Segment::Segment(std::string line, Coord b, Coord e)
    : line_(std::move(line)), b_(b), e_(e) {
  if (b > e) {
    std::ostringstream os;
    os << "empty segment [" << b << "," << e << "] on line " << line_;
    throw Error(ErrorCode::EmptySegment, os.str());
  }
}

std::strong_ordering operator<=>(const Segment& a, const Segment& b) {
  if (auto c = a.line_ <=> b.line_; c != 0) return c;
  if (auto c = a.e_ <=> b.e_; c != 0) return c;
  return a.b_ <=> b.b_;
}

std::strong_ordering total_cmp(const Segment& a, const Segment& b) { return a <=> b; }

bool precedes(const Segment& a, const Segment& b) {
  return a.line() == b.line() && a.begin() < b.begin() && b.begin() <= a.end() + 1 &&
         b.end() > a.end();
}

std::optional<Segment> surgery(const Segment& d, Surgery kind) {
  const Coord b = d.begin();
  const Coord e = d.end();
  switch (kind) {
    case Surgery::RightTrunc:
      if (b == e) return std::nullopt;
      return Segment(d.line(), b, e - 1);
    case Surgery::LeftTrunc:
      if (b == e) return std::nullopt;
      return Segment(d.line(), b + 1, e);
    case Surgery::RightExt: return Segment(d.line(), b, e + 1);
    case Surgery::LeftExt: return Segment(d.line(), b - 1, e);
    case Surgery::ShiftRight: return Segment(d.line(), b + 1, e + 1);
    case Surgery::ShiftLeft: return Segment(d.line(), b - 1, e - 1);
    case Surgery::Dual: return Segment(d.line(), -e, -b);
  }
  return std::nullopt;
}

Multisegment::Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
  std::sort(segs_.begin(), segs_.end(), std::greater<>());
}

Multisegment ms_add(const Multisegment& a, const Multisegment& b) {
  std::vector<Segment> all(a.segments());
  all.insert(all.end(), b.begin(), b.end());
  return Multisegment(std::move(all));
}

SuppMultiset supp(const Segment& d) {
  SuppMultiset s;
  for (Coord x = d.begin(); x <= d.end(); ++x) ++s[{d.line(), x}];
  return s;
}

SuppMultiset supp(const Multisegment& m) {
  SuppMultiset s;
  for (const auto& d : m)
    for (Coord x = d.begin(); x <= d.end(); ++x) ++s[{d.line(), x}];
  return s;
}

SuppMultiset dual(const SuppMultiset& s) {
  SuppMultiset out;
  for (const auto& [p, mult] : s) out[{p.line, -p.pos}] += mult;
  return out;
}

Multisegment ms_dual(const Multisegment& m) {
  std::vector<Segment> out;
  out.reserve(m.size());
  for (const auto& d : m) out.push_back(*surgery(d, Surgery::Dual));
  return Multisegment(std::move(out));
}

CuspidalPoint max_end(const Multisegment& m) {
  if (m.empty()) throw Error(ErrorCode::EmptyMultisegment, "max_end of the zero multisegment");
  // The first segment in descending order has the greatest (line, end).
  return m[0].end_point();
}

MaxSplit split_mx(const Multisegment& m) {
  if (m.empty()) return {};
  const CuspidalPoint top = max_end(m);
  std::vector<Segment> mx, nmx;
  for (const auto& d : m) (d.end_point() == top ? mx : nmx).push_back(d);
  return {Multisegment(std::move(mx)), Multisegment(std::move(nmx))};
}

bool is_ladder(const Multisegment& m) {
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    if (!precedes(m[i + 1], m[i])) return false;
  return true;
}

bool sli_sufficient(const Multisegment& m, const Multisegment& m2) {
  for (const auto& d : m)
    for (const auto& d2 : m2)
      if (precedes(d, d2)) return false;
  return true;
}

Multisegment ms_filter(const Multisegment& m, Filter kind, const Segment& d) {
  std::vector<Segment> out;
  for (const auto& x : m) {
    bool keep = false;
    switch (kind) {
      case Filter::GeSeg: keep = x >= d; break;
      case Filter::EndIn: keep = d.contains(x.end_point()); break;
      case Filter::BeginIn: keep = d.contains(x.begin_point()); break;
    }
    if (keep) out.push_back(x);
  }
  return Multisegment(std::move(out));
}

std::vector<std::string> lines(const Multisegment& m) {
  std::set<std::string> s;
  for (const auto& d : m) s.insert(d.line());
  return {s.begin(), s.end()};
}

Multisegment restrict_to_line(const Multisegment& m, const std::string& line) {
  std::vector<Segment> out;
  for (const auto& d : m)
    if (d.line() == line) out.push_back(d);
  return Multisegment(std::move(out));
}

bool single_line(const Multisegment& a, const Multisegment& b) {
  std::set<std::string> s;
  for (const auto& d : a) s.insert(d.line());
  for (const auto& d : b) s.insert(d.line());
  return s.size() <= 1;
}

std::vector<Segment> segments_at(const Multisegment& m, std::span<const std::size_t> indices) {
  std::vector<Segment> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(m[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mseg
