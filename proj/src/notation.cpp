#include "mseg/notation.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "mseg/error.hpp"

namespace mseg {

namespace {

bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Multisegment mseg() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '0') {
      // The zero multisegment, unless "0" starts a label such as "0:[...]".
      std::size_t save = pos_;
      ++pos_;
      skip();
      if (pos_ == s_.size()) return {};
      pos_ = save;
    }
    std::vector<Segment> segs;
    term(segs);
    for (skip(); pos_ < s_.size(); skip()) {
      expect('+');
      term(segs);
    }
    return Multisegment(std::move(segs));
  }

  CuspidalPoint point() {
    skip();
    CuspidalPoint p;
    const std::size_t save = pos_;
    std::string label = maybe_label();
    if (!label.empty()) {
      p.line = label;
    } else {
      pos_ = save;
    }
    p.pos = integer();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(pos_, msg + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  // Consumes "LABEL:" if present and returns LABEL; otherwise consumes nothing.
  std::string maybe_label() {
    skip();
    std::size_t end = pos_;
    while (end < s_.size() && is_label_char(s_[end])) ++end;
    std::size_t colon = end;
    while (colon < s_.size() && std::isspace(static_cast<unsigned char>(s_[colon]))) ++colon;
    if (end == pos_ || colon >= s_.size() || s_[colon] != ':') return {};
    std::string label(s_.substr(pos_, end - pos_));
    pos_ = colon + 1;
    return label;
  }

  std::int64_t integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    std::int64_t v = 0;
    const char* first = s_.data() + (s_[start] == '+' ? start + 1 : start);
    auto [ptr, ec] = std::from_chars(first, s_.data() + pos_, v);
    if (ec != std::errc() || ptr != s_.data() + pos_) {
      pos_ = start;
      fail("integer out of range");
    }
    return v;
  }

  void term(std::vector<Segment>& out) {
    skip();
    std::int64_t mult = 1;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      // Either a multiplicity "k*" or a numeric label "0:".
      std::size_t end = pos_;
      while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
      std::size_t star = end;
      while (star < s_.size() && std::isspace(static_cast<unsigned char>(s_[star]))) ++star;
      if (star < s_.size() && s_[star] == '*') {
        const std::size_t at = pos_;
        mult = integer();
        if (mult < 1) {
          pos_ = at;
          fail("multiplicity must be positive");
        }
        pos_ = star + 1;
      }
    }
    const std::size_t seg_start = pos_;
    std::string label = maybe_label();
    if (label.empty()) label = kDefaultLine;
    expect('[');
    const std::int64_t b = integer();
    expect(',');
    const std::int64_t e = integer();
    expect(']');
    if (b > e)
      throw Error(ErrorCode::EmptySegment, "empty segment [" + std::to_string(b) + "," +
                                               std::to_string(e) + "] at offset " +
                                               std::to_string(seg_start));
    for (std::int64_t k = 0; k < mult; ++k) out.emplace_back(label, b, e);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Multisegment parse_mseg(std::string_view text) { return Parser(text).mseg(); }

CuspidalPoint parse_point(std::string_view text) { return Parser(text).point(); }

std::string format(const Segment& d) {
  std::string out;
  if (d.line() != kDefaultLine) out += d.line() + ":";
  out += "[" + std::to_string(d.begin()) + "," + std::to_string(d.end()) + "]";
  return out;
}

std::string format(const Multisegment& m) {
  if (m.empty()) return "0";
  std::string out;
  for (const auto& d : m) {
    if (!out.empty()) out += '+';
    out += format(d);
  }
  return out;
}

std::string format(const CuspidalPoint& p) {
  std::string out;
  if (p.line != kDefaultLine) out += p.line + ":";
  return out + std::to_string(p.pos);
}

}  // namespace mseg
