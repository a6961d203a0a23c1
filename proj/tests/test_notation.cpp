#include <doctest.h>

#include "mseg/error.hpp"
#include "mseg/harness.hpp"
#include "mseg/notation.hpp"

using namespace mseg;

TEST_CASE("parse examples") {
  const Multisegment m = parse_mseg("[1,2]+[-1,1]+[0,0]+[-2,-1]");
  CHECK(m.size() == 4);
  CHECK(m == Multisegment{Segment(1, 2), Segment(-1, 1), Segment(0, 0), Segment(-2, -1)});
  CHECK(parse_mseg("2*[0,0]") == Multisegment{Segment(0, 0), Segment(0, 0)});
  CHECK(parse_mseg("a:[0,1]+b:[0,1]") == Multisegment{Segment("a", 0, 1), Segment("b", 0, 1)});
  CHECK(parse_mseg("  [ 1 , 2 ] + [0,1] ") == parse_mseg("[0,1]+[1,2]"));
  CHECK(parse_mseg("0").empty());
  CHECK(parse_mseg("0:[3,4]") == Multisegment{Segment(3, 4)});
}

TEST_CASE("parse errors carry positions") {
  auto pos = [](const char* s) -> std::size_t {
    try {
      parse_mseg(s);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 999;
  };
  CHECK(pos("") == 0);
  CHECK(pos("[1,2") == 4);
  CHECK(pos("[1,2]+") == 6);
  CHECK(pos("[1;2]") == 2);
  CHECK(pos("[1,2]]") == 5);
  CHECK(pos("x") == 0);
  try {
    parse_mseg("[3,1]");
    FAIL("expected EmptySegment");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptySegment);
  }
}

TEST_CASE("points") {
  CHECK(parse_point("3") == CuspidalPoint{"0", 3});
  CHECK(parse_point("a:-2") == CuspidalPoint{"a", -2});
  CHECK_THROWS_AS(parse_point("a:"), ParseError);
  CHECK(format(CuspidalPoint{"0", 3}) == "3");
  CHECK(format(CuspidalPoint{"a", -2}) == "a:-2");
}

TEST_CASE("formatting") {
  CHECK(format(Multisegment{}) == "0");
  CHECK(format(Multisegment{Segment(0, 1), Segment(1, 2)}) == "[1,2]+[0,1]");
  CHECK(format(Segment("b", -1, 0)) == "b:[-1,0]");
}

TEST_CASE("format and parse round-trip") {
  GenParams p;
  p.max_segments = 7;
  p.coord_range = 12;
  p.max_length = 6;
  p.lines = 3;
  for (std::uint64_t k = 0; k < 10000; ++k) {
    const Multisegment m = gen_ms(p, k);
    const std::string s = format(m);
    CHECK(parse_mseg(s) == m);
    CHECK(format(parse_mseg(s)) == s);
  }
}
