#pragma once

// Text form of multisegments: "[1,2]+[-1,1]", "2*[0,0]", "a:[0,1]+b:[0,1]".
//
//   mseg := term ('+' term)* | '0'
//   term := (UINT '*')? seg
//   seg  := (LABEL ':')? '[' INT ',' INT ']'
//
// Whitespace is ignored; a missing label means the default line "0".

#include <string>
#include <string_view>

#include "mseg/multiseg.hpp"

namespace mseg {

// Throws ParseError (with byte offset) or Error(EmptySegment).
Multisegment parse_mseg(std::string_view text);

// "L:K" or "K"; throws ParseError.
CuspidalPoint parse_point(std::string_view text);

// Canonical order, default label elided; the zero multisegment is "0".
std::string format(const Multisegment& m);
std::string format(const Segment& d);
std::string format(const CuspidalPoint& p);

}  // namespace mseg
