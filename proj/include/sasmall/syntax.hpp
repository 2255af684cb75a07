#pragma once

#include <string>
#include <string_view>

#include "sasmall/module.hpp"

namespace sasmall {

// Text forms, whitespace-insensitive:
//   ring       Z | Z/n
//   ideal      dZ | Z | 0 | (d) | (d) mod n
//   module     0 | Z | Z/6 | Z/2 x Z/8 | presented:2Z x Z/8 | presented[[0,8]]
//   submodule  0 | M | kZ (module Z) | <g1, g2, ...> with elements 2 or (0,2)
// All failures raise ParseError.

RingDesc parse_ring(std::string_view text);
Ideal parse_ideal(const RingDesc& ring, std::string_view text);
FGModule parse_module(const RingDesc& ring, std::string_view text);
Element parse_element(const FGModule& m, std::string_view text);
Submodule parse_submodule(const FGModule& m, std::string_view text);

}  // namespace sasmall
