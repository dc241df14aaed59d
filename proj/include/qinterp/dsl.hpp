#pragma once

#include <string>

#include "qinterp/plmap.hpp"

namespace qinterp {

// Map literals look like
//   pl{ (-inf,0): x; [0,0]: 1/2; (0,inf): x+1 }
// Pieces are separated by ';', each "<interval>: <affine>"; ends are '(' / '['
// and ')' / ']', endpoints rationals or (-)inf, affine laws like
// "2x-1", "x/2", "3/4", "1/2x+3". Pieces must partition Q and describe a
// weakly increasing map. Syntax problems raise SyntaxError with a position,
// bad partitions or decreasing maps raise DomainError.
PLMap parse_map(const std::string& text);

// Canonical text; parse_map(pretty_map(f)) == f.
std::string pretty_map(const PLMap& f);

// Versioned structured serialization (JSON) with exact fraction fields.
std::string map_to_json(const PLMap& f);
PLMap map_from_json(const std::string& text);

}  // namespace qinterp
