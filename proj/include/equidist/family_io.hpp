#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "equidist/core.hpp"

namespace equidist {

// Family text format:
//
//   # optional comments anywhere
//   n q
//   0 1 1
//   1 0 1
//
// The header holds the vector length and alphabet size; every further
// non-empty line is one member given as n whitespace separated symbols.

Family parse_family(std::istream& in);
Family parse_family(std::string_view text);

std::string serialize_family(const Family& f);

}  // namespace equidist
