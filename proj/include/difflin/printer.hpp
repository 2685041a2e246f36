#pragma once

#include <string>

#include "difflin/term.hpp"

namespace difflin {

// Prints in the parser's syntax. Nested chains of the same operator and
// zero morphisms inside operators are parenthesized, so parse_term of the
// output gives back a structurally equal term.
std::string pretty_print(const TermPtr& t);

}  // namespace difflin
