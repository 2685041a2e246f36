#pragma once

#include <map>
#include <string>
#include <string_view>

#include "difflin/object.hpp"
#include "difflin/term.hpp"

namespace difflin {

struct ParseEnv {
    const Signature* sig = nullptr;
    std::map<std::string, LinPtr> lins;
    // Earlier `let` definitions; a bare identifier expands to its term.
    std::map<std::string, TermPtr> lets;
};

// term := term "+" term | term ";" term | term "*" term | "-" term
//       | "0" ":" obj "->" obj | atom | "(" term ")"
// with `*` binding tighter than `;` and `+` loosest. Unparenthesized chains
// of one operator become a single n-ary node; parenthesized groups stay
// nested.
TermPtr parse_term(std::string_view src, const ParseEnv* env = nullptr);

}  // namespace difflin
