#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "difflin/object.hpp"
#include "difflin/semiring.hpp"
#include "difflin/term.hpp"

namespace difflin {

enum class Basis { Monomial, Divided };

// Contents of a term file. One declaration per line:
//   base A dim 2
//   lin f : A -> B { a1->b: 2, a2->b: -1/2 }
//   let NAME = term
//   semiring rational|integer|natural|boolean
//   basis auto|monomial|divided
//   size_cap 4
//   fallback_cap 6
// A line holding a bare term sets the file's subject term. Lines starting
// with '#' are comments.
struct TermFile {
    Signature sig;
    std::map<std::string, LinPtr> lins;
    std::vector<std::pair<std::string, TermPtr>> lets;
    TermPtr subject;  // bare term line, else `let main`, else the last let
    std::optional<Ring> ring;
    std::optional<Basis> basis;
    std::optional<unsigned> size_cap;
    std::optional<unsigned> fallback_cap;
};

TermFile parse_term_file(std::string_view text);
TermFile load_term_file(const std::string& path);

// Parses "{ in->out: coef, ... }" entry lists against dom and cod.
std::vector<LinEntry> parse_lin_entries(std::string_view body, Obj dom, Obj cod, const Signature& sig);

std::optional<Basis> parse_basis(const std::string& s);  // nullopt for "auto"
const char* basis_name(Basis b);

}  // namespace difflin
