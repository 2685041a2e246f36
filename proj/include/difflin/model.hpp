#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "difflin/elem.hpp"
#include "difflin/semiring.hpp"
#include "difflin/term.hpp"
#include "difflin/termfile.hpp"

namespace difflin {

// Alternate coefficient tables used by the mutation suite.
enum class Mutation {
    ScaleEta2,       // eta scaled by 2
    FlatBialgebra,   // the bialgebra pair loses its multinomial weights
    DropS,           // antipode replaced by the identity
    SwapD,           // d replaced by weak*eta
};

const char* mutation_name(Mutation m);
std::optional<Mutation> mutation_from_name(const std::string& s);

// The free-exponential model: !A is spanned by finite multisets over the
// basis of A. Two bases of !A are supported. In the monomial basis the
// multiset m stands for the monomial x^m: copy carries multinomials and
// nabla is coefficient-free. In the divided-power basis m stands for
// x^m / m!: copy is coefficient-free and nabla carries multinomials. The
// two agree over the rationals up to the rescaling m <-> m! m; only the
// divided basis has integral structure constants.
struct ModelConfig {
    Ring ring = Ring::Rational;
    std::optional<Basis> basis;  // nullopt: monomial over rational/boolean, divided otherwise
    Signature sig;
    std::optional<unsigned> fallback_cap;
    std::vector<Mutation> mutations;

    Basis effective_basis() const;
    bool mutated(Mutation m) const;
};

using Vec = std::unordered_map<Elem, Coef>;
using Row = std::vector<std::pair<Elem, Coef>>;

// m! = prod over distinct x of m(x)!
mpz_class mset_factorial(Elem m);

// All inputs with a nonzero coefficient into `out`, with the coefficient.
// Every generator has finitely many.
Row gen_row(const ModelConfig& cfg, GenKind g, const std::vector<Obj>& params, Elem out);

Coef gen_entry(const ModelConfig& cfg, GenKind g, const std::vector<Obj>& params, Elem in, Elem out);

// Outputs reachable from `in` with a nonzero coefficient, or nullopt when
// there are infinitely many (digging and mI).
std::optional<std::vector<Elem>> gen_forward(const ModelConfig& cfg, GenKind g, const std::vector<Obj>& params,
                                             Elem in);

}  // namespace difflin
