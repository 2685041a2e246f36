#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "difflin/diagram.hpp"
#include "difflin/model.hpp"

namespace difflin {

// Per-wire candidate sets (sorted canonically); nullopt marks a wire the
// propagation could not bound.
struct SupportBounds {
    std::vector<std::optional<std::vector<Elem>>> wires;
    bool approximate = false;  // some wire was cut off at the fallback cap

    bool bounded() const;
};

// Fixes the boundary wires from `in` and `out` (either may be left free) and
// narrows every wire's candidates by propagating each node's support
// relation forwards and backwards until nothing changes. Backward
// propagation always gives finite sets; forward propagation through digging
// or mI does not. When cfg.fallback_cap is set, wires left unbounded are
// limited to elements of that size and the result is flagged approximate.
SupportBounds infer_support(const PortGraph& g, std::optional<Elem> in, std::optional<Elem> out,
                            const ModelConfig& cfg);

struct VectorResult {
    std::vector<std::pair<Elem, Coef>> entries;  // nonzero, canonical order of the output
    bool approximate = false;
};

// The full output vector of a typed term at one input. Throws
// UnboundedError when the output cannot be bounded and no fallback cap is
// configured.
VectorResult eval_vector(const TermPtr& t, Elem in, const ModelConfig& cfg);

// Top-level sum-free summands of t (signs dropped). Box interiors are not
// expanded.
std::vector<TermPtr> summands(const TermPtr& t);

}  // namespace difflin
