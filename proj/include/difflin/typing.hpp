#pragma once

#include <utility>

#include "difflin/object.hpp"
#include "difflin/term.hpp"

namespace difflin {

// Returns a copy of t with dom/cod filled in on every subterm. Throws
// TypeError on a composition mismatch, heterogeneous sums, or base objects
// missing from sig (when sig is given). Negation is accepted here for every
// semiring; whether it can be evaluated is decided by the model.
TermPtr annotate(const TermPtr& t, const Signature* sig = nullptr);

std::pair<Obj, Obj> infer_type(const TermPtr& t, const Signature* sig = nullptr);

// Typing table for generators.
std::pair<Obj, Obj> gen_type(GenKind g, const std::vector<Obj>& params);

}  // namespace difflin
