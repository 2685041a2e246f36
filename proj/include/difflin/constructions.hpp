#pragma once

#include "difflin/object.hpp"
#include "difflin/semiring.hpp"
#include "difflin/term.hpp"

namespace difflin {

// Derived structure, written as terms over the native generators. Inputs
// that are morphisms must be annotated; the results are untyped.

// eta ; copy ; (!f * !g) ; nabla ; eps
TermPtr build_sum(const TermPtr& f, const TermPtr& g);
// eta ; weak ; u ; eps
TermPtr build_zero(Obj a, Obj b);
// eta ; S ; !f ; eps. Throws RingError when the ring has no negatives.
TermPtr build_neg(const TermPtr& f, Ring ring);
// (eps * weak) + (weak * eps) : !A * !A -> A
TermPtr build_phi(Obj a);

// (delta * delta) ; m ; !(phi)
TermPtr build_nabla_from_m(Obj a);
// mI ; !(0)
TermPtr build_u_from_m(Obj a);
// The composite recovering m{A,B} from the bialgebra structure.
TermPtr build_m_from_nabla(Obj a, Obj b);
// u{I} ; delta{I} ; !(weak{I})
TermPtr build_mI_from_nabla();

// (id * eta) ; nabla
TermPtr build_d_from_eta(Obj a);
// (u * id) ; d
TermPtr build_eta_from_d(Obj a);

// !(-1) on a bang-free object. Throws RingError without negatives.
TermPtr build_antipode(Obj a, Ring ring, const Signature& sig);

}  // namespace difflin
