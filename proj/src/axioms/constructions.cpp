#include "difflin/constructions.hpp"

#include "difflin/elem.hpp"
#include "difflin/errors.hpp"

namespace difflin {

namespace {

TermPtr gen(GenKind g, Obj a) { return mk_gen(g, {a}); }
TermPtr ten(TermPtr a, TermPtr b) { return mk_ten({std::move(a), std::move(b)}); }

void require_typed(const TermPtr& t, const char* what) {
    if (!t->typed()) throw TypeError(std::string(what) + ": morphism must be annotated");
}

void require_negatives(Ring ring, const char* what) {
    if (!semiring(ring).has_negatives)
        throw RingError(std::string(what) + " needs negatives; semiring " + ring_name(ring) + " has none");
}

// Largest structural size of a basis element of a bang-free object.
unsigned elem_size_of(Obj o) {
    switch (o->kind) {
    case ObjKind::Base:
    case ObjKind::Unit:
        return 1;
    case ObjKind::Tensor: {
        unsigned s = 1;
        for (Obj f : o->factors) s += elem_size_of(f);
        return s;
    }
    case ObjKind::Bang:
        break;
    }
    throw ConfigError("antipode construction needs a bang-free object, got " + to_string(o));
}

}  // namespace

TermPtr build_sum(const TermPtr& f, const TermPtr& g) {
    require_typed(f, "build_sum");
    require_typed(g, "build_sum");
    if (f->dom != g->dom || f->cod != g->cod)
        throw TypeError("build_sum: " + to_string(f->dom) + " -> " + to_string(f->cod) + " vs " +
                        to_string(g->dom) + " -> " + to_string(g->cod));
    Obj a = f->dom, b = f->cod;
    return mk_comp({gen(GenKind::Eta, a), gen(GenKind::Copy, a), ten(mk_box(f), mk_box(g)), gen(GenKind::Nabla, b),
                    gen(GenKind::Eps, b)});
}

TermPtr build_zero(Obj a, Obj b) {
    return mk_comp({gen(GenKind::Eta, a), gen(GenKind::Weak, a), gen(GenKind::U, b), gen(GenKind::Eps, b)});
}

TermPtr build_neg(const TermPtr& f, Ring ring) {
    require_typed(f, "build_neg");
    require_negatives(ring, "build_neg");
    return mk_comp({gen(GenKind::Eta, f->dom), gen(GenKind::S, f->dom), mk_box(f), gen(GenKind::Eps, f->cod)});
}

TermPtr build_phi(Obj a) {
    return mk_sum({ten(gen(GenKind::Eps, a), gen(GenKind::Weak, a)), ten(gen(GenKind::Weak, a), gen(GenKind::Eps, a))});
}

TermPtr build_nabla_from_m(Obj a) {
    Obj ba = bang_obj(a);
    return mk_comp({ten(gen(GenKind::Delta, a), gen(GenKind::Delta, a)), mk_gen(GenKind::M, {ba, ba}),
                    mk_box(build_phi(a))});
}

TermPtr build_u_from_m(Obj a) { return mk_comp({mk_gen(GenKind::MI), mk_box(mk_zero(unit_obj(), a))}); }

TermPtr build_m_from_nabla(Obj a, Obj b) {
    Obj ba = bang_obj(a), bb = bang_obj(b);
    Obj pair = tensor_obj({ba, bb});
    return mk_comp({
        ten(gen(GenKind::Delta, a), gen(GenKind::Delta, b)),
        ten(mk_box(ten(mk_id(ba), gen(GenKind::U, b))), mk_box(ten(gen(GenKind::U, a), mk_id(bb)))),
        gen(GenKind::Nabla, pair),
        gen(GenKind::Delta, pair),
        mk_box(gen(GenKind::Copy, pair)),
        mk_box(ten(mk_box(ten(gen(GenKind::Eps, a), gen(GenKind::Weak, b))),
                   mk_box(ten(gen(GenKind::Weak, a), gen(GenKind::Eps, b))))),
        mk_box(ten(gen(GenKind::Eps, a), gen(GenKind::Eps, b))),
    });
}

TermPtr build_mI_from_nabla() {
    Obj i = unit_obj();
    return mk_comp({gen(GenKind::U, i), gen(GenKind::Delta, i), mk_box(gen(GenKind::Weak, i))});
}

TermPtr build_d_from_eta(Obj a) {
    return mk_comp({ten(mk_id(bang_obj(a)), gen(GenKind::Eta, a)), gen(GenKind::Nabla, a)});
}

TermPtr build_eta_from_d(Obj a) { return mk_comp({ten(gen(GenKind::U, a), mk_id(a)), gen(GenKind::D, a)}); }

TermPtr build_antipode(Obj a, Ring ring, const Signature& sig) {
    require_negatives(ring, "build_antipode");
    auto lin = std::make_shared<LinMap>();
    lin->name = "minus_one";
    lin->dom = a;
    lin->cod = a;
    for (Elem x : basis_enum(a, elem_size_of(a), sig)) lin->entries.push_back({x, x, mpq_class(-1)});
    return mk_box(mk_lin(lin));
}

}  // namespace difflin
