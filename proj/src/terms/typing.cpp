#include "difflin/typing.hpp"

#include "difflin/errors.hpp"
#include "difflin/printer.hpp"

namespace difflin {

namespace {

void check_obj(Obj o, const Signature* sig) {
    if (!sig) return;
    for (const auto& b : bases_of(o))
        if (!sig->has(b)) throw TypeError("undeclared base object " + b);
}

TermPtr with_type(const TermPtr& t, std::vector<TermPtr> kids, Obj dom, Obj cod) {
    Term copy = *t;
    copy.kids = std::move(kids);
    copy.dom = dom;
    copy.cod = cod;
    return std::make_shared<const Term>(std::move(copy));
}

}  // namespace

std::pair<Obj, Obj> gen_type(GenKind g, const std::vector<Obj>& p) {
    if (p.size() != gen_arity(g))
        throw TypeError(std::string(gen_name(g)) + " expects " + std::to_string(gen_arity(g)) + " object parameter(s)");
    Obj I = unit_obj();
    switch (g) {
    case GenKind::Delta: return {bang_obj(p[0]), bang_obj(bang_obj(p[0]))};
    case GenKind::Eps: return {bang_obj(p[0]), p[0]};
    case GenKind::Copy: return {bang_obj(p[0]), tensor_obj({bang_obj(p[0]), bang_obj(p[0])})};
    case GenKind::Weak: return {bang_obj(p[0]), I};
    case GenKind::M: return {tensor_obj({bang_obj(p[0]), bang_obj(p[1])}), bang_obj(tensor_obj({p[0], p[1]}))};
    case GenKind::MI: return {I, bang_obj(I)};
    case GenKind::Nabla: return {tensor_obj({bang_obj(p[0]), bang_obj(p[0])}), bang_obj(p[0])};
    case GenKind::U: return {I, bang_obj(p[0])};
    case GenKind::Eta: return {p[0], bang_obj(p[0])};
    case GenKind::D: return {tensor_obj({bang_obj(p[0]), p[0]}), bang_obj(p[0])};
    case GenKind::S: return {bang_obj(p[0]), bang_obj(p[0])};
    }
    throw TypeError("unknown generator");
}

TermPtr annotate(const TermPtr& t, const Signature* sig) {
    switch (t->kind) {
    case TermKind::Id:
        check_obj(t->objs[0], sig);
        return with_type(t, {}, t->objs[0], t->objs[0]);
    case TermKind::Sym:
        check_obj(t->objs[0], sig);
        check_obj(t->objs[1], sig);
        return with_type(t, {}, tensor_obj({t->objs[0], t->objs[1]}), tensor_obj({t->objs[1], t->objs[0]}));
    case TermKind::Gen: {
        for (Obj o : t->objs) check_obj(o, sig);
        auto [d, c] = gen_type(t->gen, t->objs);
        return with_type(t, {}, d, c);
    }
    case TermKind::Zero:
        check_obj(t->objs[0], sig);
        check_obj(t->objs[1], sig);
        return with_type(t, {}, t->objs[0], t->objs[1]);
    case TermKind::Lin:
        if (!t->lin->dom || !t->lin->cod) throw TypeError("lin " + t->lin->name + " has no declared type");
        check_obj(t->lin->dom, sig);
        check_obj(t->lin->cod, sig);
        return with_type(t, {}, t->lin->dom, t->lin->cod);
    default: break;
    }
    std::vector<TermPtr> kids;
    for (const auto& k : t->kids) kids.push_back(annotate(k, sig));
    switch (t->kind) {
    case TermKind::Comp:
        for (std::size_t i = 0; i + 1 < kids.size(); ++i)
            if (kids[i]->cod != kids[i + 1]->dom)
                throw TypeError("cannot compose " + pretty_print(kids[i]) + " : " + to_string(kids[i]->dom) +
                                " -> " + to_string(kids[i]->cod) + " with " + pretty_print(kids[i + 1]) + " : " +
                                to_string(kids[i + 1]->dom) + " -> " + to_string(kids[i + 1]->cod) + " (" +
                                to_string(kids[i]->cod) + " vs " + to_string(kids[i + 1]->dom) + ")");
        return with_type(t, kids, kids.front()->dom, kids.back()->cod);
    case TermKind::Ten: {
        std::vector<Obj> ds, cs;
        for (const auto& k : kids) {
            ds.push_back(k->dom);
            cs.push_back(k->cod);
        }
        return with_type(t, kids, tensor_obj(ds), tensor_obj(cs));
    }
    case TermKind::Box: return with_type(t, kids, bang_obj(kids[0]->dom), bang_obj(kids[0]->cod));
    case TermKind::Sum:
        for (const auto& k : kids)
            if (k->dom != kids[0]->dom || k->cod != kids[0]->cod)
                throw TypeError("summands of different types: " + to_string(kids[0]->dom) + " -> " +
                                to_string(kids[0]->cod) + " and " + to_string(k->dom) + " -> " + to_string(k->cod));
        return with_type(t, kids, kids[0]->dom, kids[0]->cod);
    case TermKind::Neg: return with_type(t, kids, kids[0]->dom, kids[0]->cod);
    default: break;
    }
    throw TypeError("unexpected term node");
}

std::pair<Obj, Obj> infer_type(const TermPtr& t, const Signature* sig) {
    TermPtr a = annotate(t, sig);
    return {a->dom, a->cod};
}

}  // namespace difflin
