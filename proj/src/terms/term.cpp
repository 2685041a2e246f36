#include "difflin/term.hpp"

#include <array>

namespace difflin {

namespace {

constexpr std::array<const char*, 11> kGenNames = {"delta", "eps", "copy", "weak", "m",  "mI",
                                                   "nabla", "u",   "eta",  "d",    "S"};

TermPtr make(Term t) { return std::make_shared<const Term>(std::move(t)); }

}  // namespace

const char* gen_name(GenKind g) { return kGenNames[static_cast<std::size_t>(g)]; }

std::optional<GenKind> gen_from_name(const std::string& s) {
    for (std::size_t i = 0; i < kGenNames.size(); ++i)
        if (s == kGenNames[i]) return static_cast<GenKind>(i);
    return std::nullopt;
}

unsigned gen_arity(GenKind g) {
    if (g == GenKind::M) return 2;
    if (g == GenKind::MI) return 0;
    return 1;
}

TermPtr mk_id(Obj a) { return make(Term{TermKind::Id, {}, {a}, {}, nullptr}); }

TermPtr mk_gen(GenKind g, std::vector<Obj> params) {
    return make(Term{TermKind::Gen, g, std::move(params), {}, nullptr});
}

TermPtr mk_sym(Obj a, Obj b) { return make(Term{TermKind::Sym, {}, {a, b}, {}, nullptr}); }

TermPtr mk_comp(std::vector<TermPtr> kids) {
    if (kids.size() == 1) return kids[0];
    return make(Term{TermKind::Comp, {}, {}, std::move(kids), nullptr});
}

TermPtr mk_ten(std::vector<TermPtr> kids) {
    if (kids.size() == 1) return kids[0];
    return make(Term{TermKind::Ten, {}, {}, std::move(kids), nullptr});
}

TermPtr mk_sum(std::vector<TermPtr> kids) {
    if (kids.size() == 1) return kids[0];
    return make(Term{TermKind::Sum, {}, {}, std::move(kids), nullptr});
}

TermPtr mk_box(TermPtr inner) { return make(Term{TermKind::Box, {}, {}, {std::move(inner)}, nullptr}); }

TermPtr mk_neg(TermPtr inner) { return make(Term{TermKind::Neg, {}, {}, {std::move(inner)}, nullptr}); }

TermPtr mk_zero(Obj dom, Obj cod) { return make(Term{TermKind::Zero, {}, {dom, cod}, {}, nullptr}); }

TermPtr mk_lin(LinPtr lin) { return make(Term{TermKind::Lin, {}, {}, {}, std::move(lin)}); }

bool term_equal(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (a->kind != b->kind || a->objs != b->objs || a->kids.size() != b->kids.size()) return false;
    if (a->kind == TermKind::Gen && a->gen != b->gen) return false;
    if (a->kind == TermKind::Lin) {
        const LinMap& x = *a->lin;
        const LinMap& y = *b->lin;
        if (x.name != y.name || x.dom != y.dom || x.cod != y.cod || x.entries.size() != y.entries.size())
            return false;
        for (std::size_t i = 0; i < x.entries.size(); ++i)
            if (x.entries[i].in != y.entries[i].in || x.entries[i].out != y.entries[i].out ||
                x.entries[i].coef != y.entries[i].coef)
                return false;
    }
    for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (!term_equal(a->kids[i], b->kids[i])) return false;
    return true;
}

bool is_sum_free(const TermPtr& t) {
    if (t->kind == TermKind::Sum || t->kind == TermKind::Neg || t->kind == TermKind::Zero) return false;
    for (const auto& k : t->kids)
        if (!is_sum_free(k)) return false;
    return true;
}

TermPtr substitute_lins(const TermPtr& t, const std::vector<LinPtr>& subst) {
    if (t->kind == TermKind::Lin) {
        for (const auto& l : subst)
            if (l->name == t->lin->name) return mk_lin(l);
        return t;
    }
    if (t->kids.empty()) return t;
    std::vector<TermPtr> kids;
    bool changed = false;
    for (const auto& k : t->kids) {
        kids.push_back(substitute_lins(k, subst));
        changed = changed || kids.back() != k;
    }
    if (!changed) return t;
    Term copy = *t;
    copy.kids = std::move(kids);
    copy.dom = copy.cod = nullptr;
    return std::make_shared<const Term>(std::move(copy));
}

}  // namespace difflin
