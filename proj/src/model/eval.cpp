#include "difflin/eval.hpp"

#include <algorithm>

#include "difflin/errors.hpp"
#include "difflin/typing.hpp"

namespace difflin {

namespace {

void add_into(Vec& v, Elem x, const Coef& c) {
    auto [it, fresh] = v.try_emplace(x, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) v.erase(it);
    }
}

void normalize(Ring r, Vec& v) {
    for (auto it = v.begin(); it != v.end();) {
        it->second = ring_norm(r, it->second);
        if (sgn(it->second) == 0)
            it = v.erase(it);
        else
            ++it;
    }
}

mpz_class fact(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace

std::size_t Evaluator::memo_size() const {
    std::size_t n = 0;
    for (const auto& [_, m] : memo_) n += m.size();
    return n;
}

const Vec& Evaluator::row(const TermPtr& t, Elem out) {
    if (!t->typed()) throw TypeError("evaluation needs an annotated term");
    auto& per_term = memo_[t.get()];
    if (per_term.empty()) roots_.push_back(t);
    auto it = per_term.find(out);
    if (it != per_term.end()) return it->second;
    Vec v = compute(t, out);
    return memo_[t.get()].emplace(out, std::move(v)).first->second;
}

Coef Evaluator::entry(const TermPtr& t, Elem in, Elem out) {
    const Vec& r = row(t, out);
    auto it = r.find(in);
    return it == r.end() ? Coef(0) : it->second;
}

const Row& Evaluator::lin_row(const LinMap& lin, Elem out) {
    auto& idx = lin_index_[&lin];
    if (idx.empty()) {
        for (const auto& e : lin.entries) {
            Coef c = literal_embed(cfg_.ring, e.coef);
            if (sgn(c) != 0) idx[e.out].emplace_back(e.in, c);
        }
        idx[nullptr];  // marks the index as built
    }
    static const Row empty;
    auto it = idx.find(out);
    return it == idx.end() ? empty : it->second;
}

Vec Evaluator::compute(const TermPtr& t, Elem out) {
    const Ring R = cfg_.ring;
    Vec v;
    switch (t->kind) {
    case TermKind::Id: v.emplace(out, 1); return v;
    case TermKind::Sym: {
        Obj a = t->objs[0], b = t->objs[1];
        auto parts = split_by({b, a}, out);
        v.emplace(join_by({a, b}, {parts[1], parts[0]}), 1);
        return v;
    }
    case TermKind::Gen:
        for (auto& [x, c] : gen_row(cfg_, t->gen, t->objs, out)) add_into(v, x, c);
        return v;
    case TermKind::Lin:
        for (const auto& [x, c] : lin_row(*t->lin, out)) add_into(v, x, c);
        return v;
    case TermKind::Zero: return v;
    case TermKind::Sum:
        for (const auto& k : t->kids)
            for (const auto& [x, c] : row(k, out)) add_into(v, x, c);
        normalize(R, v);
        return v;
    case TermKind::Neg:
        for (const auto& [x, c] : row(t->kids[0], out)) v.emplace(x, ring_neg(R, c));
        return v;
    case TermKind::Comp: {
        Vec cur;
        cur.emplace(out, 1);
        for (auto k = t->kids.rbegin(); k != t->kids.rend() && !cur.empty(); ++k) {
            Vec next;
            for (const auto& [z, c] : cur)
                for (const auto& [x, c2] : row(*k, z)) add_into(next, x, c * c2);
            normalize(R, next);
            cur = std::move(next);
        }
        return cur;
    }
    case TermKind::Ten: {
        std::vector<Obj> doms, cods;
        for (const auto& k : t->kids) {
            doms.push_back(k->dom);
            cods.push_back(k->cod);
        }
        auto parts = split_by(cods, out);
        std::vector<const Vec*> rows;
        for (std::size_t i = 0; i < t->kids.size(); ++i) {
            rows.push_back(&row(t->kids[i], parts[i]));
            if (rows.back()->empty()) return v;
        }
        std::vector<Elem> acc(rows.size());
        auto rec = [&](auto&& self, std::size_t i, const Coef& c) -> void {
            if (i == rows.size()) {
                add_into(v, join_by(doms, acc), c);
                return;
            }
            for (const auto& [x, c2] : *rows[i]) {
                acc[i] = x;
                self(self, i + 1, c * c2);
            }
        };
        rec(rec, 0, Coef(1));
        normalize(R, v);
        return v;
    }
    case TermKind::Box: {
        if (out->kind != ElemKind::MSet) throw TypeError("bang: expected a multiset element");
        const TermPtr& f = t->kids[0];
        // For each distinct output y with multiplicity r, pick how many of the
        // r copies come from each preimage x_j of y: r!/prod k_j! ordered
        // choices, each weighing prod c_j^{k_j}.
        struct Partial {
            std::vector<Elem> items;
            Coef c;
        };
        std::vector<Partial> acc{{{}, Coef(1)}};
        for (const auto& [y, r] : mset_counts(out)) {
            const Vec& fy = row(f, y);
            std::vector<std::pair<Elem, Coef>> pre(fy.begin(), fy.end());
            std::sort(pre.begin(), pre.end(), [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
            if (pre.empty()) return v;
            std::vector<Partial> next;
            std::vector<unsigned> k(pre.size(), 0);
            auto rec = [&](auto&& self, std::size_t j, unsigned left) -> void {
                if (j + 1 == pre.size()) {
                    k[j] = left;
                    Coef w = Coef(fact(r));
                    std::vector<Elem> items;
                    for (std::size_t i = 0; i < pre.size(); ++i) {
                        w /= Coef(fact(k[i]));
                        Coef p = 1;
                        for (unsigned e = 0; e < k[i]; ++e) p *= pre[i].second;
                        w *= p;
                        for (unsigned e = 0; e < k[i]; ++e) items.push_back(pre[i].first);
                    }
                    for (const auto& part : acc) {
                        Partial q{part.items, part.c * w};
                        q.items.insert(q.items.end(), items.begin(), items.end());
                        next.push_back(std::move(q));
                    }
                    return;
                }
                for (unsigned take = 0; take <= left; ++take) {
                    k[j] = take;
                    self(self, j + 1, left - take);
                }
            };
            rec(rec, 0, r);
            acc = std::move(next);
        }
        const bool mono = cfg_.effective_basis() == Basis::Monomial;
        mpz_class out_fact = mono ? mset_factorial(out) : mpz_class(1);
        for (auto& part : acc) {
            Elem m = mset_elem(std::move(part.items));
            Coef c = part.c;
            if (mono) {
                c *= Coef(mset_factorial(m));
                c /= Coef(out_fact);
            }
            add_into(v, m, c);
        }
        normalize(R, v);
        return v;
    }
    }
    return v;
}

Verdict equal_upto(Evaluator& ev, const TermPtr& a, const TermPtr& b, unsigned cap) {
    if (a->dom != b->dom || a->cod != b->cod)
        throw TypeError("equal_upto: sides have different types (" + to_string(a->dom) + " -> " + to_string(a->cod) +
                        " vs " + to_string(b->dom) + " -> " + to_string(b->cod) + ")");
    Verdict verdict;
    for (Elem out : basis_enum(a->cod, cap, ev.config().sig)) {
        const Vec& ra = ev.row(a, out);
        const Vec& rb = ev.row(b, out);
        auto consider = [&](Elem in) {
            if (in->size > cap) return;
            Coef x = ev.entry(a, in, out), y = ev.entry(b, in, out);
            if (x == y) return;
            if (verdict.cex) {
                int c = compare(in, verdict.cex->in);
                if (c > 0 || (c == 0 && compare(out, verdict.cex->out) >= 0)) return;
            }
            verdict.pass = false;
            verdict.cex = Counterexample{in, out, x, y};
        };
        for (const auto& [in, _] : ra) consider(in);
        for (const auto& [in, _] : rb) consider(in);
    }
    return verdict;
}

Coef eval_entry(const TermPtr& t, Elem in, Elem out, const ModelConfig& cfg) {
    TermPtr a = t->typed() ? t : annotate(t, &cfg.sig);
    if (!elem_has_shape(a->dom, in, cfg.sig) || !elem_has_shape(a->cod, out, cfg.sig))
        throw TypeError("entry does not match the term's type " + to_string(a->dom) + " -> " + to_string(a->cod));
    Evaluator ev(cfg);
    return ev.entry(a, in, out);
}

}  // namespace difflin
