#include "difflin/model.hpp"

#include <algorithm>
#include <set>

#include "difflin/errors.hpp"
#include "difflin/typing.hpp"

namespace difflin {

const char* mutation_name(Mutation m) {
    switch (m) {
    case Mutation::ScaleEta2: return "scale_eta_by_2";
    case Mutation::FlatBialgebra: return "delta_without_binomial_copy";
    case Mutation::DropS: return "drop_S";
    case Mutation::SwapD: return "swap_d";
    }
    return "?";
}

std::optional<Mutation> mutation_from_name(const std::string& s) {
    for (Mutation m : {Mutation::ScaleEta2, Mutation::FlatBialgebra, Mutation::DropS, Mutation::SwapD})
        if (s == mutation_name(m)) return m;
    return std::nullopt;
}

Basis ModelConfig::effective_basis() const {
    if (basis) return *basis;
    return (ring == Ring::Rational || ring == Ring::Boolean) ? Basis::Monomial : Basis::Divided;
}

bool ModelConfig::mutated(Mutation m) const {
    return std::find(mutations.begin(), mutations.end(), m) != mutations.end();
}

namespace {

mpz_class fact(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Coef frac(const mpz_class& num, const mpz_class& den) {
    Coef q(num, den);
    q.canonicalize();
    return q;
}

void require_mset(Elem e, const char* what) {
    if (e->kind != ElemKind::MSet) throw TypeError(std::string(what) + ": expected a multiset element");
}

// Calls f(m1, m2, prod_x C(m(x), m1(x))) for every split m = m1 + m2.
template <class F>
void for_each_split(Elem m, F&& f) {
    auto counts = mset_counts(m);
    std::vector<unsigned> pick(counts.size(), 0);
    while (true) {
        std::vector<Elem> a, b;
        mpz_class c = 1;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            for (unsigned j = 0; j < pick[i]; ++j) a.push_back(counts[i].first);
            for (unsigned j = pick[i]; j < counts[i].second; ++j) b.push_back(counts[i].first);
            c *= binom(counts[i].second, pick[i]);
        }
        f(mset_elem(std::move(a)), mset_elem(std::move(b)), c);
        std::size_t i = 0;
        while (i < counts.size() && pick[i] == counts[i].second) pick[i++] = 0;
        if (i == counts.size()) break;
        ++pick[i];
    }
}

unsigned count_of(Elem m, Elem x) {
    return static_cast<unsigned>(std::count(m->items.begin(), m->items.end(), x));
}

Elem remove_one(Elem m, Elem x) {
    std::vector<Elem> items = m->items;
    items.erase(std::find(items.begin(), items.end(), x));
    return mset_elem(std::move(items));
}

}  // namespace

mpz_class mset_factorial(Elem m) {
    mpz_class r = 1;
    for (const auto& [x, n] : mset_counts(m)) r *= fact(n);
    return r;
}

Row gen_row(const ModelConfig& cfg, GenKind g, const std::vector<Obj>& p, Elem out) {
    const Ring R = cfg.ring;
    const bool mono = cfg.effective_basis() == Basis::Monomial;
    Row row;
    auto emit = [&](Elem in, const Coef& c) {
        Coef v = ring_norm(R, c);
        if (sgn(v) != 0) row.emplace_back(in, v);
    };
    switch (g) {
    case GenKind::Eps:
        emit(mset_elem({out}), 1);
        break;
    case GenKind::Weak:
        emit(empty_mset(), 1);
        break;
    case GenKind::Eta:
        require_mset(out, "eta");
        if (out->items.size() == 1) emit(out->items[0], cfg.mutated(Mutation::ScaleEta2) ? 2 : 1);
        break;
    case GenKind::U:
        require_mset(out, "u");
        if (out->items.empty()) emit(unit_elem(), 1);
        break;
    case GenKind::Copy: {
        if (out->kind != ElemKind::Tuple || out->items.size() != 2) throw TypeError("copy: expected a pair");
        Elem m1 = out->items[0], m2 = out->items[1];
        Elem m = mset_union(m1, m2);
        Coef c = 1;
        if (mono && !cfg.mutated(Mutation::FlatBialgebra))
            for (const auto& [x, n] : mset_counts(m)) c *= binom(n, count_of(m1, x));
        emit(m, c);
        break;
    }
    case GenKind::Nabla: {
        require_mset(out, "nabla");
        const bool weighted = !mono && !cfg.mutated(Mutation::FlatBialgebra);
        for_each_split(out, [&](Elem a, Elem b, const mpz_class& c) {
            emit(tuple_elem({a, b}), weighted ? Coef(c) : Coef(1));
        });
        break;
    }
    case GenKind::Delta: {
        require_mset(out, "delta");
        std::vector<Elem> all;
        mpz_class den = 1;
        for (Elem block : out->items) {
            require_mset(block, "delta");
            all.insert(all.end(), block->items.begin(), block->items.end());
            den *= mset_factorial(block);
        }
        Elem m = mset_elem(std::move(all));
        den *= mset_factorial(out);
        emit(m, mono ? frac(mset_factorial(m), den) : Coef(1));
        break;
    }
    case GenKind::M: {
        require_mset(out, "m");
        std::vector<Elem> xs, ys;
        for (Elem pair : out->items) {
            auto parts = split_by({p[0], p[1]}, pair);
            xs.push_back(parts[0]);
            ys.push_back(parts[1]);
        }
        Elem m = mset_elem(std::move(xs));
        Elem n = mset_elem(std::move(ys));
        Coef c = mono ? frac(mset_factorial(m) * mset_factorial(n), mset_factorial(out)) : Coef(1);
        emit(tuple_elem({m, n}), c);
        break;
    }
    case GenKind::MI:
        require_mset(out, "mI");
        emit(unit_elem(), mono ? frac(1, fact(out->items.size())) : Coef(1));
        break;
    case GenKind::D: {
        require_mset(out, "d");
        Obj bA = bang_obj(p[0]);
        if (cfg.mutated(Mutation::SwapD)) {
            if (out->items.size() == 1) emit(join_by({bA, p[0]}, {empty_mset(), out->items[0]}), 1);
            break;
        }
        for (const auto& [x, n] : mset_counts(out))
            emit(join_by({bA, p[0]}, {remove_one(out, x), x}), mono ? Coef(1) : Coef(n));
        break;
    }
    case GenKind::S:
        require_mset(out, "S");
        if (cfg.mutated(Mutation::DropS)) {
            emit(out, 1);
            break;
        }
        if (!semiring(R).has_negatives)
            throw RingError(std::string("the antipode S needs negatives, unavailable over ") + ring_name(R));
        emit(out, out->items.size() % 2 ? -1 : 1);
        break;
    }
    return row;
}

Coef gen_entry(const ModelConfig& cfg, GenKind g, const std::vector<Obj>& params, Elem in, Elem out) {
    auto [dom, cod] = gen_type(g, params);
    if (!elem_has_shape(dom, in, cfg.sig) || !elem_has_shape(cod, out, cfg.sig))
        throw TypeError(std::string("entry shape does not match the typing of ") + gen_name(g));
    for (const auto& [x, c] : gen_row(cfg, g, params, out))
        if (x == in) return c;
    return 0;
}

std::optional<std::vector<Elem>> gen_forward(const ModelConfig& cfg, GenKind g, const std::vector<Obj>& p,
                                             Elem in) {
    std::vector<Elem> out;
    switch (g) {
    case GenKind::Delta:
    case GenKind::MI: return std::nullopt;
    case GenKind::Eps:
        if (in->items.size() == 1) out.push_back(in->items[0]);
        break;
    case GenKind::Weak:
        if (in->items.empty()) out.push_back(unit_elem());
        break;
    case GenKind::Eta: out.push_back(mset_elem({in})); break;
    case GenKind::U: out.push_back(empty_mset()); break;
    case GenKind::Copy:
        for_each_split(in, [&](Elem a, Elem b, const mpz_class&) { out.push_back(tuple_elem({a, b})); });
        break;
    case GenKind::Nabla: out.push_back(mset_union(in->items[0], in->items[1])); break;
    case GenKind::M: {
        Elem m = in->items[0], n = in->items[1];
        if (m->items.size() != n->items.size()) break;
        std::vector<Elem> perm = n->items;  // sorted, so next_permutation visits each arrangement once
        std::set<Elem> seen;
        do {
            std::vector<Elem> pairs;
            for (std::size_t i = 0; i < perm.size(); ++i) pairs.push_back(join_by({p[0], p[1]}, {m->items[i], perm[i]}));
            seen.insert(mset_elem(std::move(pairs)));
        } while (std::next_permutation(perm.begin(), perm.end(), ElemLess()));
        out.assign(seen.begin(), seen.end());
        break;
    }
    case GenKind::D: {
        auto parts = split_by({bang_obj(p[0]), p[0]}, in);
        if (cfg.mutated(Mutation::SwapD)) {
            if (parts[0]->items.empty()) out.push_back(mset_elem({parts[1]}));
        } else {
            out.push_back(mset_union(parts[0], mset_elem({parts[1]})));
        }
        break;
    }
    case GenKind::S: out.push_back(in); break;
    }
    std::sort(out.begin(), out.end(), ElemLess());
    return out;
}

}  // namespace difflin
