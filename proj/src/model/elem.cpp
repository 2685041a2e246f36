#include "difflin/elem.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <memory>
#include <mutex>
#include <unordered_set>

#include "difflin/errors.hpp"
#include "difflin/lexer.hpp"

namespace difflin {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

struct NodeHash {
    std::size_t operator()(const ElemNode* n) const { return n->hash; }
};

struct NodeEq {
    bool operator()(const ElemNode* a, const ElemNode* b) const {
        return a->kind == b->kind && a->index == b->index && a->base == b->base &&
               a->items == b->items;
    }
};

std::mutex pool_mutex;

std::unordered_set<const ElemNode*, NodeHash, NodeEq>& pool() {
    static std::unordered_set<const ElemNode*, NodeHash, NodeEq> p;
    return p;
}

Elem intern(ElemNode&& n) {
    std::size_t h = std::hash<int>()(static_cast<int>(n.kind));
    h = mix(h, std::hash<std::string>()(n.base));
    h = mix(h, n.index);
    for (Elem c : n.items) h = mix(h, c->hash);
    n.hash = h;
    std::lock_guard<std::mutex> lock(pool_mutex);
    auto& p = pool();
    auto it = p.find(&n);
    if (it != p.end()) return *it;
    auto* owned = new ElemNode(std::move(n));  // lives for the process
    p.insert(owned);
    return owned;
}

}  // namespace

Elem atom_elem(std::string_view base, unsigned index) {
    ElemNode n;
    n.kind = ElemKind::Atom;
    n.base = std::string(base);
    n.index = index;
    n.size = 1;
    n.weight = 1;
    return intern(std::move(n));
}

Elem unit_elem() {
    static Elem u = [] {
        ElemNode n;
        n.kind = ElemKind::Unit;
        n.size = 1;
        n.weight = 0;
        return intern(std::move(n));
    }();
    return u;
}

Elem tuple_elem(const std::vector<Elem>& items) {
    ElemNode n;
    n.kind = ElemKind::Tuple;
    n.items = items;
    n.size = 1;
    for (Elem c : items) {
        n.size += c->size;
        n.weight += c->weight;
    }
    return intern(std::move(n));
}

Elem mset_elem(std::vector<Elem> items) {
    std::sort(items.begin(), items.end(), ElemLess());
    ElemNode n;
    n.kind = ElemKind::MSet;
    n.items = std::move(items);
    n.size = 1;
    for (Elem c : n.items) {
        n.size += c->size;
        n.weight += c->weight;
    }
    return intern(std::move(n));
}

Elem empty_mset() {
    static Elem e = mset_elem({});
    return e;
}

int compare(Elem a, Elem b) {
    if (a == b) return 0;
    if (a->size != b->size) return a->size < b->size ? -1 : 1;
    if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
    if (int c = a->base.compare(b->base)) return c < 0 ? -1 : 1;
    if (a->index != b->index) return a->index < b->index ? -1 : 1;
    std::size_t n = std::min(a->items.size(), b->items.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = compare(a->items[i], b->items[i])) return c;
    if (a->items.size() != b->items.size()) return a->items.size() < b->items.size() ? -1 : 1;
    return 0;
}

Elem mset_union(Elem a, Elem b) {
    std::vector<Elem> items;
    items.reserve(a->items.size() + b->items.size());
    std::merge(a->items.begin(), a->items.end(), b->items.begin(), b->items.end(),
               std::back_inserter(items), ElemLess());
    return mset_elem(std::move(items));
}

std::vector<std::pair<Elem, unsigned>> mset_counts(Elem m) {
    std::vector<std::pair<Elem, unsigned>> out;
    for (Elem x : m->items) {
        if (!out.empty() && out.back().first == x)
            ++out.back().second;
        else
            out.emplace_back(x, 1);
    }
    return out;
}

std::vector<Elem> flat_parts(Obj o, Elem e) {
    const auto& fs = factors_of(o);
    if (fs.empty()) return {};
    if (fs.size() == 1) return {e};
    return e->items;
}

Elem join_flat(Obj o, const std::vector<Elem>& parts) {
    (void)o;
    if (parts.empty()) return unit_elem();
    if (parts.size() == 1) return parts[0];
    return tuple_elem(parts);
}

std::vector<Elem> split_by(const std::vector<Obj>& objs, Elem e) {
    std::size_t total = 0;
    for (Obj o : objs) total += factors_of(o).size();
    std::vector<Elem> flat;
    if (total == 1)
        flat = {e};
    else if (total > 1)
        flat = e->items;
    std::vector<Elem> out;
    out.reserve(objs.size());
    std::size_t at = 0;
    for (Obj o : objs) {
        std::size_t k = factors_of(o).size();
        std::vector<Elem> part(flat.begin() + static_cast<std::ptrdiff_t>(at),
                               flat.begin() + static_cast<std::ptrdiff_t>(at + k));
        out.push_back(join_flat(o, part));
        at += k;
    }
    return out;
}

Elem join_by(const std::vector<Obj>& objs, const std::vector<Elem>& parts) {
    std::vector<Elem> flat;
    for (std::size_t i = 0; i < objs.size(); ++i) {
        std::size_t k = factors_of(objs[i]).size();
        if (k == 1)
            flat.push_back(parts[i]);
        else if (k > 1)
            flat.insert(flat.end(), parts[i]->items.begin(), parts[i]->items.end());
    }
    if (flat.empty()) return unit_elem();
    if (flat.size() == 1) return flat[0];
    return tuple_elem(flat);
}

bool elem_has_shape(Obj o, Elem e, const Signature& sig) {
    switch (o->kind) {
    case ObjKind::Base:
        return e->kind == ElemKind::Atom && e->base == o->name && sig.has(o->name) &&
               e->index < sig.dim(o->name);
    case ObjKind::Unit: return e->kind == ElemKind::Unit;
    case ObjKind::Tensor:
        if (e->kind != ElemKind::Tuple || e->items.size() != o->factors.size()) return false;
        for (std::size_t i = 0; i < o->factors.size(); ++i)
            if (!elem_has_shape(o->factors[i], e->items[i], sig)) return false;
        return true;
    case ObjKind::Bang:
        if (e->kind != ElemKind::MSet) return false;
        for (Elem x : e->items)
            if (!elem_has_shape(o->inner, x, sig)) return false;
        return true;
    }
    return false;
}

std::vector<Elem> basis_enum(Obj o, unsigned cap, const Signature& sig) {
    std::vector<Elem> out;
    if (cap == 0) return out;
    switch (o->kind) {
    case ObjKind::Base:
        for (unsigned i = 0; i < sig.dim(o->name); ++i) out.push_back(atom_elem(o->name, i));
        break;
    case ObjKind::Unit: out.push_back(unit_elem()); break;
    case ObjKind::Tensor: {
        const auto& fs = o->factors;
        std::vector<Elem> acc;
        auto rec = [&](auto&& self, std::size_t i, unsigned budget) -> void {
            if (i == fs.size()) {
                out.push_back(tuple_elem(acc));
                return;
            }
            unsigned rest = static_cast<unsigned>(fs.size() - i - 1);
            if (budget < rest + 1) return;
            for (Elem e : basis_enum(fs[i], budget - rest, sig)) {
                acc.push_back(e);
                self(self, i + 1, budget - e->size);
                acc.pop_back();
            }
        };
        rec(rec, 0, cap - 1);
        break;
    }
    case ObjKind::Bang: {
        std::vector<Elem> inner = cap >= 2 ? basis_enum(o->inner, cap - 1, sig) : std::vector<Elem>{};
        std::vector<Elem> acc;
        auto rec = [&](auto&& self, std::size_t start, unsigned budget) -> void {
            out.push_back(mset_elem(acc));
            for (std::size_t j = start; j < inner.size(); ++j) {
                if (inner[j]->size > budget) continue;
                acc.push_back(inner[j]);
                self(self, j, budget - inner[j]->size);
                acc.pop_back();
            }
        };
        rec(rec, 0, cap - 1);
        break;
    }
    }
    std::sort(out.begin(), out.end(), ElemLess());
    return out;
}

namespace {

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

bool ends_with_digit(const std::string& s) {
    return !s.empty() && std::isdigit(static_cast<unsigned char>(s.back()));
}

}  // namespace

std::string format_elem(Elem e, const Signature& sig) {
    switch (e->kind) {
    case ElemKind::Atom: {
        std::string s = lower(e->base);
        unsigned d = sig.has(e->base) ? sig.dim(e->base) : 2;
        if (d >= 2 || e->index > 0) {
            if (ends_with_digit(s)) s += "_";
            s += std::to_string(e->index + 1);
        }
        return s;
    }
    case ElemKind::Unit: return "*";
    case ElemKind::Tuple:
    case ElemKind::MSet: {
        std::string s = e->kind == ElemKind::Tuple ? "(" : "[";
        for (std::size_t i = 0; i < e->items.size(); ++i) {
            if (i) s += ",";
            s += format_elem(e->items[i], sig);
        }
        s += e->kind == ElemKind::Tuple ? ")" : "]";
        return s;
    }
    }
    return "?";
}

namespace {

Elem parse_elem_rec(Lexer& lex, Obj o, const Signature& sig) {
    switch (o->kind) {
    case ObjKind::Base: {
        if (lex.peek().kind != Tok::Ident) lex.fail("expected an element of " + o->name);
        std::size_t at = lex.pos();
        std::string t = lex.next().text;
        std::string stem = lower(o->name);
        unsigned d = sig.dim(o->name);
        if (t.rfind(stem, 0) != 0) throw SyntaxError("'" + t + "' is not an element of " + o->name, at);
        std::string rest = t.substr(stem.size());
        if (!rest.empty() && rest[0] == '_') rest = rest.substr(1);
        if (rest.empty()) {
            if (d != 1) throw SyntaxError("'" + t + "' needs an index, " + o->name + " has dimension " + std::to_string(d), at);
            return atom_elem(o->name, 0);
        }
        for (char c : rest)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw SyntaxError("'" + t + "' is not an element of " + o->name, at);
        unsigned long k = std::stoul(rest);
        if (k < 1 || k > d)
            throw SyntaxError("index of '" + t + "' out of range for " + o->name, at);
        return atom_elem(o->name, static_cast<unsigned>(k - 1));
    }
    case ObjKind::Unit:
        lex.expect('*');
        return unit_elem();
    case ObjKind::Tensor: {
        lex.expect('(');
        std::vector<Elem> items;
        for (std::size_t i = 0; i < o->factors.size(); ++i) {
            if (i) lex.expect(',');
            items.push_back(parse_elem_rec(lex, o->factors[i], sig));
        }
        lex.expect(')');
        return tuple_elem(items);
    }
    case ObjKind::Bang: {
        lex.expect('[');
        std::vector<Elem> items;
        if (!lex.accept(']')) {
            do {
                items.push_back(parse_elem_rec(lex, o->inner, sig));
            } while (lex.accept(','));
            lex.expect(']');
        }
        return mset_elem(std::move(items));
    }
    }
    lex.fail("bad object");
}

}  // namespace

Elem parse_elem(std::string_view src, Obj o, const Signature& sig) {
    Lexer lex(src);
    Elem e = parse_elem_rec(lex, o, sig);
    if (lex.peek().kind != Tok::End) lex.fail("trailing input after element");
    return e;
}

}  // namespace difflin
