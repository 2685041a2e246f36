#include "difflin/object.hpp"

#include <memory>
#include <mutex>
#include <unordered_map>

#include "difflin/errors.hpp"
#include "difflin/lexer.hpp"

namespace difflin {

namespace {

std::mutex pool_mutex;

std::unordered_map<std::string, std::unique_ptr<ObjNode>>& pool() {
    static std::unordered_map<std::string, std::unique_ptr<ObjNode>> p;
    return p;
}

Obj intern(ObjNode node) {
    std::lock_guard<std::mutex> lock(pool_mutex);
    auto& p = pool();
    auto it = p.find(node.text);
    if (it != p.end()) return it->second.get();
    auto owned = std::make_unique<ObjNode>(std::move(node));
    ObjNode* raw = owned.get();
    if (raw->kind == ObjKind::Tensor)
        raw->flat = raw->factors;
    else if (raw->kind != ObjKind::Unit)
        raw->flat = {raw};
    p.emplace(raw->text, std::move(owned));
    return raw;
}

}  // namespace

Obj base_obj(std::string_view name) {
    ObjNode n;
    n.kind = ObjKind::Base;
    n.name = std::string(name);
    n.text = n.name;
    return intern(std::move(n));
}

Obj unit_obj() {
    ObjNode n;
    n.kind = ObjKind::Unit;
    n.text = "I";
    return intern(std::move(n));
}

Obj tensor_obj(const std::vector<Obj>& parts) {
    std::vector<Obj> fs;
    for (Obj p : parts)
        for (Obj f : factors_of(p)) fs.push_back(f);
    if (fs.empty()) return unit_obj();
    if (fs.size() == 1) return fs[0];
    ObjNode n;
    n.kind = ObjKind::Tensor;
    n.factors = fs;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) n.text += "*";
        n.text += fs[i]->text;
    }
    return intern(std::move(n));
}

Obj bang_obj(Obj inner) {
    ObjNode n;
    n.kind = ObjKind::Bang;
    n.inner = inner;
    n.text = inner->kind == ObjKind::Tensor ? "!(" + inner->text + ")" : "!" + inner->text;
    return intern(std::move(n));
}

const std::vector<Obj>& factors_of(Obj o) { return o->flat; }

const std::string& to_string(Obj o) { return o->text; }

unsigned Signature::dim(const std::string& base) const {
    auto it = dims.find(base);
    if (it == dims.end()) throw TypeError("undeclared base object " + base);
    return it->second;
}

void Signature::declare(const std::string& base, unsigned d) {
    if (base == "I") throw ConfigError("I is the tensor unit and cannot be declared as a base");
    for (const auto& [name, _] : dims) {
        if (name == base) continue;
        std::string a = name, b = base;
        for (auto& c : a) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        for (auto& c : b) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (a == b) throw ConfigError("base names " + name + " and " + base + " differ only in case");
    }
    dims[base] = d;
}

std::vector<std::string> bases_of(Obj o) {
    std::vector<std::string> out;
    auto walk = [&](auto&& self, Obj x) -> void {
        switch (x->kind) {
        case ObjKind::Base:
            for (const auto& s : out)
                if (s == x->name) return;
            out.push_back(x->name);
            return;
        case ObjKind::Unit: return;
        case ObjKind::Tensor:
            for (Obj f : x->factors) self(self, f);
            return;
        case ObjKind::Bang: self(self, x->inner); return;
        }
    };
    walk(walk, o);
    return out;
}

namespace {

Obj parse_prefix(Lexer& lex, const Signature* sig) {
    if (lex.accept('!')) return bang_obj(parse_prefix(lex, sig));
    if (lex.accept('(')) {
        Obj o = parse_object(lex, sig);
        lex.expect(')');
        return o;
    }
    if (lex.peek().kind != Tok::Ident) lex.fail("expected object");
    std::size_t at = lex.pos();
    std::string name = lex.next().text;
    if (name == "I") return unit_obj();
    if (sig && !sig->has(name)) throw SyntaxError("unknown base object " + name, at);
    return base_obj(name);
}

}  // namespace

Obj parse_object(Lexer& lex, const Signature* sig) {
    std::vector<Obj> parts{parse_prefix(lex, sig)};
    while (lex.accept('*')) parts.push_back(parse_prefix(lex, sig));
    return tensor_obj(parts);
}

Obj parse_object(std::string_view src, const Signature* sig) {
    Lexer lex(src);
    Obj o = parse_object(lex, sig);
    if (lex.peek().kind != Tok::End) lex.fail("trailing input after object");
    return o;
}

}  // namespace difflin
