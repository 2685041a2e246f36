#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace difflin {

enum class ObjKind : std::uint8_t { Base, Unit, Tensor, Bang };

// Objects are hash-consed, so two normalized objects are equal iff their
// pointers are.
struct ObjNode {
    ObjKind kind;
    std::string name;                       // Base
    std::vector<const ObjNode*> factors;    // Tensor, length >= 2, no Unit/Tensor inside
    const ObjNode* inner = nullptr;         // Bang
    std::vector<const ObjNode*> flat;       // see factors_of
    std::string text;                       // printed form, also the interning key
};
using Obj = const ObjNode*;

Obj base_obj(std::string_view name);
Obj unit_obj();
// Flattens nested tensors and drops units.
Obj tensor_obj(const std::vector<Obj>& parts);
Obj bang_obj(Obj inner);

// The factor list of the normalized tensor: [] for I, the factors of a
// tensor, and [o] otherwise.
const std::vector<Obj>& factors_of(Obj o);

const std::string& to_string(Obj o);

struct Signature {
    std::map<std::string, unsigned> dims;

    bool has(const std::string& base) const { return dims.count(base) != 0; }
    unsigned dim(const std::string& base) const;
    void declare(const std::string& base, unsigned dim);
};

// Base names that appear in o, in first-occurrence order.
std::vector<std::string> bases_of(Obj o);

// Parses `obj := IDENT | "I" | obj "*" obj | "!" obj | "(" obj ")"`. When sig
// is given every base name must be declared.
Obj parse_object(std::string_view src, const Signature* sig = nullptr);

class Lexer;
// Parses one object from the token stream, stopping at the first token that
// cannot continue it.
Obj parse_object(Lexer& lex, const Signature* sig);

}  // namespace difflin
