#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "difflin/object.hpp"

namespace difflin {

enum class ElemKind : std::uint8_t { Atom, Unit, Tuple, MSet };

// Basis elements are hash-consed like objects: pointer equality is
// structural equality, and a multiset's items are kept in canonical order.
struct ElemNode {
    ElemKind kind;
    std::string base;                       // Atom
    unsigned index = 0;                     // Atom, 0-based
    std::vector<const ElemNode*> items;     // Tuple (arity >= 2) or MSet (sorted)
    unsigned size = 1;
    unsigned weight = 0;
    std::size_t hash = 0;
};
using Elem = const ElemNode*;

Elem atom_elem(std::string_view base, unsigned index);
Elem unit_elem();
Elem tuple_elem(const std::vector<Elem>& items);
Elem mset_elem(std::vector<Elem> items);
Elem empty_mset();

// Size first, then kind, base, index, then children lexicographically.
int compare(Elem a, Elem b);
struct ElemLess {
    bool operator()(Elem a, Elem b) const { return compare(a, b) < 0; }
};

// Multiset helpers. Both arguments must be multisets.
Elem mset_union(Elem a, Elem b);
// Distinct items with multiplicities, in canonical order.
std::vector<std::pair<Elem, unsigned>> mset_counts(Elem m);

// Component parts of e along the factors of o: [] for I, the tuple items for a
// tensor, [e] otherwise.
std::vector<Elem> flat_parts(Obj o, Elem e);
Elem join_flat(Obj o, const std::vector<Elem>& parts);
// Splits an element of tensor(objs) into one element per entry of objs.
std::vector<Elem> split_by(const std::vector<Obj>& objs, Elem e);
Elem join_by(const std::vector<Obj>& objs, const std::vector<Elem>& parts);

bool elem_has_shape(Obj o, Elem e, const Signature& sig);

// All basis elements of o of structural size <= cap, in canonical order.
std::vector<Elem> basis_enum(Obj o, unsigned cap, const Signature& sig);

// Literal syntax: atoms are the lowercased base name followed by a 1-based
// index when the base has dimension >= 2 (a1, a2; plain `a` for dimension 1),
// `*` is the unit element, `(x,y)` a tuple and `[x,y]` a multiset.
std::string format_elem(Elem e, const Signature& sig);
Elem parse_elem(std::string_view src, Obj o, const Signature& sig);

}  // namespace difflin
