#include <doctest.h>

#include <algorithm>

#include "difflin/errors.hpp"
#include "helpers.hpp"

using namespace difflin;
using testutil::el;
using testutil::sig_of;

namespace {

std::vector<std::string> names(const std::vector<Elem>& es, const Signature& sig) {
    std::vector<std::string> out;
    for (Elem e : es) out.push_back(format_elem(e, sig));
    return out;
}

// Multisets of k atoms over d letters: C(d+k-1, k).
unsigned long multisets(unsigned d, unsigned k) {
    unsigned long r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (d + i - 1) / i;
    return r;
}

}  // namespace

TEST_CASE("basis enumeration examples") {
    Signature sig = sig_of(1);
    CHECK(names(basis_enum(parse_object("!A"), 3, sig), sig) == std::vector<std::string>{"[]", "[a]", "[a,a]"});
    CHECK(names(basis_enum(unit_obj(), 1, sig), sig) == std::vector<std::string>{"*"});
    CHECK(names(basis_enum(parse_object("!!A"), 3, sig), sig) ==
          std::vector<std::string>{"[]", "[[]]", "[[],[]]", "[[a]]"});
    CHECK(basis_enum(parse_object("A * A"), 2, sig).empty());
    CHECK(names(basis_enum(parse_object("A * !A"), 4, sig), sig) ==
          std::vector<std::string>{"(a,[])", "(a,[a])"});
}

TEST_CASE("basis enumeration counts match the multiset count") {
    for (unsigned d = 1; d <= 3; ++d) {
        Signature sig = sig_of(d);
        for (unsigned cap = 1; cap <= 7; ++cap) {
            unsigned long want = 0;
            for (unsigned k = 0; k + 1 <= cap; ++k) want += multisets(d, k);
            CHECK(basis_enum(parse_object("!A"), cap, sig).size() == want);
            // A pair (x, m) has size 3 + |m|.
            unsigned long pairs = 0;
            for (unsigned k = 0; k + 3 <= cap; ++k) pairs += d * multisets(d, k);
            CHECK(basis_enum(parse_object("A * !A"), cap, sig).size() == pairs);
        }
    }
}

TEST_CASE("enumeration is sorted, unique and within the cap") {
    Signature sig = sig_of(2, 1);
    for (const char* o : {"!A", "!!A", "!A * !B", "!(A * B)", "A * !A", "!I", "!(!A * B)"}) {
        auto es = basis_enum(parse_object(o), 6, sig);
        for (std::size_t i = 0; i < es.size(); ++i) {
            CHECK(es[i]->size <= 6);
            CHECK(elem_has_shape(parse_object(o), es[i], sig));
            if (i) CHECK(compare(es[i - 1], es[i]) < 0);
        }
    }
}

TEST_CASE("literals round-trip") {
    Signature sig = sig_of(2, 1);
    sig.declare("X2", 2);
    for (const char* o : {"!A", "!!A", "!A * !B", "!(A * B)", "A * !A * I", "!I", "!X2"}) {
        Obj obj = parse_object(o);
        for (Elem e : basis_enum(obj, 6, sig)) CHECK(parse_elem(format_elem(e, sig), obj, sig) == e);
    }
    CHECK(format_elem(el("[x2_1, x2_2]", "!X2", sig), sig) == "[x2_1,x2_2]");
}

TEST_CASE("literal parsing normalizes multisets and checks shape") {
    Signature sig = sig_of(2);
    CHECK(el("[a2, a1, a2]", "!A", sig) == el("[a1,a2,a2]", "!A", sig));
    CHECK_THROWS(el("a", "!A", sig));
    CHECK_THROWS(el("a3", "A", sig));
    CHECK_THROWS(el("(a1,a2)", "A * A * A", sig));
    CHECK_THROWS(el("[a1", "!A", sig));
}

TEST_CASE("size and weight") {
    Signature sig = sig_of(1);
    Elem e = el("([a,a],[[a],[]])", "!A * !!A * I", sig);
    CHECK(e->items.size() == 2);
    CHECK(e->size == 1 + 3 + (1 + 2 + 1));
    CHECK(e->weight == 3);
    CHECK(mset_union(el("[a]", "!A", sig), el("[a,a]", "!A", sig)) == el("[a,a,a]", "!A", sig));
}
