#include <doctest.h>

#include <random>

#include "difflin/errors.hpp"
#include "difflin/printer.hpp"
#include "difflin/termfile.hpp"
#include "helpers.hpp"

using namespace difflin;
using testutil::typed;

namespace {

// Random untyped terms; only the syntax matters here.
TermPtr random_term(std::mt19937_64& rng, int depth, const ParseEnv& env) {
    Obj A = base_obj("A"), B = base_obj("B");
    if (depth == 0 || rng() % 4 == 0) {
        switch (rng() % 8) {
        case 0: return mk_id(A);
        case 1: return mk_gen(GenKind::Eps, {A});
        case 2: return mk_gen(GenKind::Copy, {B});
        case 3: return mk_gen(GenKind::MI);
        case 4: return mk_sym(A, bang_obj(B));
        case 5: return mk_lin(env.lins.at("f"));
        case 6: return mk_zero(tensor_obj({A, B}), unit_obj());
        default: return mk_gen(GenKind::M, {A, tensor_obj({A, B})});
        }
    }
    auto kids = [&] {
        std::vector<TermPtr> k;
        for (unsigned i = 0, n = 2 + rng() % 2; i < n; ++i) k.push_back(random_term(rng, depth - 1, env));
        return k;
    };
    switch (rng() % 5) {
    case 0: return mk_comp(kids());
    case 1: return mk_ten(kids());
    case 2: return mk_sum(kids());
    case 3: return mk_neg(random_term(rng, depth - 1, env));
    default: return mk_box(random_term(rng, depth - 1, env));
    }
}

}  // namespace

TEST_CASE("precedence: tensor over composition over sum") {
    TermPtr t = parse_term("eps{A} * eps{B} ; m{A,B} + 0 : !A * !B -> !(A * B)");
    REQUIRE(t->kind == TermKind::Sum);
    REQUIRE(t->kids[0]->kind == TermKind::Comp);
    CHECK(t->kids[0]->kids[0]->kind == TermKind::Ten);
    CHECK(t->kids[1]->kind == TermKind::Zero);
}

TEST_CASE("parenthesized chains stay nested") {
    TermPtr flat = parse_term("id{A} ; id{A} ; id{A}");
    TermPtr nested = parse_term("(id{A} ; id{A}) ; id{A}");
    CHECK(flat->kids.size() == 3);
    CHECK(nested->kids.size() == 2);
    CHECK_FALSE(term_equal(flat, nested));
    CHECK(pretty_print(nested) == "(id{A} ; id{A}) ; id{A}");
}

TEST_CASE("print then parse is the identity on random terms") {
    ParseEnv env;
    auto f = std::make_shared<LinMap>();
    f->name = "f";
    f->dom = base_obj("A");
    f->cod = base_obj("B");
    env.lins["f"] = f;
    std::mt19937_64 rng(42);
    for (int i = 0; i < 300; ++i) {
        TermPtr t = random_term(rng, 4, env);
        std::string text = pretty_print(t);
        TermPtr back = parse_term(text, &env);
        CHECK_MESSAGE(term_equal(t, back), text);
        CHECK(pretty_print(back) == text);
    }
}

TEST_CASE("generator types") {
    Signature sig = testutil::sig_of(2, 1);
    auto type = [&](const char* src) {
        auto [d, c] = infer_type(parse_term(src), &sig);
        return to_string(d) + " -> " + to_string(c);
    };
    CHECK(type("delta{A}") == "!A -> !!A");
    CHECK(type("eps{A}") == "!A -> A");
    CHECK(type("copy{A}") == "!A -> !A*!A");
    CHECK(type("weak{A}") == "!A -> I");
    CHECK(type("m{A,B}") == "!A*!B -> !(A*B)");
    CHECK(type("mI") == "I -> !I");
    CHECK(type("nabla{A}") == "!A*!A -> !A");
    CHECK(type("u{A}") == "I -> !A");
    CHECK(type("eta{A}") == "A -> !A");
    CHECK(type("d{A}") == "!A*A -> !A");
    CHECK(type("S{A}") == "!A -> !A");
    CHECK(type("sigma{A, B * B}") == "A*B*B -> B*B*A");
    CHECK(type("bang(eps{A})") == "!!A -> !A");
    CHECK(type("-eps{A} + eps{A}") == "!A -> A");
    CHECK(type("id{I} * eta{A}") == "A -> !A");
}

TEST_CASE("type errors") {
    Signature sig = testutil::sig_of(1);
    CHECK_THROWS_AS(typed("eps{A} ; eps{A}", sig), TypeError);
    CHECK_THROWS_AS(typed("eps{A} + weak{A}", sig), TypeError);
    CHECK_THROWS_AS(typed("eps{D}", sig), SyntaxError);
    CHECK_NOTHROW(typed("eps{A} * eps{A} ; sigma{A,A}", sig));
}

TEST_CASE("syntax errors carry a position") {
    try {
        parse_term("copy{A} ; ; eps{A}");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 10);
    }
    CHECK_THROWS_AS(parse_term("lin g"), SyntaxError);
    CHECK_THROWS_AS(parse_term("frob{A}"), SyntaxError);
    CHECK_THROWS_AS(parse_term("1 : A -> A"), SyntaxError);
    CHECK_THROWS_AS(parse_term("eps{A} eps{A}"), SyntaxError);
}

TEST_CASE("term files") {
    TermFile f = parse_term_file(R"(# comment
semiring integer
basis divided
size_cap 5
fallback_cap 7
base A dim 2
base B dim 1
lin f : A -> B { a1->b: 2, a2->b: -1/2 }
let two = lin f ; eta{B}
two ; eps{B}
)");
    CHECK(f.ring == Ring::Integer);
    CHECK(f.basis == Basis::Divided);
    CHECK(f.size_cap == 5u);
    CHECK(f.fallback_cap == 7u);
    CHECK(f.sig.dim("A") == 2);
    REQUIRE(f.lins.count("f"));
    REQUIRE(f.lins.at("f")->entries.size() == 2);
    CHECK(f.lins.at("f")->entries[1].coef == mpq_class(-1, 2));
    REQUIRE(f.subject);
    CHECK(f.subject->kind == TermKind::Comp);

    TermFile g = parse_term_file("base A dim 1\nlet x = eps{A}\nlet main = copy{A}\nlet y = weak{A}\n");
    CHECK(pretty_print(g.subject) == "copy{A}");
    TermFile h = parse_term_file("base A dim 1\nlet x = eps{A}\nlet y = weak{A}\n");
    CHECK(pretty_print(h.subject) == "weak{A}");

    CHECK_THROWS_AS(parse_term_file("base A dim 1\neps{A}\nweak{A}\n"), SyntaxError);
    CHECK_THROWS_AS(parse_term_file("base A dim 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_term_file("semiring complex\n"), ConfigError);
    CHECK_THROWS_AS(parse_term_file("base A dim 1\nlin f : A -> A { a->b: 1 }\n"), std::exception);
}
