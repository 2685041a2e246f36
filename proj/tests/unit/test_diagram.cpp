#include <doctest.h>

#include <random>

#include "difflin/diagram.hpp"
#include "difflin/errors.hpp"
#include "helpers.hpp"

using namespace difflin;
using testutil::model;
using testutil::sig_of;
using testutil::typed;

namespace {

struct Fixture {
    Signature sig = sig_of(2, 1, 2);
    ParseEnv env;
    Fixture() {
        env.sig = &sig;
        auto add = [&](const char* name, const char* dom, const char* cod) {
            auto l = std::make_shared<LinMap>();
            l->name = name;
            l->dom = parse_object(dom);
            l->cod = parse_object(cod);
            for (Elem x : basis_enum(l->dom, 1, sig))
                for (Elem y : basis_enum(l->cod, 1, sig)) l->entries.push_back({x, y, mpq_class(x->index + 2 * y->index + 1)});
            env.lins[name] = l;
        };
        add("f", "A", "B");
        add("g", "B", "C");
        add("h", "C", "A");
    }
    TermPtr t(const std::string& src) const { return typed(src, sig, &env); }
    bool geq(const std::string& a, const std::string& b) const {
        return graphs_equal(term_to_graph(t(a)), term_to_graph(t(b)));
    }
    bool meq(const std::string& a, const std::string& b, unsigned cap = 5) const {
        Evaluator ev(model(Ring::Rational, sig));
        return equal_upto(ev, t(a), t(b), cap).pass;
    }
};

}  // namespace

TEST_CASE("SMC-equal pairs have equal graphs") {
    Fixture fx;
    CHECK(fx.geq("(lin f * id{C}) ; (id{B} * lin h)", "(id{A} * lin h) ; (lin f * id{A})"));
    CHECK(fx.geq("sigma{A,B} ; sigma{B,A}", "id{A * B}"));
    CHECK(fx.geq("(lin f * lin h) ; sigma{B,A}", "sigma{A,C} ; (lin h * lin f)"));
    CHECK(fx.geq("((eps{A} * eps{B}) * (eps{A} * weak{C}))", "(eps{A} * (eps{B} * (eps{A} * weak{C})))"));
    CHECK(fx.geq("(eps{A} * eps{B}) * (eps{A} * weak{C})", "eps{A} * eps{B} * eps{A} * weak{C}"));
    CHECK(fx.geq("sigma{A, B * C}", "(sigma{A,B} * id{C}) ; (id{B} * sigma{A,C})"));
    CHECK(fx.geq("id{A} ; lin f ; id{B}", "lin f"));
    CHECK(fx.geq("bang((lin f * id{C}) ; (id{B} * lin h))", "bang((id{A} * lin h) ; (lin f * id{A}))"));
}

TEST_CASE("modality laws are not graph equalities") {
    Fixture fx;
    CHECK_FALSE(fx.geq("eta{A} ; eps{A}", "id{A}"));
    CHECK_FALSE(fx.geq("copy{A}", "copy{A} ; sigma{!A,!A}"));
    CHECK_FALSE(fx.geq("delta{A} ; eps{!A}", "id{!A}"));
    CHECK_FALSE(fx.geq("bang(lin f ; lin g)", "bang(lin f) ; bang(lin g)"));
    // The model still decides them.
    CHECK(fx.meq("eta{A} ; eps{A}", "id{A}"));
    CHECK(fx.meq("copy{A}", "copy{A} ; sigma{!A,!A}"));
    CHECK(fx.meq("bang(lin f ; lin g)", "bang(lin f) ; bang(lin g)"));
}

TEST_CASE("distinct wirings are distinct") {
    Fixture fx;
    CHECK_FALSE(fx.geq("sigma{A,A}", "id{A * A}"));
    CHECK(fx.geq("lin f * lin f", "sigma{A,A} ; (lin f * lin f) ; sigma{B,B}"));
    CHECK_FALSE(fx.geq("eps{A} * eps{A}", "sigma{!A,!A} ; (eps{A} * eps{A})"));
    CHECK_THROWS_AS(fx.geq("eps{A}", "weak{A}"), TypeError);
}

TEST_CASE("graph construction rejects sums") {
    Fixture fx;
    CHECK_THROWS_AS(term_to_graph(fx.t("eps{A} + eps{A}")), TypeError);
    CHECK_THROWS_AS(term_to_graph(fx.t("-eps{A}")), TypeError);
    CHECK_THROWS_AS(term_to_graph(fx.t("0 : A -> A")), TypeError);
}

TEST_CASE("graph shape") {
    Fixture fx;
    PortGraph id = term_to_graph(fx.t("id{A}"));
    CHECK(id.nodes.empty());
    CHECK(id.wires.size() == 1);
    // Input to eta, eta to copy, and one wire per copy output.
    PortGraph ec = term_to_graph(fx.t("eta{A} ; copy{A}"));
    CHECK(ec.nodes.size() == 2);
    CHECK(ec.wires.size() == 4);
    PortGraph box = term_to_graph(fx.t("bang(lin f)"));
    REQUIRE(box.nodes.size() == 1);
    REQUIRE(box.nodes[0].inner);
    CHECK(box.nodes[0].inner->nodes.size() == 1);
    std::string dot = emit_dot(box);
    CHECK(dot.find("subgraph cluster_") != std::string::npos);
    CHECK(emit_dot(id).find("->") != std::string::npos);
    // Boundary types follow the normalized factor lists.
    PortGraph m = term_to_graph(fx.t("m{A,B} * id{I} * eps{C}"));
    CHECK(m.inputs.size() == 3);
    CHECK(m.outputs.size() == 2);
}

TEST_CASE("canonical forms are deterministic") {
    Fixture fx;
    for (const char* src : {"copy{A} ; (S{A} * id{!A}) ; nabla{A}", "bang(bang(lin f) ; copy{B})", "weak{A} * weak{A}",
                            "mI * mI * (u{A} ; weak{A})"}) {
        PortGraph g = term_to_graph(fx.t(src));
        CHECK(canonical_form(g) == canonical_form(term_to_graph(fx.t(src))));
        CHECK(canonical_form(g) == canonical_form(g));
    }
    // Floating components in either order.
    CHECK(fx.geq("(mI ; weak{I}) * (u{A} ; weak{A})", "(u{A} ; weak{A}) * (mI ; weak{I})"));
    CHECK_FALSE(fx.geq("(mI ; weak{I}) * (mI ; weak{I})", "(u{A} ; weak{A}) * (mI ; weak{I})"));
}

TEST_CASE("interchange rewrites keep graphs and models equal") {
    Fixture fx;
    const char* pool[] = {"copy{A} ; nabla{A}", "S{A}", "delta{A} ; eps{!A}", "eps{A} ; eta{A}", "weak{A} ; u{A}",
                          "id{!A}", "bang(lin f ; lin g ; lin h)"};
    const int n = 7;
    std::mt19937_64 rng(11);
    auto pick = [&] { return std::string("(") + pool[rng() % n] + ")"; };
    for (int trial = 0; trial < 25; ++trial) {
        std::string p1 = pick(), p2 = pick(), q1 = pick(), q2 = pick();
        std::string a = "(" + p1 + " ; " + p2 + ") * (" + q1 + " ; " + q2 + ")";
        std::string b = "(" + p1 + " * " + q1 + ") ; (" + p2 + " * " + q2 + ")";
        std::string c = "(" + p1 + " * id{!A}) ; (id{!A} * " + q1 + ") ; (" + p2 + " * id{!A}) ; (id{!A} * " + q2 + ")";
        std::string d = "sigma{!A,!A} ; (" + q1 + " ; " + q2 + ") * (" + p1 + " ; " + p2 + ") ; sigma{!A,!A}";
        for (const auto& other : {b, c, d}) {
            CHECK_MESSAGE(fx.geq(a, other), a << " vs " << other);
            CHECK_MESSAGE(fx.meq(a, other, 4), a << " vs " << other);
        }
    }
}
