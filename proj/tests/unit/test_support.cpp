#include <doctest.h>

#include "difflin/diagram.hpp"
#include "difflin/errors.hpp"
#include "difflin/support.hpp"
#include "helpers.hpp"

using namespace difflin;
using testutil::el;
using testutil::model;
using testutil::sig_of;
using testutil::typed;

namespace {

std::vector<std::string> interior(const std::string& src, const Signature& sig, Elem in, Elem out) {
    PortGraph g = term_to_graph(typed(src, sig));
    SupportBounds sb = infer_support(g, in, out, model(Ring::Rational, sig));
    std::vector<std::string> names;
    for (std::size_t w = 0; w < g.wires.size(); ++w) {
        const Wire& wire = g.wires[w];
        if (wire.src.node == Endpoint::kBoundary || wire.dst.node == Endpoint::kBoundary) continue;
        REQUIRE(sb.wires[w]);
        for (Elem e : *sb.wires[w]) names.push_back(format_elem(e, sig));
    }
    return names;
}

}  // namespace

TEST_CASE("support examples") {
    Signature sig = sig_of(1);
    Elem star = unit_elem();
    CHECK(interior("mI ; weak{I}", sig, star, star) == std::vector<std::string>{"[]"});
    CHECK(interior("mI ; eps{I}", sig, star, star) == std::vector<std::string>{"[*]"});
}

TEST_CASE("unbounded full vectors") {
    Signature sig = sig_of(1);
    ModelConfig mc = model(Ring::Rational, sig);
    PortGraph g = term_to_graph(typed("mI", sig));
    CHECK_FALSE(infer_support(g, unit_elem(), std::nullopt, mc).bounded());
    try {
        eval_vector(typed("mI", sig), unit_elem(), mc);
        FAIL("expected UnboundedError");
    } catch (const UnboundedError& e) {
        CHECK(std::string(e.what()).find("unbounded interior") != std::string::npos);
    }
    mc.fallback_cap = 4;
    VectorResult v = eval_vector(typed("mI", sig), unit_elem(), mc);
    CHECK(v.approximate);
    // [], [*], [*,*] and [*,*,*] have size at most 4.
    CHECK(v.entries.size() == 4);
}

TEST_CASE("full vectors agree with entries when bounded") {
    Signature sig = sig_of(2, 1);
    ModelConfig mc = model(Ring::Rational, sig);
    for (const char* src : {"copy{A}", "copy{A} ; (S{A} * id{!A}) ; nabla{A}", "d{A} ; copy{A}",
                            "(eta{A} * eta{B}) ; m{A,B}", "mI ; weak{I}", "bang(eps{A}) ; copy{A}",
                            "copy{A} + (weak{A} ; (u{A} * u{A}))"}) {
        TermPtr t = typed(src, sig);
        for (Elem in : basis_enum(t->dom, 5, sig)) {
            VectorResult v = eval_vector(t, in, mc);
            CHECK_FALSE(v.approximate);
            std::size_t nonzero = 0;
            for (Elem out : basis_enum(t->cod, 9, sig)) {
                Coef c = eval_entry(t, in, out, mc);
                if (c == 0) continue;
                ++nonzero;
                auto it = std::find_if(v.entries.begin(), v.entries.end(), [&](const auto& p) { return p.first == out; });
                REQUIRE_MESSAGE(it != v.entries.end(), src << " " << format_elem(out, sig));
                CHECK(it->second == c);
            }
            // Every vector entry is also found by the entry scan, up to its cap.
            std::size_t small = 0;
            for (const auto& [out, c] : v.entries)
                if (out->size <= 9) ++small;
            CHECK(small == nonzero);
        }
    }
}

TEST_CASE("digging needs a fallback cap for its full vector") {
    Signature sig = sig_of(1);
    ModelConfig mc = model(Ring::Rational, sig);
    TermPtr t = typed("delta{A}", sig);
    Elem aa = el("[a,a]", "!A", sig);
    CHECK_THROWS_AS(eval_vector(t, aa, mc), UnboundedError);
    mc.fallback_cap = 6;
    VectorResult v = eval_vector(t, aa, mc);
    CHECK(v.approximate);
    for (const auto& [out, c] : v.entries) CHECK(eval_entry(t, aa, out, mc) == c);
    // With the output free, digging's empty blocks leave the interior wire
    // unbounded even though dereliction only accepts singletons.
    VectorResult w = eval_vector(typed("delta{A} ; eps{!A}", sig), aa, mc);
    CHECK(w.approximate);
    REQUIRE(w.entries.size() == 1);
    CHECK(w.entries[0].first == aa);
    CHECK(w.entries[0].second == 1);
}
