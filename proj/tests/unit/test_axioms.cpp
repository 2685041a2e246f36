#include <doctest.h>

#include <random>
#include <set>

#include "difflin/axioms.hpp"
#include "difflin/errors.hpp"
#include "difflin/printer.hpp"
#include "helpers.hpp"

using namespace difflin;
using testutil::sig_of;

TEST_CASE("tier counts match the asserted table") {
    std::size_t total = 0;
    for (const auto& tier : all_tiers()) {
        auto entries = all_axioms({tier});
        CHECK_MESSAGE(entries.size() == tier_counts().at(tier), tier);
        total += entries.size();
    }
    CHECK(total == kAxiomCount);
    CHECK(all_axioms().size() == 79);
    CHECK(tier_counts().size() == all_tiers().size());
}

TEST_CASE("tier filters") {
    auto comonad = all_axioms({"comonad"});
    CHECK(comonad.size() == 3);
    std::vector<std::string> ids;
    for (const auto& e : all_axioms({"deriving"})) ids.push_back(e.id);
    CHECK(ids == std::vector<std::string>{"D.1", "D.2", "D.3", "D.4", "D.5"});
    CHECK(all_axioms({"hopf"}).size() == 2);
    CHECK(all_axioms({"hopf", "comonad"}).size() == 5);
    CHECK_THROWS_AS(all_axioms({"nonsense"}), ConfigError);
    CHECK_THROWS_AS(axiom_by_id("D.9"), ConfigError);
}

TEST_CASE("ids are unique and entries well formed") {
    std::set<std::string> seen;
    for (const auto& e : all_axioms()) {
        CHECK_MESSAGE(seen.insert(e.id).second, e.id);
        CHECK(!e.anchor.empty());
        if (e.metavars.empty()) {
            CHECK(term_equal(parse_term(pretty_print(e.lhs)), e.lhs));
            CHECK(term_equal(parse_term(pretty_print(e.rhs)), e.rhs));
        }
    }
}

TEST_CASE("requires_negatives marks exactly the antipode tiers") {
    const std::set<std::string> neg = {"hopf", "hopf-lemma", "monoidal-hopf", "hopf-neg-lemma", "deriving-neg"};
    for (const auto& e : all_axioms()) CHECK_MESSAGE(e.requires_negatives == (neg.count(e.tier) != 0), e.id);
}

TEST_CASE("both sides have the same type under every instantiation") {
    std::mt19937_64 rng(5);
    for (unsigned a = 1; a <= 3; ++a)
        for (unsigned b = 1; b <= 2; ++b) {
            Signature sig = sig_of(a, b, 2);
            for (const auto& e : all_axioms()) {
                std::vector<LinPtr> subst;
                for (const auto& mv : e.metavars) {
                    auto l = std::make_shared<LinMap>();
                    l->name = mv.name;
                    l->dom = mv.dom;
                    l->cod = mv.cod;
                    for (Elem x : basis_enum(mv.dom, 1, sig))
                        for (Elem y : basis_enum(mv.cod, 1, sig))
                            if (rng() % 2) l->entries.push_back({x, y, mpq_class(static_cast<long>(rng() % 5))});
                    subst.push_back(l);
                }
                TermPtr l = annotate(substitute_lins(e.lhs, subst), &sig);
                TermPtr r = annotate(substitute_lins(e.rhs, subst), &sig);
                CHECK_MESSAGE(l->dom == r->dom, e.id);
                CHECK_MESSAGE(l->cod == r->cod, e.id);
            }
        }
}
