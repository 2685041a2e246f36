#include <doctest.h>

#include <map>
#include <set>

#include "difflin/errors.hpp"
#include "helpers.hpp"

using namespace difflin;
using testutil::el;
using testutil::model;
using testutil::sig_of;

namespace {

struct GenCase {
    GenKind g;
    std::vector<Obj> params;
};

std::vector<GenCase> all_cases() {
    Obj A = base_obj("A"), B = base_obj("B"), bA = bang_obj(A), AB = tensor_obj({A, B});
    std::vector<GenCase> out;
    for (GenKind g : {GenKind::Delta, GenKind::Eps, GenKind::Copy, GenKind::Weak, GenKind::Nabla, GenKind::U,
                      GenKind::Eta, GenKind::D, GenKind::S})
        for (Obj p : {A, bA, AB}) out.push_back({g, {p}});
    out.push_back({GenKind::M, {A, B}});
    out.push_back({GenKind::M, {bA, A}});
    out.push_back({GenKind::MI, {}});
    return out;
}

// Scale of the monomial basis vector against the divided one:
// [m]_monomial = scale(m) [m]_divided, recursively through nested bangs.
mpz_class scale(Elem e) {
    mpz_class s = 1;
    if (e->kind == ElemKind::MSet) s = mset_factorial(e);
    for (Elem x : e->items) s *= scale(x);
    return s;
}

// Ordered splittings of the occurrence list of m, counted by outcome.
std::map<std::pair<Elem, Elem>, unsigned> brute_splittings(Elem m) {
    std::vector<Elem> occ(m->items.begin(), m->items.end());
    std::map<std::pair<Elem, Elem>, unsigned> out;
    for (unsigned mask = 0; mask < (1u << occ.size()); ++mask) {
        std::vector<Elem> l, r;
        for (unsigned i = 0; i < occ.size(); ++i) ((mask >> i) & 1 ? l : r).push_back(occ[i]);
        ++out[{mset_elem(l), mset_elem(r)}];
    }
    return out;
}

}  // namespace

TEST_CASE("copy coefficients count ordered splittings") {
    Signature sig = sig_of(2);
    ModelConfig mc = model(Ring::Rational, sig, Basis::Monomial);
    Obj bA = parse_object("!A"), pair = parse_object("!A * !A");
    for (Elem m : basis_enum(bA, 7, sig)) {
        auto want = brute_splittings(m);
        for (Elem out : basis_enum(pair, 2 + m->size + 1, sig)) {
            auto parts = split_by({bA, bA}, out);
            auto it = want.find({parts[0], parts[1]});
            unsigned n = it == want.end() ? 0 : it->second;
            CHECK(gen_entry(mc, GenKind::Copy, {base_obj("A")}, m, out) == n);
        }
    }
    CHECK(gen_entry(mc, GenKind::Copy, {base_obj("A")}, el("[a1,a1]", "!A", sig), el("([a1],[a1])", "!A * !A", sig)) ==
          2);
}

TEST_CASE("nabla is multiset union in the monomial basis") {
    Signature sig = sig_of(2);
    ModelConfig mc = model(Ring::Rational, sig, Basis::Monomial);
    Obj bA = parse_object("!A"), pair = parse_object("!A * !A");
    for (Elem in : basis_enum(pair, 7, sig)) {
        auto p = split_by({bA, bA}, in);
        for (Elem out : basis_enum(bA, 6, sig))
            CHECK(gen_entry(mc, GenKind::Nabla, {base_obj("A")}, in, out) == (out == mset_union(p[0], p[1]) ? 1 : 0));
    }
}

TEST_CASE("digging examples") {
    Signature sig = sig_of(1);
    ModelConfig mc = model(Ring::Rational, sig, Basis::Monomial);
    Obj A = base_obj("A");
    Elem aa = el("[a,a]", "!A", sig);
    CHECK(gen_entry(mc, GenKind::Delta, {A}, aa, el("[[a],[a]]", "!!A", sig)) == 1);
    CHECK(gen_entry(mc, GenKind::Delta, {A}, aa, el("[[a,a]]", "!!A", sig)) == 1);
    CHECK(gen_entry(mc, GenKind::Delta, {A}, aa, el("[[a,a],[]]", "!!A", sig)) == 1);
    CHECK(gen_entry(mc, GenKind::Delta, {A}, aa, el("[[a,a],[],[]]", "!!A", sig)) == mpq_class(1, 2));
    CHECK(gen_entry(mc, GenKind::Delta, {A}, aa, el("[[a]]", "!!A", sig)) == 0);
    CHECK(gen_entry(mc, GenKind::Delta, {A}, el("[]", "!A", sig), el("[]", "!!A", sig)) == 1);
}

TEST_CASE("antipode signs") {
    Signature sig = sig_of(1);
    ModelConfig mc = model(Ring::Integer, sig);
    Obj A = base_obj("A");
    CHECK(gen_entry(mc, GenKind::S, {A}, el("[a,a]", "!A", sig), el("[a,a]", "!A", sig)) == 1);
    CHECK(gen_entry(mc, GenKind::S, {A}, el("[a]", "!A", sig), el("[a]", "!A", sig)) == -1);
    CHECK(gen_entry(mc, GenKind::S, {A}, el("[a]", "!A", sig), el("[a,a]", "!A", sig)) == 0);
    CHECK_THROWS_AS(gen_entry(model(Ring::Natural, sig), GenKind::S, {A}, el("[a]", "!A", sig), el("[a]", "!A", sig)),
                    RingError);
}

TEST_CASE("mI weights") {
    Signature sig = sig_of(1);
    Elem star = unit_elem();
    Elem three = el("[*,*,*]", "!I", sig);
    CHECK(gen_entry(model(Ring::Rational, sig, Basis::Monomial), GenKind::MI, {}, star, three) == mpq_class(1, 6));
    CHECK(gen_entry(model(Ring::Integer, sig), GenKind::MI, {}, star, three) == 1);
    CHECK(gen_entry(model(Ring::Boolean, sig), GenKind::MI, {}, star, three) == 1);
}

TEST_CASE("every generator preserves weight") {
    Signature sig = sig_of(2, 1);
    for (Basis b : {Basis::Monomial, Basis::Divided}) {
        ModelConfig mc = model(Ring::Rational, sig, b);
        for (const auto& c : all_cases()) {
            auto [dom, cod] = gen_type(c.g, c.params);
            for (Elem out : basis_enum(cod, 6, sig))
                for (const auto& [in, coef] : gen_row(mc, c.g, c.params, out)) {
                    CHECK(coef != 0);
                    CHECK(in->weight == out->weight);
                    CHECK(elem_has_shape(dom, in, sig));
                }
        }
    }
}

TEST_CASE("monomial and divided bases are related by the factorial rescaling") {
    Signature sig = sig_of(2, 1);
    ModelConfig mon = model(Ring::Rational, sig, Basis::Monomial);
    ModelConfig div = model(Ring::Rational, sig, Basis::Divided);
    for (const auto& c : all_cases()) {
        auto [dom, cod] = gen_type(c.g, c.params);
        for (Elem out : basis_enum(cod, 6, sig)) {
            std::set<Elem> ins;
            for (const auto& [in, _] : gen_row(mon, c.g, c.params, out)) ins.insert(in);
            for (const auto& [in, _] : gen_row(div, c.g, c.params, out)) ins.insert(in);
            for (Elem in : ins) {
                mpq_class want = gen_entry(mon, c.g, c.params, in, out) * mpq_class(scale(out)) / mpq_class(scale(in));
                want.canonicalize();
                CHECK_MESSAGE(gen_entry(div, c.g, c.params, in, out) == want,
                              gen_name(c.g) << " " << format_elem(in, sig) << " -> " << format_elem(out, sig));
            }
        }
    }
}

TEST_CASE("forward images agree with rows") {
    Signature sig = sig_of(2, 1);
    ModelConfig mc = model(Ring::Rational, sig);
    for (const auto& c : all_cases()) {
        auto [dom, cod] = gen_type(c.g, c.params);
        for (Elem in : basis_enum(dom, 5, sig)) {
            auto fwd = gen_forward(mc, c.g, c.params, in);
            if (!fwd) {
                CHECK((c.g == GenKind::Delta || c.g == GenKind::MI));
                continue;
            }
            std::set<Elem> got(fwd->begin(), fwd->end());
            for (Elem out : basis_enum(cod, 12, sig)) {
                bool nonzero = gen_entry(mc, c.g, c.params, in, out) != 0;
                CHECK(nonzero == (got.count(out) != 0));
            }
        }
    }
}

TEST_CASE("mutated tables") {
    Signature sig = sig_of(1);
    Obj A = base_obj("A");
    ModelConfig mc = model(Ring::Rational, sig);
    mc.mutations = {Mutation::ScaleEta2};
    CHECK(gen_entry(mc, GenKind::Eta, {A}, el("a", "A", sig), el("[a]", "!A", sig)) == 2);
    mc.mutations = {Mutation::DropS};
    CHECK(gen_entry(mc, GenKind::S, {A}, el("[a]", "!A", sig), el("[a]", "!A", sig)) == 1);
    mc.mutations = {Mutation::SwapD};
    CHECK(gen_entry(mc, GenKind::D, {A}, el("([],a)", "!A * A", sig), el("[a]", "!A", sig)) == 1);
    CHECK(gen_entry(mc, GenKind::D, {A}, el("([a],a)", "!A * A", sig), el("[a,a]", "!A", sig)) == 0);
    mc.mutations = {Mutation::FlatBialgebra};
    CHECK(gen_entry(mc, GenKind::Copy, {A}, el("[a,a]", "!A", sig), el("([a],[a])", "!A * !A", sig)) == 1);
    CHECK(mutation_from_name("swap_d") == Mutation::SwapD);
    CHECK_FALSE(mutation_from_name("swap"));
}

TEST_CASE("shape mismatches are rejected") {
    Signature sig = sig_of(1);
    ModelConfig mc = model(Ring::Rational, sig);
    CHECK_THROWS(gen_entry(mc, GenKind::Eps, {base_obj("A")}, el("a", "A", sig), el("a", "A", sig)));
}
