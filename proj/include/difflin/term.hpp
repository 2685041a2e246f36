#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "difflin/elem.hpp"
#include "difflin/object.hpp"

namespace difflin {

enum class TermKind : std::uint8_t { Id, Gen, Sym, Comp, Ten, Box, Sum, Neg, Zero, Lin };

enum class GenKind : std::uint8_t { Delta, Eps, Copy, Weak, M, MI, Nabla, U, Eta, D, S };

const char* gen_name(GenKind g);
std::optional<GenKind> gen_from_name(const std::string& s);
// Number of object parameters: 2 for m, 0 for mI, 1 otherwise.
unsigned gen_arity(GenKind g);

struct LinEntry {
    Elem in;
    Elem out;
    mpq_class coef;
};

// An explicit linear map given by finitely many matrix entries.
struct LinMap {
    std::string name;
    Obj dom = nullptr;
    Obj cod = nullptr;
    std::vector<LinEntry> entries;
};
using LinPtr = std::shared_ptr<const LinMap>;

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable term node. dom/cod are null until the node has been through
// annotate() (see typing.hpp).
struct Term {
    TermKind kind;
    GenKind gen = GenKind::Delta;
    std::vector<Obj> objs;        // Id: [A]; Gen: params; Sym: [A,B]; Zero: [dom,cod]
    std::vector<TermPtr> kids;    // Comp, Ten, Sum: >= 2; Box, Neg: 1
    LinPtr lin;                   // Lin
    Obj dom = nullptr;
    Obj cod = nullptr;

    bool typed() const { return dom != nullptr; }
};

TermPtr mk_id(Obj a);
TermPtr mk_gen(GenKind g, std::vector<Obj> params = {});
TermPtr mk_sym(Obj a, Obj b);
// comp, ten and sum return the single child unchanged when given one.
TermPtr mk_comp(std::vector<TermPtr> kids);
TermPtr mk_ten(std::vector<TermPtr> kids);
TermPtr mk_sum(std::vector<TermPtr> kids);
TermPtr mk_box(TermPtr inner);
TermPtr mk_neg(TermPtr inner);
TermPtr mk_zero(Obj dom, Obj cod);
TermPtr mk_lin(LinPtr lin);

// Structural equality, ignoring type annotations.
bool term_equal(const TermPtr& a, const TermPtr& b);

bool is_sum_free(const TermPtr& t);

// Replaces every Lin node whose name is bound in subst.
TermPtr substitute_lins(const TermPtr& t, const std::vector<LinPtr>& subst);

}  // namespace difflin
