#include <algorithm>

#include "difflin/axioms.hpp"
#include "difflin/errors.hpp"
#include "difflin/parser.hpp"

namespace difflin {

namespace {

struct Raw {
    const char* id;
    const char* tier;
    const char* anchor;
    const char* lhs;
    const char* rhs;
    const char* metas;  // comma-separated subset of "f,g"
};

// phi = (eps * weak) + (weak * eps), the map !A * !A -> A.
#define PHI "((eps{A} * weak{A}) + (weak{A} * eps{A}))"

const Raw kRaw[] = {
    // comonad
    {"comonad.counit.1", "comonad", "comonad counit, dereliction after digging",
     "delta{A} ; eps{!A}", "id{!A}", ""},
    {"comonad.counit.2", "comonad", "comonad counit, digging then !(dereliction)",
     "delta{A} ; bang(eps{A})", "id{!A}", ""},
    {"comonad.coassoc", "comonad", "comonad coassociativity",
     "delta{A} ; delta{!A}", "delta{A} ; bang(delta{A})", ""},

    // coalgebra modality
    {"comonoid.coassoc", "coalgebra-modality", "comonoid coassociativity",
     "copy{A} ; (copy{A} * id{!A})", "copy{A} ; (id{!A} * copy{A})", ""},
    {"comonoid.counit.r", "coalgebra-modality", "comonoid right counit",
     "copy{A} ; (id{!A} * weak{A})", "id{!A}", ""},
    {"comonoid.counit.l", "coalgebra-modality", "comonoid left counit",
     "copy{A} ; (weak{A} * id{!A})", "id{!A}", ""},
    {"comonoid.cocomm", "coalgebra-modality", "comonoid cocommutativity",
     "copy{A} ; sigma{!A,!A}", "copy{A}", ""},
    {"digging.copy", "coalgebra-modality", "digging preserves contraction",
     "delta{A} ; copy{!A}", "copy{A} ; (delta{A} * delta{A})", ""},
    {"digging.weak", "coalgebra-modality", "digging preserves weakening",
     "delta{A} ; weak{!A}", "weak{A}", ""},

    // symmetric monoidal functor
    {"smf.assoc", "sm-functor", "monoidal functor associativity",
     "(m{A,B} * id{!C}) ; m{A*B,C}", "(id{!A} * m{B,C}) ; m{A,B*C}", ""},
    {"smf.unit.r", "sm-functor", "monoidal functor right unit",
     "(id{!A} * mI) ; m{A,I}", "id{!A}", ""},
    {"smf.unit.l", "sm-functor", "monoidal functor left unit",
     "(mI * id{!A}) ; m{I,A}", "id{!A}", ""},
    {"smf.sym", "sm-functor", "monoidal functor symmetry",
     "sigma{!A,!B} ; m{B,A}", "m{A,B} ; bang(sigma{A,B})", ""},

    // monoidal coalgebra modality
    {"mc.delta", "monoidal-coalgebra", "digging is monoidal",
     "(delta{A} * delta{B}) ; m{!A,!B} ; bang(m{A,B})", "m{A,B} ; delta{A*B}", ""},
    {"mc.delta.unit", "monoidal-coalgebra", "digging is monoidal, unit",
     "mI ; delta{I}", "mI ; bang(mI)", ""},
    {"mc.eps", "monoidal-coalgebra", "dereliction is monoidal",
     "m{A,B} ; eps{A*B}", "eps{A} * eps{B}", ""},
    {"mc.eps.unit", "monoidal-coalgebra", "dereliction is monoidal, unit",
     "mI ; eps{I}", "id{I}", ""},
    {"mc.copy", "monoidal-coalgebra", "contraction is monoidal",
     "(copy{A} * copy{B}) ; (id{!A} * sigma{!A,!B} * id{!B}) ; (m{A,B} * m{A,B})", "m{A,B} ; copy{A*B}", ""},
    {"mc.copy.unit", "monoidal-coalgebra", "contraction is monoidal, unit",
     "mI ; copy{I}", "mI * mI", ""},
    {"mc.weak", "monoidal-coalgebra", "weakening is monoidal",
     "m{A,B} ; weak{A*B}", "weak{A} * weak{B}", ""},
    {"mc.weak.unit", "monoidal-coalgebra", "weakening is monoidal, unit",
     "mI ; weak{I}", "id{I}", ""},
    {"mc.copy.coalg", "monoidal-coalgebra", "contraction is a coalgebra morphism",
     "copy{A} ; (delta{A} * delta{A}) ; m{!A,!A}", "delta{A} ; bang(copy{A})", ""},
    {"mc.weak.coalg", "monoidal-coalgebra", "weakening is a coalgebra morphism",
     "weak{A} ; mI", "delta{A} ; bang(weak{A})", ""},

    // pre-codereliction
    {"cd.3", "pre-codereliction", "linear rule",
     "eta{A} ; eps{A}", "id{A}", ""},
    {"cd.m.l", "pre-codereliction", "left monoidal rule",
     "(id{!A} * eta{B}) ; m{A,B}", "(eps{A} * id{B}) ; eta{A*B}", ""},
    {"cd.m.r", "pre-codereliction", "right monoidal rule",
     "(eta{A} * id{!B}) ; m{A,B}", "(id{A} * eps{B}) ; eta{A*B}", ""},

    // consequences for a pre-codereliction
    {"pcl.unit.l", "precoder-lemma", "codereliction against the left unit",
     "(eta{I} * id{!A}) ; m{I,A}", "eps{A} ; eta{A}", ""},
    {"pcl.unit.r", "precoder-lemma", "codereliction against the right unit",
     "(id{!A} * eta{I}) ; m{A,I}", "eps{A} ; eta{A}", ""},
    {"pcl.tensor", "precoder-lemma", "codereliction of a tensor",
     "(eta{A} * eta{B}) ; m{A,B}", "eta{A*B}", ""},

    // bialgebra modality
    {"monoid.assoc", "bialgebra", "monoid associativity",
     "(nabla{A} * id{!A}) ; nabla{A}", "(id{!A} * nabla{A}) ; nabla{A}", ""},
    {"monoid.unit.r", "bialgebra", "monoid right unit",
     "(id{!A} * u{A}) ; nabla{A}", "id{!A}", ""},
    {"monoid.unit.l", "bialgebra", "monoid left unit",
     "(u{A} * id{!A}) ; nabla{A}", "id{!A}", ""},
    {"monoid.comm", "bialgebra", "monoid commutativity",
     "sigma{!A,!A} ; nabla{A}", "nabla{A}", ""},
    {"bimonoid", "bialgebra", "bimonoid compatibility",
     "nabla{A} ; copy{A}", "(copy{A} * copy{A}) ; (id{!A} * sigma{!A,!A} * id{!A}) ; (nabla{A} * nabla{A})", ""},
    {"bimonoid.u.copy", "bialgebra", "unit is a comonoid map",
     "u{A} ; copy{A}", "u{A} * u{A}", ""},
    {"bimonoid.nabla.weak", "bialgebra", "counit is a monoid map",
     "nabla{A} ; weak{A}", "weak{A} * weak{A}", ""},
    {"bimonoid.u.weak", "bialgebra", "unit against counit",
     "u{A} ; weak{A}", "id{I}", ""},

    // monoidal bialgebra modality
    {"mb.nabla.r", "monoidal-bialgebra", "cocontraction is monoidal, right",
     "(id{!A} * nabla{B}) ; m{A,B}",
     "(copy{A} * id{!B} * id{!B}) ; (id{!A} * sigma{!A,!B} * id{!B}) ; (m{A,B} * m{A,B}) ; nabla{A*B}", ""},
    {"mb.nabla.l", "monoidal-bialgebra", "cocontraction is monoidal, left",
     "(nabla{A} * id{!B}) ; m{A,B}",
     "(id{!A} * id{!A} * copy{B}) ; (id{!A} * sigma{!A,!B} * id{!B}) ; (m{A,B} * m{A,B}) ; nabla{A*B}", ""},
    {"mb.u.r", "monoidal-bialgebra", "coweakening is monoidal, right",
     "(id{!A} * u{B}) ; m{A,B}", "weak{A} ; u{A*B}", ""},
    {"mb.u.l", "monoidal-bialgebra", "coweakening is monoidal, left",
     "(u{A} * id{!B}) ; m{A,B}", "weak{B} ; u{A*B}", ""},
    {"mb.nabla.coalg", "monoidal-bialgebra", "cocontraction is a coalgebra morphism",
     "(delta{A} * delta{A}) ; m{!A,!A} ; bang(nabla{A})", "nabla{A} ; delta{A}", ""},
    {"mb.u.coalg", "monoidal-bialgebra", "coweakening is a coalgebra morphism",
     "mI ; bang(u{A})", "u{A} ; delta{A}", ""},

    // pre-additive bialgebra modality
    {"pa.nabla", "pre-additive", "dereliction against cocontraction",
     "nabla{A} ; eps{A}", PHI, ""},
    {"pa.u", "pre-additive", "dereliction against coweakening",
     "u{A} ; eps{A}", "0 : I -> A", ""},

    // convolution
    {"conv.sum", "convolution", "! sends sums to convolution",
     "bang(lin f + lin g)", "copy{A} ; (bang(lin f) * bang(lin g)) ; nabla{B}", "f,g"},
    {"conv.zero", "convolution", "! sends zero to the convolution unit",
     "bang(0 : A -> B)", "weak{A} ; u{B}", ""},

    // additive structure induced by the bialgebra
    {"addthm.sum", "additive-thm", "induced sum, boxed",
     "bang(eta{A} ; copy{A} ; (bang(lin f) * bang(lin g)) ; nabla{B} ; eps{B})",
     "copy{A} ; (bang(lin f) * bang(lin g)) ; nabla{B}", "f,g"},
    {"addthm.zero", "additive-thm", "induced zero, boxed",
     "bang(eta{A} ; weak{A} ; u{B} ; eps{B})", "weak{A} ; u{B}", ""},

    // Hopf coalgebra modality
    {"hopf.r", "hopf", "antipode, right",
     "copy{A} ; (id{!A} * S{A}) ; nabla{A}", "weak{A} ; u{A}", ""},
    {"hopf.l", "hopf", "antipode, left",
     "copy{A} ; (S{A} * id{!A}) ; nabla{A}", "weak{A} ; u{A}", ""},

    // antipode properties
    {"S.invol", "hopf-lemma", "antipode is its own inverse",
     "S{A} ; S{A}", "id{!A}", ""},
    {"S.copy", "hopf-lemma", "antipode preserves contraction",
     "S{A} ; copy{A}", "copy{A} ; (S{A} * S{A})", ""},
    {"S.weak", "hopf-lemma", "antipode preserves weakening",
     "S{A} ; weak{A}", "weak{A}", ""},
    {"S.nabla", "hopf-lemma", "antipode preserves cocontraction",
     "nabla{A} ; S{A}", "(S{A} * S{A}) ; nabla{A}", ""},
    {"S.u", "hopf-lemma", "antipode preserves coweakening",
     "u{A} ; S{A}", "u{A}", ""},
    {"S.nat", "hopf-lemma", "antipode naturality",
     "bang(lin f) ; S{B}", "S{A} ; bang(lin f)", "f"},

    // monoidal Hopf
    {"S.delta", "monoidal-hopf", "antipode against digging",
     "S{A} ; delta{A}", "delta{A} ; bang(S{A})", ""},
    {"S.m.r", "monoidal-hopf", "antipode is monoidal, right",
     "(id{!A} * S{B}) ; m{A,B}", "m{A,B} ; S{A*B}", ""},
    {"S.m.l", "monoidal-hopf", "antipode is monoidal, left",
     "(S{A} * id{!B}) ; m{A,B}", "m{A,B} ; S{A*B}", ""},

    // negatives from the antipode
    {"neg.S-f", "hopf-neg-lemma", "antipode then !(f) is !(-f)",
     "S{A} ; bang(lin f)", "bang(-lin f)", "f"},
    {"neg.f-S", "hopf-neg-lemma", "!(f) then antipode is !(-f)",
     "bang(lin f) ; S{B}", "bang(-lin f)", "f"},
    {"neg.f-g", "hopf-neg-lemma", "! of a difference",
     "bang(lin f + -lin g)", "copy{A} ; (bang(lin f) * bang(lin g)) ; (id{!B} * S{B}) ; nabla{B}", "f,g"},
    {"neg.S-eps", "hopf-neg-lemma", "antipode against dereliction",
     "S{A} ; eps{A}", "-eps{A}", ""},

    // deriving transformation
    {"D.1", "deriving", "constant rule",
     "d{A} ; weak{A}", "0 : !A * A -> I", ""},
    {"D.2", "deriving", "Leibniz rule",
     "d{A} ; copy{A}",
     "(copy{A} * id{A}) ; ((id{!A} * d{A}) + ((id{!A} * sigma{!A,A}) ; (d{A} * id{!A})))", ""},
    {"D.3", "deriving", "linear rule",
     "d{A} ; eps{A}", "weak{A} * id{A}", ""},
    {"D.4", "deriving", "chain rule",
     "d{A} ; delta{A}", "(copy{A} * id{A}) ; (delta{A} * d{A}) ; d{!A}", ""},
    {"D.5", "deriving", "interchange rule",
     "(d{A} * id{A}) ; d{A}", "(id{!A} * sigma{A,A}) ; (d{A} * id{A}) ; d{A}", ""},

    // monoidal deriving transformation
    {"D.m.r", "monoidal-deriving", "right monoidal rule",
     "(id{!A} * d{B}) ; m{A,B}",
     "(copy{A} * id{!B} * id{B}) ; (id{!A} * eps{A} * id{!B} * id{B}) ; (id{!A} * sigma{A,!B} * id{B}) ; "
     "(m{A,B} * id{A} * id{B}) ; d{A*B}", ""},
    {"D.m.l", "monoidal-deriving", "left monoidal rule",
     "(d{A} * id{!B}) ; m{A,B}",
     "(id{!A} * id{A} * copy{B}) ; (id{!A} * id{A} * id{!B} * eps{B}) ; (id{!A} * sigma{A,!B} * id{B}) ; "
     "(m{A,B} * id{A} * id{B}) ; d{A*B}", ""},
    {"D.nabla", "monoidal-deriving", "nabla rule",
     "(id{!A} * d{A}) ; nabla{A}", "(nabla{A} * id{A}) ; d{A}", ""},

    // codereliction
    {"cd.1", "codereliction", "constant rule",
     "eta{A} ; weak{A}", "0 : A -> I", ""},
    {"cd.2", "codereliction", "Leibniz rule",
     "eta{A} ; copy{A}", "(eta{A} * u{A}) + (u{A} * eta{A})", ""},
    {"cd.4", "codereliction", "chain rule",
     "eta{A} ; delta{A}", "(u{A} * eta{A}) ; (delta{A} * eta{!A}) ; nabla{!A}", ""},

    // deriving transformation and negatives
    {"D.S", "deriving-neg", "antipode against d",
     "d{A} ; S{A}", "(S{A} * id{A}) ; (-d{A})", ""},
    {"eta.S", "deriving-neg", "antipode against codereliction",
     "eta{A} ; S{A}", "-eta{A}", ""},

    // phi
    {"phi.l", "phi-lemma", "phi against the left unit",
     "(u{A} * id{!A}) ; " PHI, "eps{A}", ""},
    {"phi.r", "phi-lemma", "phi against the right unit",
     "(id{!A} * u{A}) ; " PHI, "eps{A}", ""},
};

#undef PHI

const std::set<std::string> kNegativeTiers = {"hopf", "hopf-lemma", "monoidal-hopf", "hopf-neg-lemma",
                                              "deriving-neg"};

std::vector<AxiomEntry> build_catalog() {
    Obj A = base_obj("A"), B = base_obj("B");
    ParseEnv env;
    std::map<std::string, MetaVar> metas;
    for (const char* name : {"f", "g"}) {
        auto lin = std::make_shared<LinMap>();
        lin->name = name;
        lin->dom = A;
        lin->cod = B;
        env.lins[name] = lin;
        metas[name] = MetaVar{name, A, B};
    }
    std::vector<AxiomEntry> out;
    for (const Raw& r : kRaw) {
        AxiomEntry e;
        e.id = r.id;
        e.tier = r.tier;
        e.anchor = r.anchor;
        e.lhs_text = r.lhs;
        e.rhs_text = r.rhs;
        e.lhs = parse_term(r.lhs, &env);
        e.rhs = parse_term(r.rhs, &env);
        e.requires_negatives = kNegativeTiers.count(e.tier) != 0;
        std::string ms = r.metas;
        for (std::size_t at = 0; at < ms.size();) {
            std::size_t comma = ms.find(',', at);
            if (comma == std::string::npos) comma = ms.size();
            e.metavars.push_back(metas.at(ms.substr(at, comma - at)));
            at = comma + 1;
        }
        out.push_back(std::move(e));
    }
    return out;
}

const std::vector<AxiomEntry>& catalog() {
    static const std::vector<AxiomEntry> c = build_catalog();
    return c;
}

}  // namespace

const std::vector<std::string>& all_tiers() {
    static const std::vector<std::string> t = {
        "comonad",         "coalgebra-modality", "sm-functor",   "monoidal-coalgebra", "pre-codereliction",
        "precoder-lemma",  "bialgebra",          "monoidal-bialgebra", "pre-additive", "convolution",
        "additive-thm",    "hopf",               "hopf-lemma",   "monoidal-hopf",      "hopf-neg-lemma",
        "deriving",        "monoidal-deriving",  "codereliction", "deriving-neg",      "phi-lemma"};
    return t;
}

const std::map<std::string, std::size_t>& tier_counts() {
    static const std::map<std::string, std::size_t> c = {
        {"comonad", 3},         {"coalgebra-modality", 6}, {"sm-functor", 4},    {"monoidal-coalgebra", 10},
        {"pre-codereliction", 3}, {"precoder-lemma", 3},   {"bialgebra", 8},     {"monoidal-bialgebra", 6},
        {"pre-additive", 2},    {"convolution", 2},        {"additive-thm", 2},  {"hopf", 2},
        {"hopf-lemma", 6},      {"monoidal-hopf", 3},      {"hopf-neg-lemma", 4}, {"deriving", 5},
        {"monoidal-deriving", 3}, {"codereliction", 3},    {"deriving-neg", 2},  {"phi-lemma", 2}};
    return c;
}

std::vector<AxiomEntry> all_axioms(const std::set<std::string>& tiers) {
    for (const auto& t : tiers)
        if (!tier_counts().count(t)) throw ConfigError("unknown tier '" + t + "'");
    std::vector<AxiomEntry> out;
    for (const auto& e : catalog())
        if (tiers.empty() || tiers.count(e.tier)) out.push_back(e);
    return out;
}

const AxiomEntry& axiom_by_id(const std::string& id) {
    for (const auto& e : catalog())
        if (e.id == id) return e;
    throw ConfigError("unknown axiom id '" + id + "'");
}

}  // namespace difflin
