#include "difflin/printer.hpp"

namespace difflin {

namespace {

// Binding levels: sum 0, comp 1, ten 2, unary 3, atom 4.
int level(const TermPtr& t) {
    switch (t->kind) {
    case TermKind::Sum: return 0;
    case TermKind::Comp: return 1;
    case TermKind::Ten: return 2;
    case TermKind::Neg: return 3;
    case TermKind::Zero: return -1;  // always parenthesized when nested
    default: return 4;
    }
}

std::string print(const TermPtr& t);

// A child must bind strictly tighter than its parent; same-operator nesting
// is parenthesized to keep the tree shape.
std::string child(const TermPtr& c, int parent_level) {
    std::string s = print(c);
    if (level(c) <= parent_level) return "(" + s + ")";
    return s;
}

std::string join(const TermPtr& t, const char* sep, int lvl) {
    std::string s;
    for (std::size_t i = 0; i < t->kids.size(); ++i) {
        if (i) s += sep;
        s += child(t->kids[i], lvl);
    }
    return s;
}

std::string print(const TermPtr& t) {
    switch (t->kind) {
    case TermKind::Id: return "id{" + to_string(t->objs[0]) + "}";
    case TermKind::Sym: return "sigma{" + to_string(t->objs[0]) + "," + to_string(t->objs[1]) + "}";
    case TermKind::Gen: {
        std::string s = gen_name(t->gen);
        if (t->objs.empty()) return s;
        s += "{";
        for (std::size_t i = 0; i < t->objs.size(); ++i) {
            if (i) s += ",";
            s += to_string(t->objs[i]);
        }
        return s + "}";
    }
    case TermKind::Comp: return join(t, " ; ", 1);
    case TermKind::Ten: return join(t, " * ", 2);
    case TermKind::Sum: return join(t, " + ", 0);
    case TermKind::Box: return "bang(" + print(t->kids[0]) + ")";
    case TermKind::Neg: return "-" + child(t->kids[0], 2);
    case TermKind::Zero: return "0 : " + to_string(t->objs[0]) + " -> " + to_string(t->objs[1]);
    case TermKind::Lin: return "lin " + t->lin->name;
    }
    return "?";
}

}  // namespace

std::string pretty_print(const TermPtr& t) { return print(t); }

}  // namespace difflin
