#pragma once

#include <string>

#include "difflin/elem.hpp"
#include "difflin/eval.hpp"
#include "difflin/model.hpp"
#include "difflin/object.hpp"
#include "difflin/parser.hpp"
#include "difflin/typing.hpp"

namespace testutil {

using namespace difflin;

inline Signature sig_of(unsigned a, unsigned b = 1, unsigned c = 1) {
    Signature s;
    s.declare("A", a);
    s.declare("B", b);
    s.declare("C", c);
    return s;
}

inline ModelConfig model(Ring r, const Signature& sig, std::optional<Basis> basis = std::nullopt) {
    ModelConfig mc;
    mc.ring = r;
    mc.sig = sig;
    mc.basis = basis;
    return mc;
}

inline TermPtr typed(const std::string& src, const Signature& sig, const ParseEnv* env = nullptr) {
    ParseEnv local;
    if (!env) {
        local.sig = &sig;
        env = &local;
    }
    return annotate(parse_term(src, env), &sig);
}

inline Elem el(const std::string& lit, const std::string& obj, const Signature& sig) {
    return parse_elem(lit, parse_object(obj, &sig), sig);
}

inline std::string coef(const Coef& c) { return format_coef(c); }

}  // namespace testutil
