#include "difflin/semiring.hpp"

#include "difflin/errors.hpp"

namespace difflin {

SemiringDesc semiring(Ring r) {
    switch (r) {
    case Ring::Rational: return {r, true, false};
    case Ring::Integer: return {r, true, false};
    case Ring::Natural: return {r, false, false};
    case Ring::Boolean: return {r, false, true};
    }
    return {r, false, false};
}

const char* ring_name(Ring r) {
    switch (r) {
    case Ring::Rational: return "rational";
    case Ring::Integer: return "integer";
    case Ring::Natural: return "natural";
    case Ring::Boolean: return "boolean";
    }
    return "?";
}

Ring parse_ring(const std::string& s) {
    if (s == "rational") return Ring::Rational;
    if (s == "integer") return Ring::Integer;
    if (s == "natural") return Ring::Natural;
    if (s == "boolean") return Ring::Boolean;
    throw ConfigError("unknown semiring '" + s + "' (rational, integer, natural, boolean)");
}

Coef ring_norm(Ring r, const Coef& c) {
    switch (r) {
    case Ring::Rational: return c;
    case Ring::Integer:
        if (c.get_den() != 1)
            throw RingError("coefficient " + format_coef(c) + " is not representable over integer");
        return c;
    case Ring::Natural:
        if (c.get_den() != 1 || sgn(c) < 0)
            throw RingError("coefficient " + format_coef(c) + " is not representable over natural");
        return c;
    case Ring::Boolean:
        if (sgn(c) < 0)
            throw RingError("coefficient " + format_coef(c) + " is not representable over boolean");
        return sgn(c) == 0 ? Coef(0) : Coef(1);
    }
    return c;
}

Coef ring_neg(Ring r, const Coef& c) {
    if (!semiring(r).has_negatives) {
        if (sgn(c) == 0) return c;
        throw RingError(std::string("negation requires negatives, unavailable over ") + ring_name(r));
    }
    return -c;
}

Coef nat_embed(Ring r, const mpz_class& n) { return ring_norm(r, Coef(n)); }

Coef literal_embed(Ring r, const mpq_class& lit) {
    if (r == Ring::Boolean && sgn(lit) >= 0 && lit.get_den() != 1)
        throw RingError("coefficient " + format_coef(lit) + " is not representable over boolean");
    return ring_norm(r, lit);
}

std::string format_coef(const Coef& c) { return c.get_str(); }

mpq_class parse_coef(const std::string& s) {
    mpq_class q;
    std::string t = s;
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    if (t.empty() || q.set_str(t, 10) != 0) throw SyntaxError("bad coefficient literal '" + s + "'", 0);
    if (q.get_den() == 0) throw SyntaxError("zero denominator in '" + s + "'", 0);
    q.canonicalize();
    return q;
}

}  // namespace difflin
