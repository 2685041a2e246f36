#pragma once

#include <gmpxx.h>

#include <string>

namespace difflin {

enum class Ring { Rational, Integer, Natural, Boolean };

using Coef = mpq_class;

struct SemiringDesc {
    Ring id;
    bool has_negatives;
    bool idempotent_add;
};

SemiringDesc semiring(Ring r);
const char* ring_name(Ring r);
Ring parse_ring(const std::string& s);

// Brings a value computed over the rationals into the ring: clamps to {0,1}
// for boolean and rejects what integer or natural cannot hold.
Coef ring_norm(Ring r, const Coef& c);
Coef ring_neg(Ring r, const Coef& c);
// Image of n under the unique semiring map from the naturals.
Coef nat_embed(Ring r, const mpz_class& n);
// A coefficient literal from a lin declaration.
Coef literal_embed(Ring r, const mpq_class& lit);

std::string format_coef(const Coef& c);
mpq_class parse_coef(const std::string& s);

}  // namespace difflin
