#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "difflin/model.hpp"

namespace difflin {

// Evaluates typed terms in the model by backward contraction: the row of a
// term at an output element is the sparse vector of input coefficients.
// Every generator has finitely many preimages, so rows are finite and exact
// for every term. Rows are memoized per subterm.
class Evaluator {
public:
    explicit Evaluator(ModelConfig cfg) : cfg_(std::move(cfg)) {}

    const ModelConfig& config() const { return cfg_; }

    // t must be annotated.
    const Vec& row(const TermPtr& t, Elem out);
    Coef entry(const TermPtr& t, Elem in, Elem out);

    std::size_t memo_size() const;

private:
    Vec compute(const TermPtr& t, Elem out);
    const Row& lin_row(const LinMap& lin, Elem out);

    ModelConfig cfg_;
    std::vector<TermPtr> roots_;
    std::unordered_map<const Term*, std::unordered_map<Elem, Vec>> memo_;
    std::unordered_map<const LinMap*, std::unordered_map<Elem, Row>> lin_index_;
};

struct Counterexample {
    Elem in;
    Elem out;
    Coef lhs;
    Coef rhs;
};

struct Verdict {
    bool pass = true;
    std::optional<Counterexample> cex;
};

// Compares every entry (in, out) with both sides of structural size <= cap.
// On failure reports the first mismatch in canonical order of (in, out).
Verdict equal_upto(Evaluator& ev, const TermPtr& a, const TermPtr& b, unsigned cap);

// Convenience: annotate, evaluate one entry.
Coef eval_entry(const TermPtr& t, Elem in, Elem out, const ModelConfig& cfg);

}  // namespace difflin
