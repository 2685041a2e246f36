#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "difflin/term.hpp"

namespace difflin {

// A morphism placeholder in a schema, written `lin NAME` in the terms.
struct MetaVar {
    std::string name;
    Obj dom;
    Obj cod;
};

struct AxiomEntry {
    std::string id;
    std::string tier;
    std::string anchor;  // the law's usual name
    std::vector<MetaVar> metavars;
    std::string lhs_text, rhs_text;
    TermPtr lhs, rhs;  // untyped; lin nodes are the metavariable placeholders
    bool requires_negatives = false;
};

// Tier names in catalog order.
const std::vector<std::string>& all_tiers();

// Asserted number of equations per tier.
const std::map<std::string, std::size_t>& tier_counts();

constexpr std::size_t kAxiomCount = 79;

// Entries of the selected tiers (all tiers when the filter is empty), in
// catalog order. Throws ConfigError on an unknown tier name.
std::vector<AxiomEntry> all_axioms(const std::set<std::string>& tiers = {});

const AxiomEntry& axiom_by_id(const std::string& id);

}  // namespace difflin
