#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "difflin/model.hpp"
#include "difflin/semiring.hpp"
#include "difflin/termfile.hpp"

namespace difflin {

enum class Status { Pass, Fail, Skipped, Approximate };

const char* status_name(Status s);

struct CexText {
    std::string in, out, lhs, rhs;
};

struct CheckRecord {
    std::string kind;        // axiom, cross or mutation
    std::string id;
    std::string tier;        // axiom tier, cross-check group or mutation name
    std::string ring;
    unsigned instantiation = 0;
    std::string instance;    // how the metavariables were filled
    Status status = Status::Pass;
    std::string reason;      // for Skipped and errors
    bool expect_pass = true;
    std::optional<CexText> cex;
    std::optional<bool> graph_equal;
    double wall_ms = 0;

    // A Fail that was expected to pass, or a Pass that was expected to fail.
    bool unexpected() const;
};

struct SuiteConfig {
    Ring ring = Ring::Rational;
    std::optional<Basis> basis;
    std::map<std::string, unsigned> dims{{"A", 1}};  // A, B and C default to 1 when absent
    unsigned size_cap = 4;
    // The smallest witnesses for the bialgebra and Leibniz mutations are
    // pairs of singletons, structural size 5, so the mutation suite uses
    // max(size_cap, mutation_cap).
    unsigned mutation_cap = 6;
    std::set<std::string> tiers;  // empty: all
    std::uint64_t seed = 7;
    unsigned instantiations = 3;
    unsigned threads = 0;  // 0: DIFFLIN_THREADS, else 1
};

struct Summary {
    std::size_t total = 0, pass = 0, fail = 0, skipped = 0, approximate = 0, unexpected = 0;
};

struct CheckReport {
    SuiteConfig config;
    std::vector<std::string> sections;
    std::vector<CheckRecord> checks;

    Summary summary() const;
    bool clean() const { return summary().unexpected == 0; }
};

// The signature used for a suite: the configured dims plus A, B, C.
Signature suite_signature(const SuiteConfig& cfg);

// Every selected axiom, every instantiation.
CheckReport run_suite(const SuiteConfig& cfg);
// Derived structure against native structure.
CheckReport cross_checks(const SuiteConfig& cfg);
// Each mutation must fail its designated axioms.
CheckReport mutation_checks(const SuiteConfig& cfg);

void append_report(CheckReport& into, const CheckReport& from);

// Deterministic seed for one named draw.
std::uint64_t derive_seed(std::uint64_t seed, const std::string& scope, unsigned index, const std::string& name);

}  // namespace difflin
