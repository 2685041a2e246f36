#include "difflin/report.hpp"

#include <json.hpp>
#include <sstream>

namespace difflin {

namespace {

nlohmann::json config_json(const SuiteConfig& cfg) {
    nlohmann::json c;
    c["semiring"] = ring_name(cfg.ring);
    c["basis"] = cfg.basis ? basis_name(*cfg.basis) : "auto";
    nlohmann::json dims = nlohmann::json::object();
    for (const auto& [name, dim] : suite_signature(cfg).dims) dims[name] = dim;
    c["dims"] = dims;
    c["size_cap"] = cfg.size_cap;
    c["mutation_cap"] = cfg.mutation_cap;
    c["seed"] = cfg.seed;
    c["instantiations"] = cfg.instantiations;
    nlohmann::json tiers = nlohmann::json::array();
    for (const auto& t : cfg.tiers) tiers.push_back(t);
    c["tiers"] = cfg.tiers.empty() ? nlohmann::json("all") : tiers;
    return c;
}

std::string describe(const CheckRecord& c) {
    std::string s = c.kind + " " + c.id;
    if (!c.instance.empty() && c.kind == "axiom") s += " [" + c.instance + "]";
    return s;
}

}  // namespace

std::string report_json(const CheckReport& rep, bool timings) {
    nlohmann::json j;
    j["config"] = config_json(rep.config);
    nlohmann::json sections = nlohmann::json::array();
    for (const auto& s : rep.sections) sections.push_back(s);
    j["config"]["sections"] = sections;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        nlohmann::json r;
        r["kind"] = c.kind;
        r["id"] = c.id;
        r["tier"] = c.tier;
        r["semiring"] = c.ring;
        r["instantiation"] = c.instantiation;
        r["instance"] = c.instance;
        r["status"] = status_name(c.status);
        r["expect"] = c.expect_pass ? "pass" : "fail";
        r["unexpected"] = c.unexpected();
        if (!c.reason.empty()) r["reason"] = c.reason;
        if (c.cex) r["counterexample"] = {{"in", c.cex->in}, {"out", c.cex->out}, {"lhs", c.cex->lhs}, {"rhs", c.cex->rhs}};
        if (c.graph_equal) r["graph_equal"] = *c.graph_equal;
        if (timings) r["wall_ms"] = c.wall_ms;
        checks.push_back(std::move(r));
    }
    j["checks"] = checks;
    Summary s = rep.summary();
    j["summary"] = {{"total", s.total},       {"pass", s.pass},       {"fail", s.fail},
                    {"skipped", s.skipped},   {"approximate", s.approximate},
                    {"unexpected", s.unexpected}, {"clean", s.unexpected == 0}};
    return j.dump(2) + "\n";
}

std::string report_text(const CheckReport& rep, bool timings) {
    std::ostringstream os;
    const SuiteConfig& cfg = rep.config;
    os << "semiring " << ring_name(cfg.ring) << ", basis " << (cfg.basis ? basis_name(*cfg.basis) : "auto")
       << ", dims";
    const char* sep = " ";
    for (const auto& [name, dim] : suite_signature(cfg).dims) {
        os << sep << name << "=" << dim;
        sep = ",";
    }
    os << ", size_cap " << cfg.size_cap << ", mutation_cap " << cfg.mutation_cap << ", seed " << cfg.seed << ", instantiations " << cfg.instantiations
       << "\n";
    for (const auto& c : rep.checks) {
        os << (c.unexpected() ? "!! " : "   ") << status_name(c.status);
        if (!c.expect_pass) os << " (expected fail)";
        os << "  " << describe(c);
        if (c.kind != "axiom" || c.ring != ring_name(cfg.ring)) os << " <" << c.tier << ", " << c.ring << ">";
        if (c.cex) os << "  at in " << c.cex->in << ", out " << c.cex->out << ": " << c.cex->lhs << " vs " << c.cex->rhs;
        if (!c.reason.empty()) os << "  (" << c.reason << ")";
        if (timings) os << "  " << c.wall_ms << " ms";
        os << "\n";
    }
    Summary s = rep.summary();
    os << s.total << " checks: " << s.pass << " pass, " << s.fail << " fail, " << s.skipped << " skipped, "
       << s.approximate << " approximate; " << s.unexpected << " unexpected\n";
    return os.str();
}

}  // namespace difflin
