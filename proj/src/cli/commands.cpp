#include <CLI11.hpp>
#include <json.hpp>

#include "difflin/axioms.hpp"
#include "difflin/cli.hpp"
#include "difflin/diagram.hpp"
#include "difflin/errors.hpp"
#include "difflin/eval.hpp"
#include "difflin/printer.hpp"
#include "difflin/report.hpp"
#include "difflin/support.hpp"
#include "difflin/termfile.hpp"
#include "difflin/typing.hpp"
#include "difflin/verifier.hpp"

namespace difflin {

namespace {

constexpr unsigned kDefaultCap = 4;

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
    std::vector<std::string> out;
    for (const auto& item : items) {
        std::size_t at = 0;
        while (at <= item.size()) {
            std::size_t c = item.find(',', at);
            if (c == std::string::npos) c = item.size();
            std::string part = item.substr(at, c - at);
            if (!part.empty()) out.push_back(part);
            at = c + 1;
        }
    }
    return out;
}

std::map<std::string, unsigned> parse_dims(const std::string& text) {
    std::map<std::string, unsigned> dims;
    for (const auto& part : split_commas({text})) {
        auto eq = part.find('=');
        if (eq == std::string::npos || eq == 0) throw ConfigError("bad --dims entry '" + part + "', expected NAME=N");
        std::string name = part.substr(0, eq), num = part.substr(eq + 1);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos || std::stoul(num) == 0)
            throw ConfigError("bad dimension in '" + part + "'");
        dims[name] = static_cast<unsigned>(std::stoul(num));
    }
    return dims;
}

std::optional<Basis> basis_option(const std::string& s) {
    if (s != "auto" && s != "monomial" && s != "divided") throw ConfigError("unknown basis '" + s + "'");
    return parse_basis(s);
}

struct Loaded {
    TermFile file;
    TermPtr term;  // annotated subject
};

Loaded load_subject(const std::string& path) {
    Loaded l{load_term_file(path), nullptr};
    if (!l.file.subject) throw ConfigError(path + ": no term to evaluate");
    l.term = annotate(l.file.subject, &l.file.sig);
    return l;
}

ModelConfig model_for(const TermFile& f, const std::string& ring_opt, const std::string& basis_opt,
                      std::optional<unsigned> fallback) {
    ModelConfig mc;
    mc.sig = f.sig;
    mc.ring = !ring_opt.empty() ? parse_ring(ring_opt) : f.ring.value_or(Ring::Rational);
    mc.basis = !basis_opt.empty() ? basis_option(basis_opt) : f.basis;
    mc.fallback_cap = fallback ? fallback : f.fallback_cap;
    return mc;
}

struct CheckOpts {
    std::string semiring = "rational", basis = "auto", dims = "A=1";
    unsigned size_cap = kDefaultCap, mutation_cap = 6, inst = 3;
    std::uint64_t seed = 7;
    std::vector<std::string> tiers;
    bool mutations = false, cross = false, all = false, json = false, timings = false;
};

int cmd_check(const CheckOpts& o, std::ostream& out, std::ostream& err) {
    SuiteConfig cfg;
    cfg.ring = parse_ring(o.semiring);
    cfg.basis = basis_option(o.basis);
    cfg.dims = parse_dims(o.dims);
    cfg.size_cap = o.size_cap;
    cfg.mutation_cap = o.mutation_cap;
    cfg.seed = o.seed;
    cfg.instantiations = o.inst;
    for (const auto& t : split_commas(o.tiers)) cfg.tiers.insert(t);
    all_axioms(cfg.tiers);  // validates tier names before any work
    suite_signature(cfg);

    bool axioms = o.all || (!o.cross && !o.mutations);
    CheckReport rep;
    rep.config = cfg;
    if (axioms) append_report(rep, run_suite(cfg));
    if (o.all || o.cross) append_report(rep, cross_checks(cfg));
    if (o.all || o.mutations) append_report(rep, mutation_checks(cfg));

    Summary s = rep.summary();
    if (o.json)
        out << report_json(rep, o.timings);
    else
        out << report_text(rep, o.timings);
    if (s.skipped) {
        std::ostream& note = o.json ? err : out;
        note << "note: " << s.skipped << " check(s) skipped";
        if (!semiring(cfg.ring).has_negatives) note << "; semiring " << ring_name(cfg.ring) << " has no negatives";
        note << "\n";
    }
    return s.unexpected ? 1 : 0;
}

struct EvalOpts {
    std::string file, input, semiring, basis;
    std::vector<std::string> entry;
    std::optional<unsigned> fallback, size_cap;
};

int cmd_eval(const EvalOpts& o, std::ostream& out) {
    Loaded l = load_subject(o.file);
    ModelConfig mc = model_for(l.file, o.semiring, o.basis, o.fallback);
    const Signature& sig = mc.sig;
    if (!o.entry.empty()) {
        Elem in = parse_elem(o.entry[0], l.term->dom, sig);
        Elem ou = parse_elem(o.entry[1], l.term->cod, sig);
        out << format_coef(eval_entry(l.term, in, ou, mc)) << "\n";
        return 0;
    }
    if (!o.input.empty()) {
        Elem in = parse_elem(o.input, l.term->dom, sig);
        VectorResult v = eval_vector(l.term, in, mc);
        for (const auto& [e, c] : v.entries) out << format_elem(e, sig) << ": " << format_coef(c) << "\n";
        if (v.entries.empty()) out << "(zero vector)\n";
        if (v.approximate) out << "approximate: interior wires cut at size " << *mc.fallback_cap << "\n";
        return 0;
    }
    unsigned cap = o.size_cap ? *o.size_cap : l.file.size_cap.value_or(kDefaultCap);
    Evaluator ev(mc);
    std::size_t shown = 0;
    for (Elem ou : basis_enum(l.term->cod, cap, sig)) {
        std::vector<std::pair<Elem, Coef>> row;
        for (const auto& [in, c] : ev.row(l.term, ou))
            if (in->size <= cap) row.emplace_back(in, c);
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
        for (const auto& [in, c] : row) {
            out << format_elem(in, sig) << " -> " << format_elem(ou, sig) << ": " << format_coef(c) << "\n";
            ++shown;
        }
    }
    out << shown << " nonzero entries with in and out of size <= " << cap << "\n";
    return 0;
}

void merge_signature(Signature& into, const Signature& from) {
    for (const auto& [name, dim] : from.dims) {
        auto it = into.dims.find(name);
        if (it != into.dims.end() && it->second != dim)
            throw ConfigError("base " + name + " has dimension " + std::to_string(it->second) + " and " +
                              std::to_string(dim) + " in the two files");
        into.dims[name] = dim;
    }
}

int cmd_equal(const std::string& f1, const std::string& f2, const std::string& ring, const std::string& basis,
              std::optional<unsigned> size_cap, std::ostream& out) {
    Loaded a = load_subject(f1), b = load_subject(f2);
    ModelConfig mc = model_for(a.file, ring, basis, std::nullopt);
    merge_signature(mc.sig, b.file.sig);
    if (ring.empty() && !a.file.ring && b.file.ring) mc.ring = *b.file.ring;
    if (a.term->dom != b.term->dom || a.term->cod != b.term->cod) {
        out << "not equal (types differ: " << to_string(a.term->dom) << " -> " << to_string(a.term->cod) << " vs "
            << to_string(b.term->dom) << " -> " << to_string(b.term->cod) << ")\n";
        return 1;
    }
    if (is_sum_free(a.term) && is_sum_free(b.term) && graphs_equal(term_to_graph(a.term), term_to_graph(b.term))) {
        out << "equal (graph)\n";
        return 0;
    }
    unsigned cap = size_cap ? *size_cap : a.file.size_cap.value_or(b.file.size_cap.value_or(kDefaultCap));
    Evaluator ev(mc);
    Verdict v = equal_upto(ev, a.term, b.term, cap);
    if (v.pass) {
        out << "equal (model, cap " << cap << ")\n";
        return 0;
    }
    out << "not equal\ncounterexample: in " << format_elem(v.cex->in, mc.sig) << ", out "
        << format_elem(v.cex->out, mc.sig) << ": " << format_coef(v.cex->lhs) << " vs " << format_coef(v.cex->rhs)
        << "\n";
    return 1;
}

int cmd_graph(const std::string& file, bool dot, std::ostream& out) {
    Loaded l = load_subject(file);
    PortGraph g = term_to_graph(l.term);
    if (dot)
        out << emit_dot(g);
    else
        out << canonical_form(g) << "\n";
    return 0;
}

int cmd_axioms(const std::vector<std::string>& tiers, bool json, std::ostream& out) {
    std::set<std::string> filter;
    for (const auto& t : split_commas(tiers)) filter.insert(t);
    auto axioms = all_axioms(filter);
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& a : axioms)
            arr.push_back({{"id", a.id},
                           {"tier", a.tier},
                           {"anchor", a.anchor},
                           {"requires_negatives", a.requires_negatives},
                           {"lhs", a.lhs_text},
                           {"rhs", a.rhs_text}});
        out << arr.dump(2) << "\n";
        return 0;
    }
    for (const auto& a : axioms)
        out << a.id << "\t" << a.tier << "\t" << a.anchor << "\t"
            << (a.requires_negatives ? "requires negatives" : "-") << "\n";
    out << axioms.size() << " equations\n";
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Checks differential linear category laws in the free-exponential model", "difflin"};
    app.require_subcommand(1);

    CheckOpts co;
    auto* check = app.add_subcommand("check", "Run the axiom suite, cross checks and mutation checks");
    check->add_option("--semiring", co.semiring, "rational, integer, natural or boolean")->capture_default_str();
    check->add_option("--basis", co.basis, "auto, monomial or divided")->capture_default_str();
    check->add_option("--dims", co.dims, "Base dimensions, e.g. A=2,B=1 (A, B, C default to 1)")->capture_default_str();
    check->add_option("--size-cap", co.size_cap, "Largest structural size of compared entries")->capture_default_str();
    check->add_option("--mutation-cap", co.mutation_cap, "Cap for the mutation checks (at least --size-cap)")
        ->capture_default_str();
    check->add_option("--seed", co.seed, "Seed for random metavariable maps")->capture_default_str();
    check->add_option("--inst", co.inst, "Instantiations per schema with metavariables")->capture_default_str();
    check->add_option("--tier", co.tiers, "Restrict to these tiers (repeatable or comma-separated)");
    check->add_flag("--cross", co.cross, "Run the cross checks");
    check->add_flag("--mutations", co.mutations, "Run the mutation checks");
    check->add_flag("--all", co.all, "Run axioms, cross checks and mutation checks");
    check->add_flag("--json", co.json, "Print the JSON report");
    check->add_flag("--timings", co.timings, "Include wall times");

    EvalOpts eo;
    auto* eval = app.add_subcommand("eval", "Evaluate the term of a file");
    eval->add_option("file", eo.file, "Term file")->required();
    eval->add_option("--entry", eo.entry, "One matrix entry: IN OUT")->expected(2)->allow_extra_args(false);
    eval->add_option("--input", eo.input, "Full output vector at IN");
    eval->add_option("--semiring", eo.semiring, "Override the file's semiring");
    eval->add_option("--basis", eo.basis, "Override the file's basis");
    eval->add_option("--fallback-cap", eo.fallback, "Cut unbounded interior wires at this size");
    eval->add_option("--size-cap", eo.size_cap, "Matrix listing cap");

    std::string e1, e2, eq_ring, eq_basis;
    std::optional<unsigned> eq_cap;
    auto* equal = app.add_subcommand("equal", "Compare the terms of two files");
    equal->add_option("file1", e1, "Term file")->required();
    equal->add_option("file2", e2, "Term file")->required();
    equal->add_option("--semiring", eq_ring, "Override the semiring");
    equal->add_option("--basis", eq_basis, "Override the basis");
    equal->add_option("--size-cap", eq_cap, "Comparison cap");

    std::string gfile;
    bool gdot = false;
    auto* graph = app.add_subcommand("graph", "Print the canonical string diagram of a file's term");
    graph->add_option("file", gfile, "Term file")->required();
    graph->add_flag("--dot", gdot, "Emit DOT instead of the canonical form");

    std::string action = "list";
    std::vector<std::string> atiers;
    bool ajson = false;
    auto* axioms = app.add_subcommand("axioms", "List the equation catalog");
    axioms->add_option("action", action, "list")->check(CLI::IsMember({"list"}));
    axioms->add_option("--tier", atiers, "Restrict to these tiers");
    axioms->add_flag("--json", ajson, "Print JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return cmd_check(co, out, err);
        if (eval->parsed()) {
            if (!eo.entry.empty() && !eo.input.empty()) throw ConfigError("--entry and --input are exclusive");
            return cmd_eval(eo, out);
        }
        if (equal->parsed()) return cmd_equal(e1, e2, eq_ring, eq_basis, eq_cap, out);
        if (graph->parsed()) return cmd_graph(gfile, gdot, out);
        if (axioms->parsed()) return cmd_axioms(atiers, ajson, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace difflin
