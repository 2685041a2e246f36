#include "difflin/verifier.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <thread>

#include "difflin/axioms.hpp"
#include "difflin/constructions.hpp"
#include "difflin/diagram.hpp"
#include "difflin/errors.hpp"
#include "difflin/eval.hpp"
#include "difflin/parser.hpp"
#include "difflin/typing.hpp"

namespace difflin {

const char* status_name(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::Approximate: return "approximate";
    }
    return "?";
}

bool CheckRecord::unexpected() const {
    if (status == Status::Skipped) return false;
    return expect_pass ? status == Status::Fail : status == Status::Pass;
}

Summary CheckReport::summary() const {
    Summary s;
    for (const auto& c : checks) {
        ++s.total;
        switch (c.status) {
        case Status::Pass: ++s.pass; break;
        case Status::Fail: ++s.fail; break;
        case Status::Skipped: ++s.skipped; break;
        case Status::Approximate: ++s.approximate; break;
        }
        if (c.unexpected()) ++s.unexpected;
    }
    return s;
}

void append_report(CheckReport& into, const CheckReport& from) {
    into.sections.insert(into.sections.end(), from.sections.begin(), from.sections.end());
    into.checks.insert(into.checks.end(), from.checks.begin(), from.checks.end());
}

std::uint64_t derive_seed(std::uint64_t seed, const std::string& scope, unsigned index, const std::string& name) {
    // FNV-1a over a fixed serialization, stable across platforms.
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
    };
    mix(std::to_string(seed));
    mix(scope);
    mix(std::to_string(index));
    mix(name);
    return h;
}

Signature suite_signature(const SuiteConfig& cfg) {
    Signature sig;
    for (const char* b : {"A", "B", "C"}) sig.declare(b, 1);
    for (const auto& [name, dim] : cfg.dims) {
        if (dim == 0) throw ConfigError("dimension of " + name + " must be at least 1");
        sig.dims[name] = dim;
    }
    return sig;
}

namespace {

using Clock = std::chrono::steady_clock;

unsigned thread_count(const SuiteConfig& cfg) {
    if (cfg.threads) return cfg.threads;
    if (const char* env = std::getenv("DIFFLIN_THREADS")) {
        char* end = nullptr;
        unsigned long n = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && n >= 1) return static_cast<unsigned>(n);
    }
    return 1;
}

std::vector<CheckRecord> run_tasks(const std::vector<std::function<CheckRecord()>>& tasks, unsigned threads) {
    std::vector<CheckRecord> out(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < tasks.size();) {
            auto t0 = Clock::now();
            out[i] = tasks[i]();
            out[i].wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    if (threads == 1) {
        worker();
        return out;
    }
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

ModelConfig model_config(const SuiteConfig& cfg, Ring ring) {
    ModelConfig mc;
    mc.ring = ring;
    mc.basis = cfg.basis;
    mc.sig = suite_signature(cfg);
    return mc;
}

enum class LinMode { Identity, Zero, Random };

const char* mode_name(LinMode m) {
    switch (m) {
    case LinMode::Identity: return "identity";
    case LinMode::Zero: return "zero";
    case LinMode::Random: return "random";
    }
    return "?";
}

LinPtr make_lin(const std::string& name, Obj dom, Obj cod, LinMode mode, std::uint64_t seed, Ring ring,
                const Signature& sig) {
    auto lin = std::make_shared<LinMap>();
    lin->name = name;
    lin->dom = dom;
    lin->cod = cod;
    auto ins = basis_enum(dom, 3, sig), outs = basis_enum(cod, 3, sig);
    if (mode == LinMode::Identity) {
        for (std::size_t i = 0; i < ins.size() && i < outs.size(); ++i) lin->entries.push_back({ins[i], outs[i], 1});
    } else if (mode == LinMode::Random) {
        std::mt19937_64 rng(seed);
        unsigned span = ring == Ring::Boolean ? 2 : 3;
        for (Elem x : ins)
            for (Elem y : outs) {
                unsigned c = static_cast<unsigned>(rng() % span);
                if (c) lin->entries.push_back({x, y, mpq_class(c)});
            }
    }
    return lin;
}

TermPtr lin_term(const LinPtr& l) { return mk_lin(l); }

// Matrix oracle: the entrywise combination a*f + b*g of explicit maps.
LinPtr combine_lins(const std::string& name, const LinMap& f, const mpq_class& a, const LinMap* g,
                    const mpq_class& b) {
    std::map<std::pair<Elem, Elem>, mpq_class, std::function<bool(const std::pair<Elem, Elem>&,
                                                                  const std::pair<Elem, Elem>&)>>
        acc([](const auto& x, const auto& y) {
            int c = compare(x.first, y.first);
            return c != 0 ? c < 0 : compare(x.second, y.second) < 0;
        });
    for (const auto& e : f.entries) acc[{e.in, e.out}] += a * e.coef;
    if (g)
        for (const auto& e : g->entries) acc[{e.in, e.out}] += b * e.coef;
    auto lin = std::make_shared<LinMap>();
    lin->name = name;
    lin->dom = f.dom;
    lin->cod = f.cod;
    for (const auto& [k, c] : acc)
        if (sgn(c) != 0) lin->entries.push_back({k.first, k.second, c});
    return lin;
}

// Compares two untyped sides and fills status and counterexample.
void decide(CheckRecord& rec, const ModelConfig& mc, const TermPtr& lhs, const TermPtr& rhs, unsigned cap,
            bool with_graph) {
    try {
        TermPtr a = annotate(lhs, &mc.sig), b = annotate(rhs, &mc.sig);
        if (with_graph && is_sum_free(a) && is_sum_free(b))
            rec.graph_equal = graphs_equal(term_to_graph(a), term_to_graph(b));
        Evaluator ev(mc);
        Verdict v = equal_upto(ev, a, b, cap);
        rec.status = v.pass ? Status::Pass : Status::Fail;
        if (v.cex)
            rec.cex = CexText{format_elem(v.cex->in, mc.sig), format_elem(v.cex->out, mc.sig),
                              format_coef(v.cex->lhs), format_coef(v.cex->rhs)};
        if (!v.pass && rec.graph_equal.value_or(false)) rec.reason = "graph equality and model disagree";
    } catch (const UnboundedError& e) {
        rec.status = Status::Skipped;
        rec.reason = e.what();
    } catch (const std::exception& e) {
        rec.status = Status::Fail;
        rec.reason = e.what();
    }
}

void skip_without_negatives(CheckRecord& rec) {
    rec.status = Status::Skipped;
    rec.reason = "requires negatives";
}

std::function<CheckRecord()> axiom_task(const SuiteConfig& cfg, const AxiomEntry& ax, unsigned inst) {
    return [&cfg, &ax, inst] {
        CheckRecord rec;
        rec.kind = "axiom";
        rec.id = ax.id;
        rec.tier = ax.tier;
        rec.ring = ring_name(cfg.ring);
        rec.instantiation = inst;
        if (ax.requires_negatives && !semiring(cfg.ring).has_negatives) {
            skip_without_negatives(rec);
            return rec;
        }
        ModelConfig mc = model_config(cfg, cfg.ring);
        std::vector<LinPtr> subst;
        for (std::size_t k = 0; k < ax.metavars.size(); ++k) {
            const MetaVar& mv = ax.metavars[k];
            LinMode mode = k == 0 ? static_cast<LinMode>(inst % 3) : LinMode::Random;
            std::uint64_t s = derive_seed(cfg.seed, ax.id, inst, mv.name);
            subst.push_back(make_lin(mv.name, mv.dom, mv.cod, mode, s, cfg.ring, mc.sig));
            if (!rec.instance.empty()) rec.instance += ", ";
            rec.instance += mv.name + "=" + mode_name(mode);
            if (mode == LinMode::Random) rec.instance += " seed " + std::to_string(s);
        }
        decide(rec, mc, substitute_lins(ax.lhs, subst), substitute_lins(ax.rhs, subst), cfg.size_cap, true);
        return rec;
    };
}

// Replaces every generator node for which fn returns a term.
TermPtr replace_gens(const TermPtr& t, const std::function<TermPtr(const Term&)>& fn) {
    if (t->kind == TermKind::Gen) {
        if (TermPtr r = fn(*t)) return r;
        return t;
    }
    if (t->kids.empty()) return t;
    auto copy = std::make_shared<Term>(*t);
    copy->dom = copy->cod = nullptr;
    for (auto& k : copy->kids) k = replace_gens(k, fn);
    return copy;
}

struct Pair {
    std::string id;
    std::string lhs, rhs;
};

}  // namespace

CheckReport run_suite(const SuiteConfig& cfg) {
    CheckReport rep;
    rep.config = cfg;
    rep.sections = {"axioms"};
    auto axioms = all_axioms(cfg.tiers);
    std::vector<std::function<CheckRecord()>> tasks;
    for (const auto& ax : axioms) {
        unsigned n = ax.metavars.empty() ? 1 : std::max(1u, cfg.instantiations);
        for (unsigned i = 0; i < n; ++i) tasks.push_back(axiom_task(cfg, ax, i));
    }
    rep.checks = run_tasks(tasks, thread_count(cfg));
    return rep;
}

CheckReport cross_checks(const SuiteConfig& cfg) {
    CheckReport rep;
    rep.config = cfg;
    rep.sections = {"cross"};
    const Ring R = cfg.ring;
    const bool negs = semiring(R).has_negatives;
    const Signature sig = suite_signature(cfg);
    Obj A = base_obj("A"), B = base_obj("B"), C = base_obj("C");
    std::vector<std::function<CheckRecord()>> tasks;

    auto record = [&](std::string group, std::string id) {
        CheckRecord r;
        r.kind = "cross";
        r.tier = std::move(group);
        r.id = std::move(id);
        r.ring = ring_name(R);
        return r;
    };
    auto rlin = [&](const std::string& scope, unsigned i, const std::string& name, Obj dom, Obj cod) {
        return make_lin(name, dom, cod, LinMode::Random, derive_seed(cfg.seed, scope, i, name), R, sig);
    };
    auto typed = [&](const LinPtr& l) { return annotate(lin_term(l), &sig); };

    // Induced addition, zero and negation against the matrix operations.
    for (unsigned i = 0; i < 10; ++i) {
        tasks.push_back([=, &cfg] {
            CheckRecord rec = record("convolution", "conv.sum." + std::to_string(i));
            LinPtr f = rlin("conv", i, "f", A, B), g = rlin("conv", i, "g", A, B);
            rec.instance = "f, g random";
            decide(rec, model_config(cfg, R), build_sum(typed(f), typed(g)),
                   lin_term(combine_lins("f_plus_g", *f, 1, g.get(), 1)), cfg.size_cap, false);
            return rec;
        });
    }
    tasks.push_back([=, &cfg] {
        CheckRecord rec = record("convolution", "conv.zero");
        decide(rec, model_config(cfg, R), build_zero(A, B), mk_zero(A, B), cfg.size_cap, false);
        return rec;
    });
    for (unsigned i = 0; i < 10; ++i) {
        tasks.push_back([=, &cfg] {
            CheckRecord rec = record("convolution", "conv.neg." + std::to_string(i));
            if (!negs) {
                skip_without_negatives(rec);
                return rec;
            }
            LinPtr f = rlin("conv", i, "f", A, B);
            rec.instance = "f random";
            decide(rec, model_config(cfg, R), build_neg(typed(f), R),
                   lin_term(combine_lins("minus_f", *f, -1, nullptr, 0)), cfg.size_cap, false);
            return rec;
        });
    }
    tasks.push_back([=, &cfg] {
        CheckRecord rec = record("convolution", "conv.neg.cancel");
        if (!negs) {
            skip_without_negatives(rec);
            return rec;
        }
        TermPtr f = typed(rlin("conv", 0, "f", A, B));
        decide(rec, model_config(cfg, R), build_sum(f, annotate(build_neg(f, R), &sig)), build_zero(A, B),
               cfg.size_cap, false);
        return rec;
    });

    // Commutative monoid laws of the induced sum.
    auto sum_of = [&](const TermPtr& x, const TermPtr& y) { return annotate(build_sum(x, y), &sig); };
    tasks.push_back([=, &cfg] {
        CheckRecord rec = record("induced-monoid", "sum.assoc");
        TermPtr f = typed(rlin("monoid", 0, "f", A, B)), g = typed(rlin("monoid", 0, "g", A, B)),
                h = typed(rlin("monoid", 0, "h", A, B));
        decide(rec, model_config(cfg, R), build_sum(sum_of(f, g), h), build_sum(f, sum_of(g, h)), cfg.size_cap,
               false);
        return rec;
    });
    tasks.push_back([=, &cfg] {
        CheckRecord rec = record("induced-monoid", "sum.comm");
        TermPtr f = typed(rlin("monoid", 1, "f", A, B)), g = typed(rlin("monoid", 1, "g", A, B));
        decide(rec, model_config(cfg, R), build_sum(f, g), build_sum(g, f), cfg.size_cap, false);
        return rec;
    });
    tasks.push_back([=, &cfg] {
        CheckRecord rec = record("induced-monoid", "sum.unit");
        TermPtr f = typed(rlin("monoid", 2, "f", A, B));
        decide(rec, model_config(cfg, R), build_sum(f, annotate(build_zero(A, B), &sig)), f, cfg.size_cap, false);
        return rec;
    });

    // Constructions of one structure from another.
    auto roundtrip = [&](std::string id, std::function<TermPtr()> lhs, std::function<TermPtr()> rhs) {
        tasks.push_back([=, &cfg] {
            CheckRecord rec = record("roundtrip", id);
            decide(rec, model_config(cfg, R), lhs(), rhs(), cfg.size_cap, false);
            return rec;
        });
    };
    roundtrip("nabla.from.m", [=] { return build_nabla_from_m(A); }, [=] { return mk_gen(GenKind::Nabla, {A}); });
    roundtrip("u.from.m", [=] { return build_u_from_m(A); }, [=] { return mk_gen(GenKind::U, {A}); });
    roundtrip("m.from.nabla", [=] { return build_m_from_nabla(A, B); }, [=] { return mk_gen(GenKind::M, {A, B}); });
    roundtrip("mI.from.nabla", [] { return build_mI_from_nabla(); }, [] { return mk_gen(GenKind::MI); });
    roundtrip("d.from.eta", [=] { return build_d_from_eta(A); }, [=] { return mk_gen(GenKind::D, {A}); });
    roundtrip("eta.from.d", [=] { return build_eta_from_d(A); }, [=] { return mk_gen(GenKind::Eta, {A}); });
    roundtrip(
        "eta.d.eta",
        [=] {
            return replace_gens(build_eta_from_d(A), [](const Term& g) -> TermPtr {
                return g.gen == GenKind::D ? build_d_from_eta(g.objs[0]) : nullptr;
            });
        },
        [=] { return mk_gen(GenKind::Eta, {A}); });
    roundtrip(
        "d.eta.d",
        [=] {
            return replace_gens(build_d_from_eta(A), [](const Term& g) -> TermPtr {
                return g.gen == GenKind::Eta ? build_eta_from_d(g.objs[0]) : nullptr;
            });
        },
        [=] { return mk_gen(GenKind::D, {A}); });
    roundtrip(
        "m.nabla.m",
        [=] {
            return replace_gens(build_m_from_nabla(A, B), [](const Term& g) -> TermPtr {
                if (g.gen == GenKind::Nabla) return build_nabla_from_m(g.objs[0]);
                if (g.gen == GenKind::U) return build_u_from_m(g.objs[0]);
                return nullptr;
            });
        },
        [=] { return mk_gen(GenKind::M, {A, B}); });

    // Antipode.
    tasks.push_back([=, &cfg] {
        CheckRecord rec = record("antipode", "antipode.native");
        if (!negs) {
            skip_without_negatives(rec);
            return rec;
        }
        decide(rec, model_config(cfg, R), build_antipode(A, R, sig), mk_gen(GenKind::S, {A}), cfg.size_cap, false);
        return rec;
    });
    tasks.push_back([=, &cfg] {
        CheckRecord rec = record("antipode", "antipode.hopf");
        if (!negs) {
            skip_without_negatives(rec);
            return rec;
        }
        Obj bA = bang_obj(A);
        TermPtr lhs = mk_comp({mk_gen(GenKind::Copy, {A}), mk_ten({mk_id(bA), build_antipode(A, R, sig)}),
                               mk_gen(GenKind::Nabla, {A})});
        TermPtr rhs = mk_comp({mk_gen(GenKind::Weak, {A}), mk_gen(GenKind::U, {A})});
        decide(rec, model_config(cfg, R), lhs, rhs, cfg.size_cap, false);
        return rec;
    });

    // Graph equality against the model. f : A -> B, g : B -> C, h : C -> A.
    static const std::vector<Pair> smc = {
        {"graph.interchange", "(lin f * id{C}) ; (id{B} * lin h)", "(id{A} * lin h) ; (lin f * id{A})"},
        {"graph.sym.natural", "(lin f * lin h) ; sigma{B,A}", "sigma{A,C} ; (lin h * lin f)"},
        {"graph.sym.involution", "sigma{A,B} ; sigma{B,A}", "id{A * B}"},
        {"graph.tensor.assoc", "((eps{A} * eps{B}) * (eps{A} * weak{C}))", "(eps{A} * (eps{B} * (eps{A} * weak{C})))"},
        {"graph.unit", "id{A} ; lin f ; id{B}", "lin f"},
        {"graph.hexagon", "sigma{A, B * C}", "(sigma{A,B} * id{C}) ; (id{B} * sigma{A,C})"},
        {"graph.box.interchange", "bang((lin f * id{C}) ; (id{B} * lin h))", "bang((id{A} * lin h) ; (lin f * id{A}))"},
    };
    static const std::vector<Pair> non_smc = {
        {"graph.linear-rule", "eta{A} ; eps{A}", "id{A}"},
        {"graph.cocommutative", "copy{A}", "copy{A} ; sigma{!A,!A}"},
        {"graph.comonad-counit", "delta{A} ; eps{!A}", "id{!A}"},
        {"graph.functoriality", "bang(lin f ; lin g)", "bang(lin f) ; bang(lin g)"},
        {"graph.leibniz-split", "eta{A} ; copy{A}", "eta{A} * u{A}"},
    };
    auto graph_task = [&](const Pair& p, bool expect_graph) {
        tasks.push_back([=, &cfg] {
            CheckRecord rec = record(expect_graph ? "graph-smc" : "graph-non-smc", p.id);
            ParseEnv env;
            env.sig = &sig;
            env.lins["f"] = rlin("graph", 0, "f", A, B);
            env.lins["g"] = rlin("graph", 0, "g", B, C);
            env.lins["h"] = rlin("graph", 0, "h", C, A);
            rec.instance = p.lhs + " vs " + p.rhs;
            try {
                TermPtr a = parse_term(p.lhs, &env), b = parse_term(p.rhs, &env);
                decide(rec, model_config(cfg, R), a, b, cfg.size_cap, true);
            } catch (const std::exception& e) {
                rec.status = Status::Fail;
                rec.reason = e.what();
                return rec;
            }
            if (!rec.graph_equal) {
                if (rec.reason.empty()) rec.reason = "no graph verdict";
                rec.status = Status::Fail;
                return rec;
            }
            bool model_equal = rec.status == Status::Pass;
            rec.reason = std::string("graph ") + (*rec.graph_equal ? "equal" : "distinct") + ", model " +
                         (model_equal ? "equal" : "distinct");
            bool ok = expect_graph ? (*rec.graph_equal && model_equal) : !*rec.graph_equal;
            rec.status = ok ? Status::Pass : Status::Fail;
            return rec;
        });
    };
    for (const auto& p : smc) graph_task(p, true);
    for (const auto& p : non_smc) graph_task(p, false);

    rep.checks = run_tasks(tasks, thread_count(cfg));
    return rep;
}

CheckReport mutation_checks(const SuiteConfig& cfg) {
    struct Designation {
        Mutation mutation;
        Ring ring;
        std::vector<std::string> axioms;
    };
    static const std::vector<Designation> designations = {
        {Mutation::ScaleEta2, Ring::Rational, {"cd.3"}},
        {Mutation::FlatBialgebra, Ring::Rational, {"bimonoid"}},
        {Mutation::DropS, Ring::Integer, {"hopf.r", "hopf.l"}},
        {Mutation::SwapD, Ring::Rational, {"D.2"}},
    };
    CheckReport rep;
    rep.config = cfg;
    rep.sections = {"mutations"};
    std::vector<std::function<CheckRecord()>> tasks;
    for (const auto& d : designations) {
        for (const auto& id : d.axioms) {
            tasks.push_back([&cfg, &d, id] {
                const AxiomEntry& ax = axiom_by_id(id);
                CheckRecord rec;
                rec.kind = "mutation";
                rec.id = ax.id;
                rec.tier = mutation_name(d.mutation);
                rec.ring = ring_name(d.ring);
                rec.expect_pass = false;
                ModelConfig mc = model_config(cfg, d.ring);
                mc.mutations = {d.mutation};
                decide(rec, mc, ax.lhs, ax.rhs, std::max(cfg.size_cap, cfg.mutation_cap), false);
                if (rec.status == Status::Fail && !rec.cex) rec.reason = "failed without a counterexample: " + rec.reason;
                return rec;
            });
        }
    }
    rep.checks = run_tasks(tasks, thread_count(cfg));
    // A failure by exception is not a detected counterexample.
    for (auto& c : rep.checks)
        if (c.status == Status::Fail && !c.cex) c.expect_pass = true;
    return rep;
}

}  // namespace difflin
