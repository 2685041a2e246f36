#include "difflin/support.hpp"

#include <algorithm>
#include <set>

#include "difflin/errors.hpp"
#include "difflin/eval.hpp"
#include "difflin/typing.hpp"

namespace difflin {

namespace {

using Cands = std::optional<std::vector<Elem>>;

constexpr std::size_t kComboLimit = 200000;

// Cartesian product size of the given wires' candidate sets, or nullopt if
// one is unbounded or the product is too large to enumerate.
std::optional<std::size_t> product_size(const std::vector<int>& ws, const std::vector<Cands>& cand) {
    std::size_t n = 1;
    for (int w : ws) {
        if (!cand[w]) return std::nullopt;
        n *= cand[w]->size();
        if (n > kComboLimit) return std::nullopt;
    }
    return n;
}

template <class F>
void for_each_combo(const std::vector<int>& ws, const std::vector<Cands>& cand, F&& f) {
    std::vector<Elem> acc(ws.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == ws.size()) {
            f(acc);
            return;
        }
        for (Elem e : *cand[ws[i]]) {
            acc[i] = e;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

class Propagator {
public:
    Propagator(const PortGraph& g, const ModelConfig& cfg) : g_(g), cfg_(cfg), ev_(cfg) {}

    // Narrows wire w to s; returns true if anything changed.
    bool narrow(std::vector<Cands>& cand, int w, std::set<Elem, ElemLess>&& s) {
        std::vector<Elem> v(s.begin(), s.end());
        if (!cand[w]) {
            cand[w] = std::move(v);
            return true;
        }
        std::vector<Elem> out;
        std::set_intersection(cand[w]->begin(), cand[w]->end(), v.begin(), v.end(), std::back_inserter(out),
                              ElemLess());
        if (out.size() == cand[w]->size()) return false;
        cand[w] = std::move(out);
        return true;
    }

    std::optional<std::vector<Elem>> forward_image(const PGNode& n, Elem in) {
        switch (n.kind) {
        case NodeKind::Gen: return gen_forward(cfg_, n.gen, n.params, in);
        case NodeKind::Lin: {
            std::set<Elem, ElemLess> out;
            for (const auto& e : n.lin->entries)
                if (e.in == in && sgn(e.coef) != 0) out.insert(e.out);
            return std::vector<Elem>(out.begin(), out.end());
        }
        case NodeKind::Box: {
            // !(f)[a1..ak] lands in multisets [b1..bk] with bi in the image of ai.
            std::vector<std::vector<Elem>> choices;
            for (Elem a : in->items) {
                SupportBounds sb = infer_support(*n.inner, a, std::nullopt, cfg_);
                std::vector<int> outs = n.inner->out_wire;
                if (!product_size(outs, sb.wires)) return std::nullopt;
                std::vector<Elem> img;
                for_each_combo(outs, sb.wires, [&](const std::vector<Elem>& parts) {
                    img.push_back(join_by(n.inner->outputs, parts));
                });
                choices.push_back(std::move(img));
            }
            std::size_t total = 1;
            for (const auto& c : choices) {
                total *= std::max<std::size_t>(c.size(), 1);
                if (total > kComboLimit) return std::nullopt;
            }
            std::set<Elem, ElemLess> out;
            std::vector<Elem> acc;
            auto rec = [&](auto&& self, std::size_t i) -> void {
                if (i == choices.size()) {
                    out.insert(mset_elem(acc));
                    return;
                }
                for (Elem b : choices[i]) {
                    acc.push_back(b);
                    self(self, i + 1);
                    acc.pop_back();
                }
            };
            rec(rec, 0);
            return std::vector<Elem>(out.begin(), out.end());
        }
        }
        return std::nullopt;
    }

    bool forward(int n, std::vector<Cands>& cand) {
        const PGNode& node = g_.nodes[n];
        if (!product_size(g_.node_in[n], cand)) return false;
        std::vector<std::set<Elem, ElemLess>> img(node.out_types.size());
        bool infinite = false;
        for_each_combo(g_.node_in[n], cand, [&](const std::vector<Elem>& parts) {
            if (infinite) return;
            auto outs = forward_image(node, join_by(node.in_types, parts));
            if (!outs) {
                infinite = true;
                return;
            }
            for (Elem o : *outs) {
                auto ps = split_by(node.out_types, o);
                for (std::size_t p = 0; p < ps.size(); ++p) img[p].insert(ps[p]);
            }
        });
        if (infinite) return false;
        bool changed = false;
        for (std::size_t p = 0; p < img.size(); ++p) changed |= narrow(cand, g_.node_out[n][p], std::move(img[p]));
        return changed;
    }

    bool backward(int n, std::vector<Cands>& cand) {
        const PGNode& node = g_.nodes[n];
        if (!product_size(g_.node_out[n], cand)) return false;
        std::vector<std::set<Elem, ElemLess>> pre(node.in_types.size());
        for_each_combo(g_.node_out[n], cand, [&](const std::vector<Elem>& parts) {
            for (const auto& [x, c] : ev_.row(node.term, join_by(node.out_types, parts))) {
                auto ps = split_by(node.in_types, x);
                for (std::size_t p = 0; p < ps.size(); ++p) pre[p].insert(ps[p]);
            }
        });
        bool changed = false;
        for (std::size_t p = 0; p < pre.size(); ++p) changed |= narrow(cand, g_.node_in[n][p], std::move(pre[p]));
        return changed;
    }

    void fixpoint(std::vector<Cands>& cand) {
        std::vector<int> order = topo_order(g_);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int n : order) changed |= forward(n, cand);
            for (auto it = order.rbegin(); it != order.rend(); ++it) changed |= backward(*it, cand);
        }
    }

private:
    const PortGraph& g_;
    const ModelConfig& cfg_;
    Evaluator ev_;
};

}  // namespace

bool SupportBounds::bounded() const {
    return std::all_of(wires.begin(), wires.end(), [](const Cands& c) { return c.has_value(); });
}

SupportBounds infer_support(const PortGraph& g, std::optional<Elem> in, std::optional<Elem> out,
                            const ModelConfig& cfg) {
    SupportBounds sb;
    sb.wires.assign(g.wires.size(), std::nullopt);
    auto fix = [&](const std::vector<int>& ws, const std::vector<Obj>& types, Elem e) {
        auto parts = split_by(types, e);
        for (std::size_t i = 0; i < ws.size(); ++i) {
            auto& c = sb.wires[ws[i]];
            if (!c)
                c = std::vector<Elem>{parts[i]};
            else if (std::find(c->begin(), c->end(), parts[i]) == c->end())
                c = std::vector<Elem>{};
        }
    };
    if (in) fix(g.in_wire, g.inputs, *in);
    if (out) fix(g.out_wire, g.outputs, *out);
    Propagator prop(g, cfg);
    prop.fixpoint(sb.wires);
    if (!sb.bounded() && cfg.fallback_cap) {
        for (std::size_t w = 0; w < sb.wires.size(); ++w)
            if (!sb.wires[w]) sb.wires[w] = basis_enum(g.wires[w].type, *cfg.fallback_cap, cfg.sig);
        sb.approximate = true;
        prop.fixpoint(sb.wires);
    }
    return sb;
}

namespace {

TermPtr retyped(const TermPtr& like, std::vector<TermPtr> kids) {
    Term copy = *like;
    copy.kids = std::move(kids);
    return std::make_shared<const Term>(std::move(copy));
}

}  // namespace

std::vector<TermPtr> summands(const TermPtr& t) {
    switch (t->kind) {
    case TermKind::Sum: {
        std::vector<TermPtr> out;
        for (const auto& k : t->kids)
            for (auto& s : summands(k)) out.push_back(std::move(s));
        return out;
    }
    case TermKind::Neg: return summands(t->kids[0]);
    case TermKind::Zero: return {};
    case TermKind::Comp:
    case TermKind::Ten: {
        std::vector<std::vector<TermPtr>> acc{{}};
        for (const auto& k : t->kids) {
            auto ks = summands(k);
            std::vector<std::vector<TermPtr>> next;
            for (const auto& prefix : acc)
                for (const auto& s : ks) {
                    next.push_back(prefix);
                    next.back().push_back(s);
                }
            acc = std::move(next);
        }
        std::vector<TermPtr> out;
        for (auto& kids : acc) out.push_back(retyped(t, std::move(kids)));
        return out;
    }
    default: return {t};
    }
}

VectorResult eval_vector(const TermPtr& t0, Elem in, const ModelConfig& cfg) {
    TermPtr t = t0->typed() ? t0 : annotate(t0, &cfg.sig);
    if (!elem_has_shape(t->dom, in, cfg.sig)) throw TypeError("input does not match " + to_string(t->dom));
    VectorResult res;
    std::set<Elem, ElemLess> outs;
    for (const auto& s : summands(t)) {
        if (!is_sum_free(s)) {
            if (!cfg.fallback_cap)
                throw UnboundedError("unbounded interior: a box containing a sum cannot be bounded; set a fallback cap");
            for (Elem e : basis_enum(t->cod, *cfg.fallback_cap, cfg.sig)) outs.insert(e);
            res.approximate = true;
            continue;
        }
        PortGraph g = term_to_graph(s);
        SupportBounds sb = infer_support(g, in, std::nullopt, cfg);
        if (!sb.bounded()) {
            for (std::size_t w = 0; w < g.wires.size(); ++w)
                if (!sb.wires[w])
                    throw UnboundedError("unbounded interior wire of type " + to_string(g.wires[w].type) +
                                         "; set a fallback cap");
        }
        res.approximate = res.approximate || sb.approximate;
        if (!product_size(g.out_wire, sb.wires)) throw UnboundedError("output support too large to enumerate");
        for_each_combo(g.out_wire, sb.wires,
                       [&](const std::vector<Elem>& parts) { outs.insert(join_by(g.outputs, parts)); });
    }
    Evaluator ev(cfg);
    for (Elem o : outs) {
        Coef c = ev.entry(t, in, o);
        if (sgn(c) != 0) res.entries.emplace_back(o, c);
    }
    return res;
}

}  // namespace difflin
