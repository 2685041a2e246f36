#include "difflin/diagram.hpp"

#include <numeric>

#include "difflin/errors.hpp"
#include "difflin/printer.hpp"
#include "difflin/typing.hpp"

namespace difflin {

namespace {

// Wires are built as union-find variables: each port and boundary slot gets
// a variable and composition merges them.
struct Builder {
    std::vector<int> parent;
    std::vector<Obj> type;
    std::vector<PGNode> nodes;
    std::vector<std::vector<int>> in_vars, out_vars;

    int fresh(Obj t) {
        parent.push_back(static_cast<int>(parent.size()));
        type.push_back(t);
        return parent.back();
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }

    struct Frag {
        std::vector<int> ins, outs;
    };

    Frag build(const TermPtr& t) {
        switch (t->kind) {
        case TermKind::Id: {
            Frag f;
            for (Obj o : factors_of(t->dom)) f.ins.push_back(fresh(o));
            f.outs = f.ins;
            return f;
        }
        case TermKind::Sym: {
            Frag f;
            std::vector<int> a, b;
            for (Obj o : factors_of(t->objs[0])) a.push_back(fresh(o));
            for (Obj o : factors_of(t->objs[1])) b.push_back(fresh(o));
            f.ins = a;
            f.ins.insert(f.ins.end(), b.begin(), b.end());
            f.outs = b;
            f.outs.insert(f.outs.end(), a.begin(), a.end());
            return f;
        }
        case TermKind::Comp: {
            Frag acc = build(t->kids[0]);
            for (std::size_t i = 1; i < t->kids.size(); ++i) {
                Frag next = build(t->kids[i]);
                for (std::size_t j = 0; j < acc.outs.size(); ++j) unite(acc.outs[j], next.ins[j]);
                acc.outs = next.outs;
            }
            return acc;
        }
        case TermKind::Ten: {
            Frag acc;
            for (const auto& k : t->kids) {
                Frag f = build(k);
                acc.ins.insert(acc.ins.end(), f.ins.begin(), f.ins.end());
                acc.outs.insert(acc.outs.end(), f.outs.begin(), f.outs.end());
            }
            return acc;
        }
        case TermKind::Gen:
        case TermKind::Lin:
        case TermKind::Box: {
            PGNode n;
            if (t->kind == TermKind::Gen) {
                n.kind = NodeKind::Gen;
                n.gen = t->gen;
                n.params = t->objs;
            } else if (t->kind == TermKind::Lin) {
                n.kind = NodeKind::Lin;
                n.lin = t->lin;
            } else {
                n.kind = NodeKind::Box;
                n.inner = std::make_shared<const PortGraph>(term_to_graph(t->kids[0]));
            }
            n.term = t;
            n.in_types = factors_of(t->dom);
            n.out_types = factors_of(t->cod);
            Frag f;
            for (Obj o : n.in_types) f.ins.push_back(fresh(o));
            for (Obj o : n.out_types) f.outs.push_back(fresh(o));
            nodes.push_back(std::move(n));
            in_vars.push_back(f.ins);
            out_vars.push_back(f.outs);
            return f;
        }
        default:
            throw TypeError("diagrams are built only from sum-free terms; got " + pretty_print(t));
        }
    }
};

}  // namespace

PortGraph term_to_graph(const TermPtr& t0) {
    TermPtr t = t0->typed() ? t0 : annotate(t0);
    if (!is_sum_free(t)) throw TypeError("diagrams are built only from sum-free terms; got " + pretty_print(t));
    Builder b;
    Builder::Frag top = b.build(t);
    PortGraph g;
    g.inputs = factors_of(t->dom);
    g.outputs = factors_of(t->cod);
    g.nodes = b.nodes;
    // Each variable class carries exactly one source and one target.
    std::vector<Endpoint> src(b.parent.size(), Endpoint{-2, 0}), dst(b.parent.size(), Endpoint{-2, 0});
    for (std::size_t i = 0; i < top.ins.size(); ++i) src[b.find(top.ins[i])] = {Endpoint::kBoundary, static_cast<int>(i)};
    for (std::size_t i = 0; i < top.outs.size(); ++i) dst[b.find(top.outs[i])] = {Endpoint::kBoundary, static_cast<int>(i)};
    for (std::size_t n = 0; n < b.nodes.size(); ++n) {
        for (std::size_t p = 0; p < b.in_vars[n].size(); ++p)
            dst[b.find(b.in_vars[n][p])] = {static_cast<int>(n), static_cast<int>(p)};
        for (std::size_t p = 0; p < b.out_vars[n].size(); ++p)
            src[b.find(b.out_vars[n][p])] = {static_cast<int>(n), static_cast<int>(p)};
    }
    std::vector<int> wire_of(b.parent.size(), -1);
    g.node_in.resize(g.nodes.size());
    g.node_out.resize(g.nodes.size());
    for (std::size_t n = 0; n < g.nodes.size(); ++n) {
        g.node_in[n].assign(b.in_vars[n].size(), -1);
        g.node_out[n].assign(b.out_vars[n].size(), -1);
    }
    g.in_wire.assign(g.inputs.size(), -1);
    g.out_wire.assign(g.outputs.size(), -1);
    for (std::size_t v = 0; v < b.parent.size(); ++v) {
        int r = b.find(static_cast<int>(v));
        if (wire_of[r] >= 0) continue;
        if (src[r].node == -2 || dst[r].node == -2) throw TypeError("dangling wire in diagram");
        wire_of[r] = static_cast<int>(g.wires.size());
        g.wires.push_back(Wire{b.type[r], src[r], dst[r]});
        int w = wire_of[r];
        if (src[r].node == Endpoint::kBoundary)
            g.in_wire[src[r].port] = w;
        else
            g.node_out[src[r].node][src[r].port] = w;
        if (dst[r].node == Endpoint::kBoundary)
            g.out_wire[dst[r].port] = w;
        else
            g.node_in[dst[r].node][dst[r].port] = w;
    }
    return g;
}

std::vector<int> topo_order(const PortGraph& g) {
    std::vector<int> indeg(g.nodes.size(), 0), order;
    for (std::size_t n = 0; n < g.nodes.size(); ++n)
        for (int w : g.node_in[n])
            if (g.wires[w].src.node != Endpoint::kBoundary) ++indeg[n];
    std::vector<int> ready;
    for (std::size_t n = 0; n < g.nodes.size(); ++n)
        if (indeg[n] == 0) ready.push_back(static_cast<int>(n));
    std::size_t at = 0;
    while (at < ready.size()) {
        int n = ready[at++];
        order.push_back(n);
        for (int w : g.node_out[n]) {
            int d = g.wires[w].dst.node;
            if (d != Endpoint::kBoundary && --indeg[d] == 0) ready.push_back(d);
        }
    }
    return order;
}

}  // namespace difflin
