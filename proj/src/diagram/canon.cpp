#include <algorithm>
#include <deque>

#include "difflin/diagram.hpp"
#include "difflin/errors.hpp"

namespace difflin {

std::string node_label(const PGNode& n) {
    switch (n.kind) {
    case NodeKind::Gen: {
        std::string s = gen_name(n.gen);
        if (n.params.empty()) return s;
        s += "{";
        for (std::size_t i = 0; i < n.params.size(); ++i) {
            if (i) s += ",";
            s += to_string(n.params[i]);
        }
        return s + "}";
    }
    case NodeKind::Lin: {
        std::string s = "lin " + n.lin->name + ":" + to_string(n.lin->dom) + "->" + to_string(n.lin->cod);
        Signature none;
        s += "{";
        for (const auto& e : n.lin->entries)
            s += format_elem(e.in, none) + ">" + format_elem(e.out, none) + "=" + e.coef.get_str() + ";";
        return s + "}";
    }
    case NodeKind::Box: return "bang[" + canonical_form(*n.inner) + "]";
    }
    return "?";
}

namespace {

// Numbers nodes in traversal order from the given seeds: a visited node
// enqueues the sources of its inputs, then the targets of its outputs,
// each in port order.
class Numbering {
public:
    explicit Numbering(const PortGraph& g) : g_(g), id_(g.nodes.size(), -1) {}

    void visit(int n) {
        if (n == Endpoint::kBoundary || id_[n] >= 0) return;
        id_[n] = static_cast<int>(order_.size());
        order_.push_back(n);
        queue_.push_back(n);
    }

    void run() {
        while (!queue_.empty()) {
            int n = queue_.front();
            queue_.pop_front();
            for (int w : g_.node_in[n]) visit(g_.wires[w].src.node);
            for (int w : g_.node_out[n]) visit(g_.wires[w].dst.node);
        }
    }

    std::string src_of(int w) const {
        const Endpoint& s = g_.wires[w].src;
        if (s.node == Endpoint::kBoundary) return "i" + std::to_string(s.port);
        return "n" + std::to_string(id_[s.node] - base_) + "." + std::to_string(s.port);
    }

    std::string encode_nodes(std::size_t from) const {
        std::string s;
        for (std::size_t k = from; k < order_.size(); ++k) {
            int n = order_[k];
            s += "(" + node_label(g_.nodes[n]) + ":";
            for (int w : g_.node_in[n]) s += src_of(w) + ",";
            s += ")";
        }
        return s;
    }

    void set_base(int b) { base_ = b; }
    const std::vector<int>& ids() const { return id_; }
    std::size_t count() const { return order_.size(); }

    // Resets everything numbered after `keep` (used when trying different
    // start nodes for a floating component).
    void truncate(std::size_t keep) {
        while (order_.size() > keep) {
            id_[order_.back()] = -1;
            order_.pop_back();
        }
        queue_.clear();
    }

private:
    const PortGraph& g_;
    std::vector<int> id_;
    std::vector<int> order_;
    std::deque<int> queue_;
    int base_ = 0;
};

}  // namespace

std::string canonical_form(const PortGraph& g) {
    std::string s = "in[";
    for (Obj o : g.inputs) s += to_string(o) + ",";
    s += "]out[";
    for (Obj o : g.outputs) s += to_string(o) + ",";
    s += "]";
    Numbering num(g);
    for (int w : g.in_wire) num.visit(g.wires[w].dst.node);
    for (int w : g.out_wire) num.visit(g.wires[w].src.node);
    num.run();
    s += num.encode_nodes(0);
    s += "o[";
    for (int w : g.out_wire) s += num.src_of(w) + ",";
    s += "]";

    // Components that touch no boundary: take the least encoding over all
    // start nodes, then sort the components.
    std::vector<std::string> floating;
    for (std::size_t n = 0; n < g.nodes.size(); ++n) {
        if (num.ids()[n] >= 0) continue;
        std::size_t keep = num.count();
        num.set_base(static_cast<int>(keep));
        num.visit(static_cast<int>(n));
        num.run();
        std::vector<int> members;
        for (std::size_t m = 0; m < g.nodes.size(); ++m)
            if (num.ids()[m] >= static_cast<int>(keep)) members.push_back(static_cast<int>(m));
        std::string best;
        for (int start : members) {
            num.truncate(keep);
            num.visit(start);
            num.run();
            std::string enc = num.encode_nodes(keep);
            if (best.empty() || enc < best) best = enc;
        }
        floating.push_back(best);
    }
    std::sort(floating.begin(), floating.end());
    for (const auto& f : floating) s += "|" + f;
    return s;
}

bool graphs_equal(const PortGraph& a, const PortGraph& b) {
    if (a.inputs != b.inputs || a.outputs != b.outputs) throw TypeError("graphs_equal: boundary types differ");
    return canonical_form(a) == canonical_form(b);
}

}  // namespace difflin
