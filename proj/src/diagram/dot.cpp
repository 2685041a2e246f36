#include <sstream>

#include "difflin/diagram.hpp"

namespace difflin {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

// Emits the nodes and edges of g with every DOT id prefixed by `pre`. The
// boundary slots become point nodes named <pre>in<k> and <pre>out<k>.
void emit_body(const PortGraph& g, const std::string& pre, std::ostream& os, const std::string& indent) {
    for (std::size_t i = 0; i < g.inputs.size(); ++i)
        os << indent << pre << "in" << i << " [shape=point, xlabel=\"" << escape(to_string(g.inputs[i])) << "\"];\n";
    for (std::size_t i = 0; i < g.outputs.size(); ++i)
        os << indent << pre << "out" << i << " [shape=point, xlabel=\"" << escape(to_string(g.outputs[i]))
           << "\"];\n";
    if (g.inputs.size() > 1) {
        os << indent << "{ rank=source; ";
        for (std::size_t i = 0; i < g.inputs.size(); ++i) os << pre << "in" << i << "; ";
        os << "}\n";
    }
    for (std::size_t n = 0; n < g.nodes.size(); ++n) {
        const PGNode& node = g.nodes[n];
        std::string id = pre + "n" + std::to_string(n);
        if (node.kind == NodeKind::Box) {
            os << indent << "subgraph cluster_" << id << " {\n";
            os << indent << "  label=\"!\";\n";
            emit_body(*node.inner, id + "_", os, indent + "  ");
            os << indent << "}\n";
        } else {
            std::string label = node.kind == NodeKind::Lin ? "lin " + node.lin->name : node_label(node);
            os << indent << id << " [shape=box, label=\"" << escape(label) << "\"];\n";
        }
    }
    auto src_name = [&](const Endpoint& e) {
        if (e.node == Endpoint::kBoundary) return pre + "in" + std::to_string(e.port);
        std::string id = pre + "n" + std::to_string(e.node);
        if (g.nodes[e.node].kind == NodeKind::Box) return id + "_out" + std::to_string(e.port);
        return id;
    };
    auto dst_name = [&](const Endpoint& e) {
        if (e.node == Endpoint::kBoundary) return pre + "out" + std::to_string(e.port);
        std::string id = pre + "n" + std::to_string(e.node);
        if (g.nodes[e.node].kind == NodeKind::Box) return id + "_in" + std::to_string(e.port);
        return id;
    };
    for (const Wire& w : g.wires) {
        os << indent << src_name(w.src) << " -> " << dst_name(w.dst) << " [label=\"" << escape(to_string(w.type));
        if (w.src.node != Endpoint::kBoundary && g.nodes[w.src.node].out_types.size() > 1)
            os << " @" << w.src.port;
        os << "\"];\n";
    }
}

}  // namespace

std::string emit_dot(const PortGraph& g) {
    std::ostringstream os;
    os << "digraph diagram {\n  rankdir=TB;\n";
    emit_body(g, "", os, "  ");
    os << "}\n";
    return os.str();
}

}  // namespace difflin
