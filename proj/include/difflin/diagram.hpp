#pragma once

#include <memory>
#include <string>
#include <vector>

#include "difflin/term.hpp"

namespace difflin {

enum class NodeKind { Gen, Lin, Box };

struct PortGraph;

struct PGNode {
    NodeKind kind;
    GenKind gen = GenKind::Delta;
    std::vector<Obj> params;                 // Gen
    LinPtr lin;                              // Lin
    std::shared_ptr<const PortGraph> inner;  // Box
    std::vector<Obj> in_types, out_types;    // one per port (factors of dom/cod)
    TermPtr term;                            // the typed subterm this node came from
};

// node == kBoundary means the graph boundary; port is then the boundary index.
struct Endpoint {
    static constexpr int kBoundary = -1;
    int node;
    int port;
};

struct Wire {
    Obj type;
    Endpoint src;  // a node output port or an input boundary slot
    Endpoint dst;  // a node input port or an output boundary slot
};

// A string diagram. Symmetries and identities are not nodes: they only
// permute and connect wires.
struct PortGraph {
    std::vector<Obj> inputs, outputs;
    std::vector<PGNode> nodes;
    std::vector<Wire> wires;
    // Derived lookups: wire index per node port and per boundary slot.
    std::vector<std::vector<int>> node_in, node_out;
    std::vector<int> in_wire, out_wire;
};

// Builds the diagram of a typed sum-free term. Throws TypeError for terms
// containing +, - or 0.
PortGraph term_to_graph(const TermPtr& t);

// Deterministic string encoding; equal iff the graphs are isomorphic by a
// boundary-, port-, type- and nesting-preserving isomorphism.
std::string canonical_form(const PortGraph& g);

// Throws TypeError when the boundary types differ.
bool graphs_equal(const PortGraph& a, const PortGraph& b);

std::string emit_dot(const PortGraph& g);

// Topological order of the nodes (inputs before consumers).
std::vector<int> topo_order(const PortGraph& g);

std::string node_label(const PGNode& n);

}  // namespace difflin
