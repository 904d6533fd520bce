#pragma once

#include <string>
#include <vector>

#include "abham/graph.hpp"

namespace abham::gadgets {

enum class PortDir { undirected, in, out };

const char* to_string(PortDir d);

/// Attachment port: the dangling edge at `vertex`. For digraph gadgets,
/// `in` means the port edge enters the gadget, `out` that it leaves.
struct Port {
    int vertex;
    PortDir dir;
};

/// Graph fragment plus ordered attachment ports and a declared port-label
/// contract. Adding one stub edge per port keeps every interior vertex's
/// degree at most `degree_bound` (exactly d-regular when `regular` is set).
struct Gadget {
    Graph graph;
    std::vector<Port> ports;
    std::string contract;    // declared feasible-port condition
    int degree_bound = 0;
    bool regular = false;
    int depletion = 0;       // declared visit-consumption per attachment site
};

/// Gadget graph with one fresh stub vertex and edge per port. The stub
/// edge's index per port is written to *port_edges when given.
Graph stubbed(const Gadget& gd, std::vector<int>* port_edges = nullptr);

/// Copies gd's interior into host and connects port i to hosts[i].
/// Returns the new attachment edge indices, in port order.
std::vector<int> glue(Graph& host, const Gadget& gd, const std::vector<int>& hosts);

// ---- constructors (§ depletors and friends) -----------------------------

/// 2d-vertex circulant depletor for even d, two ports; d-regular once
/// stubbed. Feasible with both port labels 1.
Gadget even_regular_depletor(int d, int a, int b);

/// (d+2)-vertex depletor for odd d built from K_{d+1}, one port; d-regular
/// once stubbed. Feasible with port label 2, infeasible with 0.
Gadget odd_regular_depletor(int d, int a, int b);

/// One interior vertex, one port; feasible port labels are the even values
/// in [2a, 2b].
Gadget pendant_depletor(int a);

struct LinkSpec {
    enum class Kind { large, medium, small };
    Kind kind;
    int depletion;  // D
    int drift;      // 2b - 2a - D
};

LinkSpec make_link_spec(LinkSpec::Kind kind, int a, int b);

/// Chainlink: 3-edge path with depletors of total depletion spec.depletion on
/// the second intermediate vertex. Ports: incoming x, outgoing y; forces
/// y <= x + drift.
Gadget link_gadget(int a, int b, int d, const LinkSpec& spec);

/// Single-port depletor of max degree d: port label 2k feasible, anything
/// below 2k infeasible. Requires 1 <= a <= b < a(d-1) and 2k in [2, 2a].
Gadget chain_depletor(int a, int b, int d, int k);

/// Two-port edge gadget of Lemma-style contract: satisfiable at (2k, 2k),
/// unsatisfiable below 2k, satisfiable-and-connected at (2k+1, 2k+1), not
/// connectable below 2k+1. k may differ per side; k = 0 degenerates the
/// middle depletion to 2b-2a.
Gadget maxdeg_edge_gadget(int a, int b, int d, int k);
Gadget maxdeg_edge_gadget_asym(int a, int b, int d, int k_left, int k_right);

/// Index of the middle edge (between the two depleted vertices) in the edge
/// gadget's interior graph; its label is positive iff the gadget carries
/// connection.
int edge_gadget_middle_edge();

/// Directed vertex gadget: three hub vertices joined in a cycle of acyclic
/// bridge gadgets, one external port per hub with the given directions.
/// Total external traversal count feasible exactly in [1, k] for [a, a+k].
/// With regular_bridges the bridge intermediates are made 3-regular via a
/// parallel edge pair (experimental; needed to iterate the reduction).
Gadget directed_vertex_gadget(int a, int k, const std::vector<PortDir>& dirs = {},
                              bool regular_bridges = false);

/// Directed gadget with one in-port and one out-port, max degree 4;
/// feasible traversal counts exactly {k, ..., a}.
Gadget at_least_k_gadget(int a, int k);

/// Graph file rendering plus a trailing comment block listing ports and the
/// declared contract.
std::string serialize_gadget(const Gadget& gd);

}  // namespace abham::gadgets
