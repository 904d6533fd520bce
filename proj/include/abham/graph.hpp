#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace abham {

/// Thrown by the file-format parsers; carries the 1-based input line.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

/// Thrown when an operation's input violates its contract (bad regime,
/// regularity mismatch, unbalanced labeling, ...).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Simple bounded-degree (multi)graph with indexed edges. Edge i is the i-th
/// line of the input file; parallel edges are allowed, self-loops are not.
/// When `directed` is set, edge (u,v) means u -> v.
struct Graph {
    int n = 0;
    bool directed = false;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    Graph(int n_, bool directed_) : n(n_), directed(directed_) {}

    int edge_count() const { return static_cast<int>(edges.size()); }

    int add_vertex() { return n++; }

    /// Appends an edge and returns its index. Rejects self-loops and
    /// out-of-range endpoints.
    int add_edge(int u, int v);

    std::vector<int> degrees() const;      // in+out for digraphs
    std::vector<int> in_degrees() const;   // directed only
    std::vector<int> out_degrees() const;  // directed only
    int max_degree() const;

    /// d if the graph is d-regular (in+out = d everywhere when directed).
    std::optional<int> regularity() const;

    /// Undirected connectivity (weak connectivity for digraphs).
    bool is_connected() const;
};

/// Per-edge traversal counts; length always equals the edge count of the
/// graph it belongs to.
using Labeling = std::vector<int>;

/// Cyclic vertex sequence v_0, ..., v_L with v_L = v_0. A vertex's visit
/// count is its number of occurrences among v_0 .. v_{L-1}.
struct ClosedWalk {
    std::vector<int> seq;

    int length() const { return static_cast<int>(seq.size()) - 1; }
};

enum class ViolationKind {
    parity,
    below_min,
    above_max,
    unvisited,
    disconnected_support,
    bad_edge,
    degenerate_input,
};

const char* to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    int site;  // vertex, step index, or -1 when not applicable

    bool operator==(const Violation&) const = default;
};

struct ValidityReport {
    bool valid = true;
    std::vector<Violation> violations;

    void add(ViolationKind k, int site) {
        valid = false;
        violations.push_back({k, site});
    }
};

std::string format_report(const ValidityReport& r);

// ---- file formats ------------------------------------------------------
//
// Graph file: optional '#' comment lines; header "undirected N M" or
// "directed N M"; then M lines "u v" (0-indexed).
// Labeling file: M lines, line i = label of edge i.
// Walk file: one line of space-separated vertex ids, first = last.

Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

Labeling parse_labeling(std::istream& in, const Graph& g);
Labeling parse_labeling(const std::string& text, const Graph& g);
std::string format_labeling(const Labeling& lab);

ClosedWalk parse_walk(std::istream& in);
ClosedWalk parse_walk(const std::string& text);
std::string format_walk(const ClosedWalk& w);

// ---- checkers and conversions -----------------------------------------

/// Valid iff every vertex's incident label sum is even and in [2a,2b]
/// (undirected), or every vertex's in-sum equals its out-sum and lies in
/// [a,b] (directed), and the nonzero-label subgraph is connected and
/// touches every vertex.
ValidityReport check_labeling(const Graph& g, int a, int b, const Labeling& lab);

/// Valid iff w is a closed walk of g and every visit count is in [a,b].
ValidityReport check_walk(const Graph& g, int a, int b, const ClosedWalk& w);

/// Euler tour of the multigraph with multiplicities lab. Requires balanced
/// vertex sums and connected spanning support; throws input_error otherwise.
ClosedWalk labeling_to_walk(const Graph& g, const Labeling& lab);

/// Traversal count per edge. For parallel edges all traversals of a pair
/// are attributed to the lowest-indexed edge joining it. Throws input_error
/// naming the step index if a step is not an edge.
Labeling walk_to_labeling(const Graph& g, const ClosedWalk& w);

std::vector<int> visit_counts(const Graph& g, const ClosedWalk& w);

/// Edge indices of all bridges (edges on no cycle). Parallel pairs are
/// never bridges. Undirected graphs only.
std::vector<int> bridges(const Graph& g);

}  // namespace abham
