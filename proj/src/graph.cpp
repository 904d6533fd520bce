#include "abham/graph.hpp"

#include <algorithm>
#include <sstream>

namespace abham {

int Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw input_error("edge endpoint out of range");
    if (u == v) throw input_error("self-loop");
    edges.emplace_back(u, v);
    return edge_count() - 1;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
        deg[u]++;
        deg[v]++;
    }
    return deg;
}

std::vector<int> Graph::in_degrees() const {
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
        (void)u;
        deg[v]++;
    }
    return deg;
}

std::vector<int> Graph::out_degrees() const {
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
        (void)v;
        deg[u]++;
    }
    return deg;
}

int Graph::max_degree() const {
    int m = 0;
    for (int d : degrees()) m = std::max(m, d);
    return m;
}

std::optional<int> Graph::regularity() const {
    if (n == 0) return std::nullopt;
    auto deg = degrees();
    for (int d : deg)
        if (d != deg[0]) return std::nullopt;
    return deg[0];
}

bool Graph::is_connected() const {
    if (n == 0) return false;
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                reached++;
                stack.push_back(w);
            }
    }
    return reached == n;
}

const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::parity: return "parity";
        case ViolationKind::below_min: return "below-min";
        case ViolationKind::above_max: return "above-max";
        case ViolationKind::unvisited: return "unvisited";
        case ViolationKind::disconnected_support: return "disconnected-support";
        case ViolationKind::bad_edge: return "bad-edge";
        case ViolationKind::degenerate_input: return "degenerate-input";
    }
    return "?";
}

std::string format_report(const ValidityReport& r) {
    std::ostringstream out;
    for (const auto& v : r.violations) {
        out << to_string(v.kind);
        if (v.site >= 0) {
            const char* noun = "vertex";
            if (v.kind == ViolationKind::bad_edge) noun = "step";
            out << " at " << noun << " " << v.site;
        }
        out << "\n";
    }
    return out.str();
}

// ---- parsing -----------------------------------------------------------

namespace {

// Reads the next content line (skipping blanks and '#' comments) into `line`;
// returns false at EOF. `lineno` tracks the physical line number.
bool next_content_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        lineno++;
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_content_line(in, line, lineno))
        throw parse_error(lineno, "missing header");

    std::istringstream hdr(line);
    std::string mode;
    long long n = -1, m = -1;
    hdr >> mode >> n >> m;
    if (hdr.fail() || (mode != "undirected" && mode != "directed"))
        throw parse_error(lineno, "malformed header, expected 'undirected N M' or 'directed N M'");
    if (n < 0 || m < 0) throw parse_error(lineno, "negative vertex or edge count");

    Graph g(static_cast<int>(n), mode == "directed");
    for (long long i = 0; i < m; i++) {
        if (!next_content_line(in, line, lineno))
            throw parse_error(lineno, "expected " + std::to_string(m) + " edges, got " +
                                          std::to_string(i));
        std::istringstream es(line);
        long long u, v;
        es >> u >> v;
        std::string rest;
        if (es.fail() || (es >> rest && !rest.empty()))
            throw parse_error(lineno, "malformed edge line");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error(lineno, "vertex id out of range");
        if (u == v) throw parse_error(lineno, "self-loop");
        g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << (g.directed ? "directed " : "undirected ") << g.n << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

Labeling parse_labeling(std::istream& in, const Graph& g) {
    std::string line;
    int lineno = 0;
    Labeling lab;
    while (next_content_line(in, line, lineno)) {
        std::istringstream ls(line);
        long long x;
        ls >> x;
        std::string rest;
        if (ls.fail() || (ls >> rest && !rest.empty()))
            throw parse_error(lineno, "malformed label line");
        if (x < 0) throw parse_error(lineno, "negative label");
        lab.push_back(static_cast<int>(x));
    }
    if (static_cast<int>(lab.size()) != g.edge_count())
        throw parse_error(lineno, "labeling has " + std::to_string(lab.size()) +
                                      " entries, graph has " + std::to_string(g.edge_count()) +
                                      " edges");
    return lab;
}

Labeling parse_labeling(const std::string& text, const Graph& g) {
    std::istringstream in(text);
    return parse_labeling(in, g);
}

std::string format_labeling(const Labeling& lab) {
    std::ostringstream out;
    for (int x : lab) out << x << "\n";
    return out.str();
}

ClosedWalk parse_walk(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_content_line(in, line, lineno)) throw parse_error(lineno, "empty walk file");
    std::istringstream ws(line);
    ClosedWalk w;
    long long x;
    while (ws >> x) {
        if (x < 0) throw parse_error(lineno, "negative vertex id");
        w.seq.push_back(static_cast<int>(x));
    }
    if (!ws.eof()) throw parse_error(lineno, "malformed walk line");
    if (w.seq.size() < 2) throw parse_error(lineno, "walk needs at least one step");
    if (w.seq.front() != w.seq.back())
        throw parse_error(lineno, "walk must start and end at the same vertex");
    return w;
}

ClosedWalk parse_walk(const std::string& text) {
    std::istringstream in(text);
    return parse_walk(in);
}

std::string format_walk(const ClosedWalk& w) {
    std::ostringstream out;
    for (size_t i = 0; i < w.seq.size(); i++) {
        if (i) out << " ";
        out << w.seq[i];
    }
    out << "\n";
    return out.str();
}

// ---- checkers ----------------------------------------------------------

namespace {

// Connected components of the nonzero-label subgraph; fills comp with ids
// (-1 for vertices touched by no nonzero edge) and returns their number.
int support_components(const Graph& g, const Labeling& lab, std::vector<int>& comp) {
    std::vector<std::vector<int>> adj(g.n);
    for (int i = 0; i < g.edge_count(); i++) {
        if (lab[i] == 0) continue;
        auto [u, v] = g.edges[i];
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    comp.assign(g.n, -1);
    int ncomp = 0;
    for (int s = 0; s < g.n; s++) {
        if (comp[s] != -1 || adj[s].empty()) continue;
        int id = ncomp++;
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
    }
    return ncomp;
}

}  // namespace

ValidityReport check_labeling(const Graph& g, int a, int b, const Labeling& lab) {
    if (static_cast<int>(lab.size()) != g.edge_count())
        throw input_error("labeling length does not match edge count");
    ValidityReport rep;
    if (g.n <= 1) {
        rep.add(ViolationKind::degenerate_input, 0);
        return rep;
    }
    if (g.directed) {
        std::vector<long long> in(g.n, 0), out(g.n, 0);
        for (int i = 0; i < g.edge_count(); i++) {
            out[g.edges[i].first] += lab[i];
            in[g.edges[i].second] += lab[i];
        }
        for (int v = 0; v < g.n; v++) {
            if (in[v] != out[v]) rep.add(ViolationKind::parity, v);
            if (in[v] < a || out[v] < a) rep.add(ViolationKind::below_min, v);
            if (in[v] > b || out[v] > b) rep.add(ViolationKind::above_max, v);
        }
    } else {
        std::vector<long long> sum(g.n, 0);
        for (int i = 0; i < g.edge_count(); i++) {
            sum[g.edges[i].first] += lab[i];
            sum[g.edges[i].second] += lab[i];
        }
        for (int v = 0; v < g.n; v++) {
            if (sum[v] % 2 != 0) rep.add(ViolationKind::parity, v);
            if (sum[v] < 2LL * a) rep.add(ViolationKind::below_min, v);
            if (sum[v] > 2LL * b) rep.add(ViolationKind::above_max, v);
        }
    }
    std::vector<int> comp;
    int ncomp = support_components(g, lab, comp);
    for (int v = 0; v < g.n; v++)
        if (comp[v] == -1) rep.add(ViolationKind::unvisited, v);
    if (ncomp > 1) {
        // report one site per extra component
        std::vector<char> seen(ncomp, 0);
        for (int v = 0; v < g.n; v++)
            if (comp[v] >= 0 && !seen[comp[v]]) {
                seen[comp[v]] = 1;
                if (comp[v] > 0) rep.add(ViolationKind::disconnected_support, v);
            }
    }
    return rep;
}

std::vector<int> visit_counts(const Graph& g, const ClosedWalk& w) {
    std::vector<int> cnt(g.n, 0);
    for (size_t i = 0; i + 1 < w.seq.size(); i++) {
        int v = w.seq[i];
        if (v >= 0 && v < g.n) cnt[v]++;
    }
    return cnt;
}

ValidityReport check_walk(const Graph& g, int a, int b, const ClosedWalk& w) {
    ValidityReport rep;
    if (g.n <= 1) {
        rep.add(ViolationKind::degenerate_input, 0);
        return rep;
    }
    if (w.seq.size() < 2 || w.seq.front() != w.seq.back()) {
        rep.add(ViolationKind::bad_edge, std::max(0, static_cast<int>(w.seq.size()) - 1));
        return rep;
    }
    // edge lookup; for undirected graphs both orientations match
    auto has_edge = [&](int u, int v) {
        for (auto [x, y] : g.edges) {
            if (x == u && y == v) return true;
            if (!g.directed && x == v && y == u) return true;
        }
        return false;
    };
    for (size_t i = 0; i + 1 < w.seq.size(); i++) {
        int u = w.seq[i], v = w.seq[i + 1];
        if (u < 0 || u >= g.n || v < 0 || v >= g.n || !has_edge(u, v))
            rep.add(ViolationKind::bad_edge, static_cast<int>(i));
    }
    auto cnt = visit_counts(g, w);
    for (int v = 0; v < g.n; v++) {
        if (cnt[v] == 0)
            rep.add(ViolationKind::unvisited, v);
        else if (cnt[v] < a)
            rep.add(ViolationKind::below_min, v);
        else if (cnt[v] > b)
            rep.add(ViolationKind::above_max, v);
    }
    return rep;
}

// ---- Euler tours -------------------------------------------------------

ClosedWalk labeling_to_walk(const Graph& g, const Labeling& lab) {
    if (static_cast<int>(lab.size()) != g.edge_count())
        throw input_error("labeling length does not match edge count");
    if (g.n <= 1) throw input_error("degenerate-input: graph has fewer than 2 vertices");

    // balance
    if (g.directed) {
        std::vector<long long> in(g.n, 0), out(g.n, 0);
        for (int i = 0; i < g.edge_count(); i++) {
            out[g.edges[i].first] += lab[i];
            in[g.edges[i].second] += lab[i];
        }
        for (int v = 0; v < g.n; v++)
            if (in[v] != out[v])
                throw input_error("unbalanced labeling at vertex " + std::to_string(v));
    } else {
        std::vector<long long> sum(g.n, 0);
        for (int i = 0; i < g.edge_count(); i++) {
            sum[g.edges[i].first] += lab[i];
            sum[g.edges[i].second] += lab[i];
        }
        for (int v = 0; v < g.n; v++)
            if (sum[v] % 2 != 0)
                throw input_error("odd label sum at vertex " + std::to_string(v));
    }
    std::vector<int> comp;
    int ncomp = support_components(g, lab, comp);
    if (ncomp != 1) throw input_error("disconnected labeling support");
    for (int v = 0; v < g.n; v++)
        if (comp[v] == -1)
            throw input_error("labeling support misses vertex " + std::to_string(v));

    // Hierholzer on the multigraph with multiplicities lab. For undirected
    // graphs both directions of an edge share its budget.
    std::vector<int> left(lab);
    std::vector<std::vector<std::pair<int, int>>> inc(g.n);  // (edge idx, other end)
    for (int i = 0; i < g.edge_count(); i++) {
        if (lab[i] == 0) continue;
        auto [u, v] = g.edges[i];
        inc[u].emplace_back(i, v);
        if (!g.directed) inc[v].emplace_back(i, u);
    }
    std::vector<size_t> it(g.n, 0);
    int start = 0;
    while (start < g.n && comp[start] == -1) start++;

    std::vector<int> stack{start}, tour;
    while (!stack.empty()) {
        int u = stack.back();
        while (it[u] < inc[u].size() && left[inc[u][it[u]].first] == 0) it[u]++;
        if (it[u] == inc[u].size()) {
            tour.push_back(u);
            stack.pop_back();
        } else {
            auto [ei, w] = inc[u][it[u]];
            left[ei]--;
            stack.push_back(w);
        }
    }
    // all traversals used?
    for (int i = 0; i < g.edge_count(); i++)
        if (left[i] != 0) throw input_error("labeling support not connected");
    std::reverse(tour.begin(), tour.end());
    ClosedWalk w;
    w.seq = std::move(tour);
    return w;
}

Labeling walk_to_labeling(const Graph& g, const ClosedWalk& w) {
    if (w.seq.size() < 2 || w.seq.front() != w.seq.back())
        throw input_error("not a closed walk");
    // lowest-indexed edge per vertex pair
    Labeling lab(g.edge_count(), 0);
    auto find_edge = [&](int u, int v) -> int {
        for (int i = 0; i < g.edge_count(); i++) {
            auto [x, y] = g.edges[i];
            if (x == u && y == v) return i;
            if (!g.directed && x == v && y == u) return i;
        }
        return -1;
    };
    for (size_t i = 0; i + 1 < w.seq.size(); i++) {
        int u = w.seq[i], v = w.seq[i + 1];
        int ei = (u >= 0 && u < g.n && v >= 0 && v < g.n) ? find_edge(u, v) : -1;
        if (ei < 0)
            throw input_error("walk step " + std::to_string(i) + " is not an edge");
        lab[ei]++;
    }
    return lab;
}

// ---- bridges -----------------------------------------------------------

std::vector<int> bridges(const Graph& g) {
    if (g.directed) throw input_error("bridges requires an undirected graph");
    std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (neighbor, edge idx)
    for (int i = 0; i < g.edge_count(); i++) {
        auto [u, v] = g.edges[i];
        adj[u].emplace_back(v, i);
        adj[v].emplace_back(u, i);
    }
    std::vector<int> disc(g.n, -1), low(g.n, 0);
    std::vector<int> result;
    int timer = 0;

    // iterative DFS; skip only the single edge instance used to enter, so a
    // parallel pair is correctly treated as a cycle
    struct Frame {
        int v;
        int parent_edge;
        size_t next;
    };
    for (int s = 0; s < g.n; s++) {
        if (disc[s] != -1) continue;
        std::vector<Frame> st;
        st.push_back({s, -1, 0});
        disc[s] = low[s] = timer++;
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.next < adj[f.v].size()) {
                auto [w, ei] = adj[f.v][f.next++];
                if (ei == f.parent_edge) continue;
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    st.push_back({w, ei, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, pe = f.parent_edge;
                st.pop_back();
                if (!st.empty()) {
                    int p = st.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p]) result.push_back(pe);
                }
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace abham
