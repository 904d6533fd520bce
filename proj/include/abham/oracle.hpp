#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "abham/gadgets.hpp"
#include "abham/graph.hpp"

namespace abham::oracle {

struct OracleConfig {
    /// Per-edge label cap; 0 means the default 2a (undirected) or b
    /// (directed), which loses no completeness.
    int max_label = 0;
    std::uint64_t node_budget = 200'000'000;
    std::int64_t time_budget_ms = 0;  // 0 = unlimited
};

enum class Status { yes, no, unknown };

const char* to_string(Status s);

struct DecideResult {
    Status status = Status::unknown;
    std::optional<Labeling> witness;
    std::uint64_t nodes = 0;
};

/// Exact decision by backtracking over labelings with per-edge cap.
/// Disconnected or single-vertex inputs are immediately NO. A YES always
/// carries a witness passing check_labeling; budget exhaustion yields the
/// distinct `unknown` status, never NO.
DecideResult decide_exact(const Graph& g, int a, int b, const OracleConfig& cfg = {});

/// One port label per attachment port, in port order.
using PortProfile = std::vector<int>;

struct ProfilesResult {
    std::set<PortProfile> profiles;
    bool complete = true;  // false iff some tuple hit the budget
    std::uint64_t nodes = 0;
};

/// Extra per-interior-edge label bounds (e.g. force a middle edge positive).
struct EdgeBound {
    int edge;
    int min_label;
    int max_label;  // negative = keep default cap
};

/// The set of port-label tuples for which the gadget interior admits labels
/// satisfying every interior vertex, with the nonzero support connected to
/// every nonzero port. Port stubs are fresh vertices exempt from visit
/// constraints; port labels range over [0, 2b] (undirected) or [0, b]
/// (directed).
ProfilesResult feasible_port_profiles(const gadgets::Gadget& gd, int a, int b,
                                      const OracleConfig& cfg = {},
                                      const std::vector<EdgeBound>& interior_bounds = {});

}  // namespace abham::oracle
