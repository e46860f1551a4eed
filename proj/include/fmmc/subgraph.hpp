#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fmmc/closed_form.hpp"
#include "fmmc/graph.hpp"
#include "fmmc/solver.hpp"

namespace fmmc {

// A recognized subgraph hanging off a single host vertex. Ids are host vertex ids (zero-based).
// family: path | palm | lollipop | ecl | semi_complete
struct AttachedSubgraph {
    std::string family;
    std::vector<int> vertices;
    int attach = -1;
};

struct SubgraphReport {
    std::string family;
    bool assigned = false;
    std::string reason;  // set when the subgraph is left free
    // Fiber chain from the free end towards the attachment vertex; for a palm:
    // the leaves, then the center, then the path vertices towards the attachment.
    std::vector<std::vector<int>> layers;
    std::vector<Condition> conditions;
    std::vector<int> fixed_edges;  // host edge ids written by this subgraph
};

struct LocalAssignment {
    FixedWeights fixed;  // mask and values over host edges
    std::vector<SubgraphReport> reports;
};

// Throws Status::invalid when a declaration does not match its family's shape in the host.
void validate_subgraphs(const Graph& host, const std::vector<AttachedSubgraph>& subs);

// Closed-form weights on interior subgraph edges. Edges touching an attachment vertex and the
// intra-fiber edges of the fiber next to it stay free. A subgraph whose conditions fail is left free.
LocalAssignment assign_local(const Graph& host, const Vec& pi, const std::vector<AttachedSubgraph>& subs);

struct CompositeResult {
    LocalAssignment local;
    SolveResult result;                   // numeric completion with the local weights held fixed
    std::optional<SolveResult> reference;  // unconstrained numeric solve
    bool locality_ok = true;              // result.slem <= reference->slem + locality_tol
};

inline constexpr double kLocalityTol = 2e-3;

// reference_opts: options for the unconstrained comparison solve; skipped when empty.
CompositeResult solve_composite(const Graph& host, const Vec& pi, const std::vector<AttachedSubgraph>& subs,
                                const SolverOptions& opts = {},
                                const std::optional<SolverOptions>& reference_opts = SolverOptions{});

}  // namespace fmmc
