#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fmmc/graph.hpp"

namespace fmmc {

struct Condition {
    std::string text;
    bool ok = true;
    double margin = 0.0;  // lhs - rhs of the inequality as written
};

struct ClosedFormResult {
    bool refused = false;
    std::string reason;
    std::string family;
    std::string regime;
    Graph graph;  // generated even on refusal so callers can fall back to a numeric solve
    Vec pi;
    Weights q;
    std::optional<double> formula_slem;  // printed formula or reduced-chain value, when one exists
    double slem = 1.0;                   // spectral value of the constructed chain
    std::vector<Condition> conditions;
    std::vector<std::string> warnings;
};

// Relative slack applied to every regime inequality.
inline constexpr double kConditionSlack = 1e-12;

// Vertex orders of the generated graphs:
//   path            1..N in order
//   star            center, then leaves
//   palm            n leaves, then the center (path vertex 0), then path vertices 1..m
//   ecl             fiber-major, fibers in path order
//   semi_complete   first path from its free end, core, second path towards its free end
//   lollipop        path from its free end, junction clique vertex, remaining clique vertices
//   barbell         first clique minus bridge vertex, bridge path (n+1 vertices), second clique minus bridge vertex
//   bistar          left leaves, left center, right center, right leaves
//   symmetric tree  breadth first; children of a vertex are consecutive
//   semi-symmetric  center, then depth 1 branches 1..m, depth 2 branches 1..m, ...
//   ccs star        core vertices, then depth 1 branches 1..m, depth 2 ...
ClosedFormResult solve_path(const Vec& pi);
ClosedFormResult solve_star(double center, const Vec& leaves);
ClosedFormResult solve_palm(int leaves, int path_len, const Vec& pi);
ClosedFormResult solve_ecl(const std::vector<int>& fibers, const Vec& pi);
ClosedFormResult solve_semi_complete(int n1, int n2, int core, const Vec& pi);
ClosedFormResult solve_lollipop(int clique, int path_len, const Vec& pi);
ClosedFormResult solve_barbell(int clique1, int clique2, int bridge, const Vec& pi);
ClosedFormResult solve_bistar(int left, int right, const Vec& pi);
ClosedFormResult solve_symmetric_tree(const std::vector<int>& branching, const Vec& depth_pi);
ClosedFormResult solve_symmetric_star(int branches, int depth, const Vec& depth_pi);
ClosedFormResult solve_semi_symmetric_star(int branches, int depth, const Vec& pi);
ClosedFormResult solve_ccs_star(int core, int depth, const Vec& depth_pi);
ClosedFormResult solve_complete(const Vec& pi);

// Graph generators matching the orders above.
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph complete_graph(int n);
Graph symmetric_tree_graph(const std::vector<int>& branching);
Graph ccs_star_graph(int core, int depth);
// Depth of every vertex of symmetric_tree_graph.
std::vector<int> symmetric_tree_depths(const std::vector<int>& branching);

}  // namespace fmmc
