#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fmmc/types.hpp"

namespace fmmc {

// Canonical edge: u < v, zero-based.
struct Edge {
    int u = 0;
    int v = 0;
    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
};

class Graph {
public:
    Graph() = default;
    // Throws on self-loops, duplicate pairs and out-of-range ids.
    Graph(int n, const std::vector<std::pair<int, int>>& pairs);

    int size() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[e]; }
    // Edge ids incident to vertex i.
    const std::vector<int>& incident(int i) const { return incident_[i]; }
    const std::vector<int>& neighbors(int i) const { return neighbors_[i]; }
    int degree(int i) const { return static_cast<int>(neighbors_[i].size()); }
    bool has_edge(int i, int j) const { return edge_id(i, j) >= 0; }
    // -1 when {i,j} is not an edge.
    int edge_id(int i, int j) const;
    bool connected() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::map<std::pair<int, int>, int> index_;
    std::vector<std::vector<int>> incident_;
    std::vector<std::vector<int>> neighbors_;
};

// One weight per edge id; symmetry holds by construction.
using Weights = std::vector<double>;

struct WeightEntry {
    int i = 0;
    int j = 0;
    double q = 0.0;
};

// Throws when an entry names a non-edge or an edge twice. Missing edges get 0.
Weights weights_from_entries(const Graph& g, const std::vector<WeightEntry>& entries);

struct Chain {
    Matrix p;
    Vec pi;
};

// Throws on non-positive or mis-sized distributions.
void check_distribution(const Graph& g, const Vec& pi);

Matrix build_laplacian(const Graph& g, const Weights& q);

// pi_i minus the weight leaving i, per vertex.
Vec vertex_slack(const Graph& g, const Vec& pi, const Weights& q);

// Largest violation of q >= 0 and of the vertex constraints, relative to max pi.
double feasibility_violation(const Graph& g, const Vec& pi, const Weights& q);

Chain transition_matrix(const Graph& g, const Vec& pi, const Weights& q, double tol = 1e-9);

Chain metropolis_chain(const Graph& g, const Vec& pi);

// Weights q_ij = pi_i P_ij read off a reversible chain.
Weights weights_of_chain(const Graph& g, const Chain& c);

struct ChainReport {
    double negativity = 0.0;       // most negative entry, as a positive number
    double above_one = 0.0;        // largest excess over 1
    double row_sum = 0.0;          // max |row sum - 1|
    double sparsity = 0.0;         // largest entry on a non-edge
    double detailed_balance = 0.0; // max |pi_i P_ij - pi_j P_ji| / max pi
    double stationarity = 0.0;     // max |pi^T P - pi^T| / max pi
    double worst() const;
    bool ok(double tol = 1e-9) const { return worst() <= tol; }
};

ChainReport validate_chain(const Chain& c, const Graph& g);

}  // namespace fmmc
