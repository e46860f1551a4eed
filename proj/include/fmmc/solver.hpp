#pragma once

#include <cstdint>
#include <vector>

#include "fmmc/graph.hpp"

namespace fmmc {

struct SolverOptions {
    int max_iters = 50000;       // per run
    double step_scale = 0.0;     // c in c/sqrt(t); 0 means 0.1 * min pi
    double stall_tol = 1e-7;     // required improvement per window
    int stall_window = 500;
    int restarts = 3;            // extra runs after the warm-started one
    int max_halvings = 14;       // step halvings on stall before a run stops
    int polish_iters = 3000;     // cap on smoothed gradient steps per smoothing level after each run
    std::uint64_t seed = 0;
};

// Edges with mask set are held at the given value; capacity left for free edges shrinks accordingly.
struct FixedWeights {
    std::vector<char> mask;
    Weights values;
    bool empty() const { return mask.empty(); }
};

struct Certificate {
    double slem = 1.0;
    // Eigenvalues of D^{-1/2} L D^{-1/2}: second smallest and largest.
    double lambda2 = 0.0;
    double lambdaN = 0.0;
    double eigenvalue_sum_gap = 0.0;  // |lambda2 + lambdaN - 2|
    std::vector<int> active_vertices;
    bool upper_active = false;  // slem attained by the second largest chain eigenvalue
    bool lower_active = false;  // slem attained by minus the smallest chain eigenvalue
    Matrix upper_vectors;       // orthonormal basis of the attaining eigenspaces (columns)
    Matrix lower_vectors;
    double dual_residual = 0.0;
    bool dual_consistent = false;
};

struct SolveResult {
    Weights q;
    double slem = 1.0;
    Certificate certificate;
    int iterations = 0;
    int best_run = 0;
    bool budget_exhausted = false;
};

// sqrt(pi_i pi_j) / sum pi.
Matrix jtilde(const Vec& pi);

// || I - D^{-1/2} L(q) D^{-1/2} - Jtilde ||_2; throws on infeasible q.
double objective(const Graph& g, const Vec& pi, const Weights& q);

// Subgradient of objective at q (entries on fixed edges are still reported).
Weights subgradient(const Graph& g, const Vec& pi, const Weights& q);

// Euclidean projection onto {q >= 0, sum_k q_ik <= pi_i}; fixed edges are left untouched.
Weights project_feasible(const Graph& g, const Vec& pi, const Weights& w, const FixedWeights& fixed = {});

SolveResult solve(const Graph& g, const Vec& pi, const SolverOptions& opts = {}, const FixedWeights& fixed = {},
                  const Weights* warm_start = nullptr);

// tol: eigenvalues within tol of the SLEM count as attaining it.
Certificate certify(const Graph& g, const Vec& pi, const Weights& q, double tol = 1e-7);

}  // namespace fmmc
