#pragma once

#include <vector>

#include "fmmc/graph.hpp"

namespace fmmc {

struct LiftSpec {
    Graph base;
    std::vector<int> fibers;  // fiber size per base vertex, each >= 1
};

void check_lift_spec(const LiftSpec& spec);

// Lifted vertex (i, a) sits at offset(i) + a; base-vertex-major order.
std::vector<int> fiber_offsets(const LiftSpec& spec);
int lifted_size(const LiftSpec& spec);

Graph build_lift(const LiftSpec& spec);

Vec aggregate_distribution(const LiftSpec& spec, const Vec& lifted_pi);

// Transfers feasible base weights to the lifted graph built by build_lift.
// Throws Status::consistency when base_pi is not the aggregate of lifted_pi.
Weights lift_weights(const LiftSpec& spec, const Weights& base_q, const Vec& base_pi, const Vec& lifted_pi,
                     double tol = 1e-9);

// Fiber-averaging compression of a lifted transition matrix: (1/m_i) * block sums.
Matrix compress_chain(const LiftSpec& spec, const Chain& lifted);

// Orthonormal compression of the symmetrized lifted chain; fiber rows sqrt(pi~/pi).
// Equals the symmetrized compress_chain output when the weights come from lift_weights.
Matrix compress_symmetric(const LiftSpec& spec, const Chain& lifted);

struct InterlacingReport {
    bool holds = false;
    double max_violation = 0.0;
    int tight = 0;  // base eigenvalues matched by an equal lifted eigenvalue
};

// Both inputs nonincreasing; base no longer than lifted.
InterlacingReport verify_interlacing(const Vec& lifted_eigs, const Vec& base_eigs, double tol = 1e-9);

}  // namespace fmmc
