#pragma once

#include <utility>

#include "fmmc/graph.hpp"
#include "fmmc/types.hpp"

namespace fmmc {

struct EigenResult {
    Vec values;       // nonincreasing
    Matrix vectors;   // column k pairs with values[k]; empty unless requested
    int sweeps = 0;
};

// Cyclic Jacobi. Stops when the off-diagonal Frobenius norm is <= 1e-12 * ||M||_F,
// at most 100 sweeps. Throws on input asymmetric beyond 1e-9 * max(1, ||M||).
EigenResult eig_symmetric(const Matrix& m, bool want_vectors = false);

struct SpectralReport {
    Vec eigenvalues;  // nonincreasing
    double slem = 0.0;
    double lambda2 = 0.0;
    double lambdaN = 0.0;
    double mixing_time = 0.0;
};

// 1/log(1/slem); 0 once slem is within 1e-12 of 0, infinite once it is within 1e-12 of 1.
double mixing_time(double slem);

// Report from a full nonincreasing spectrum whose top entry is the trivial eigenvalue 1.
SpectralReport report_from_spectrum(const Vec& eigenvalues);

// D^{1/2} P D^{-1/2}, symmetrized against rounding. Throws when detailed balance fails beyond tol.
Matrix symmetrized(const Chain& c, double tol = 1e-9);

SpectralReport slem_of_chain(const Chain& c);

// SLEM of the path chain with vertex weights pi and edge weights q (q.size() == pi.size() - 1),
// from the symmetric tridiagonal matrix similar to it.
double path_slem(const Vec& pi, const Vec& q);

// Reduced matrices of a symmetric tree with branching m[0..n-1], depth distribution pi[0..n]
// and depth weights q[0..n-1]: the symmetric (n+1)x(n+1) reduced chain and its trailing block.
std::pair<Matrix, Matrix> reduced_tree_chain(const std::vector<int>& m, const Vec& pi, const Vec& q);

// max(lambda_max(P1), -lambda_min(P0)).
double reduced_tree_slem(const std::pair<Matrix, Matrix>& blocks);

// Reduced matrices of a CCS star: the symmetric (n+1)-vertex path chain on pi[0..n] with
// weights q[1..n], and the same with a self-loop weight m*q[0] at the core vertex.
std::pair<Matrix, Matrix> ccs_reduced_chain(int m, int n, const Vec& pi, const Vec& q);

// Full-graph SLEM from the CCS blocks: the first block carries the trivial eigenvalue,
// the second block has multiplicity m-1.
double ccs_reduced_slem(const std::pair<Matrix, Matrix>& blocks);

}  // namespace fmmc
