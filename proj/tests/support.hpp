#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "fmmc/graph.hpp"
#include "fmmc/spectral.hpp"

namespace testing_support {

using fmmc::Graph;
using fmmc::Matrix;
using fmmc::Vec;
using fmmc::Weights;

inline Eigen::MatrixXd dense(const Matrix& m) {
    Eigen::MatrixXd d(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) d(i, j) = m(i, j);
    return d;
}

// Eigenvalues sorted nonincreasing, from Eigen (independent of the library's Jacobi).
inline Vec oracle_eigenvalues(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense(m));
    Vec out(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// SLEM from the general (nonsymmetric) eigen decomposition of P itself.
inline double oracle_slem(const Matrix& p) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(dense(p));
    Vec re;
    for (int i = 0; i < p.rows(); ++i) re.push_back(es.eigenvalues()(i).real());
    std::sort(re.begin(), re.end(), std::greater<>());
    if (re.size() < 2) return 0.0;
    return std::max(re[1], -re.back());
}

inline Matrix random_symmetric(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
    return m;
}

// Random spanning tree plus extra edges.
inline Graph random_connected(std::mt19937_64& rng, int n, double extra = 0.3) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
    std::bernoulli_distribution add(extra);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (add(rng) && std::find(e.begin(), e.end(), std::make_pair(a, b)) == e.end()) e.push_back({a, b});
    return Graph(n, e);
}

inline Graph random_tree(std::mt19937_64& rng, int n) { return random_connected(rng, n, 0.0); }

inline Vec random_pi(std::mt19937_64& rng, int n, double lo = 0.5, double hi = 5.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    Vec pi(n);
    for (double& x : pi) x = u(rng);
    return pi;
}

// Feasible weights: random positive values scaled so that every vertex keeps some slack.
inline Weights random_feasible(std::mt19937_64& rng, const Graph& g, const Vec& pi) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Weights q(g.edge_count());
    for (double& x : q) x = u(rng);
    for (int i = 0; i < g.size(); ++i) {
        double s = 0.0;
        for (int e : g.incident(i)) s += q[e];
        const double cap = 0.95 * pi[i];
        if (s > cap)
            for (int e : g.incident(i)) q[e] *= cap / s;
    }
    return q;
}

// Minimizes f over a box by a coarse grid followed by successive local refinements.
inline double grid_min(const std::function<double(const Vec&)>& f, Vec lo, Vec hi, int points = 41, int rounds = 8) {
    const int d = static_cast<int>(lo.size());
    double best = 1e300;
    Vec arg(d);
    for (int round = 0; round < rounds; ++round) {
        std::vector<int> idx(d, 0);
        while (true) {
            Vec x(d);
            for (int k = 0; k < d; ++k) x[k] = lo[k] + (hi[k] - lo[k]) * idx[k] / (points - 1);
            const double v = f(x);
            if (v < best) {
                best = v;
                arg = x;
            }
            int k = 0;
            while (k < d && ++idx[k] == points) idx[k++] = 0;
            if (k == d) break;
        }
        for (int k = 0; k < d; ++k) {
            const double w = (hi[k] - lo[k]) / (points - 1) * 2.0;
            const double nlo = std::max(lo[k], arg[k] - w), nhi = std::min(hi[k], arg[k] + w);
            lo[k] = nlo;
            hi[k] = nhi;
        }
    }
    return best;
}

}  // namespace testing_support
