#include "fmmc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace fmmc {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& pairs)
    : n_(n), incident_(static_cast<std::size_t>(std::max(n, 0))), neighbors_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 1) throw Error(Status::invalid, "graph needs at least one vertex");
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw Error(Status::invalid, "edge endpoint out of range: {" + std::to_string(a) + "," + std::to_string(b) + "}");
        if (a == b) throw Error(Status::invalid, "self-loop on vertex " + std::to_string(a));
        const int u = std::min(a, b), v = std::max(a, b);
        if (index_.count({u, v})) throw Error(Status::invalid, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        const int id = static_cast<int>(edges_.size());
        index_[{u, v}] = id;
        edges_.push_back({u, v});
        incident_[u].push_back(id);
        incident_[v].push_back(id);
        neighbors_[u].push_back(v);
        neighbors_[v].push_back(u);
    }
}

int Graph::edge_id(int i, int j) const {
    auto it = index_.find({std::min(i, j), std::max(i, j)});
    return it == index_.end() ? -1 : it->second;
}

bool Graph::connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::queue<int> todo;
    todo.push(0);
    seen[0] = 1;
    int count = 1;
    while (!todo.empty()) {
        const int x = todo.front();
        todo.pop();
        for (int y : neighbors_[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                todo.push(y);
            }
    }
    return count == n_;
}

Weights weights_from_entries(const Graph& g, const std::vector<WeightEntry>& entries) {
    Weights q(g.edge_count(), 0.0);
    std::vector<char> set(g.edge_count(), 0);
    for (const auto& w : entries) {
        const int e = g.edge_id(w.i, w.j);
        if (e < 0) throw Error(Status::invalid, "weight supplied for non-edge {" + std::to_string(w.i) + "," + std::to_string(w.j) + "}");
        if (set[e]) throw Error(Status::invalid, "weight supplied twice for edge {" + std::to_string(w.i) + "," + std::to_string(w.j) + "}");
        set[e] = 1;
        q[e] = w.q;
    }
    return q;
}

void check_distribution(const Graph& g, const Vec& pi) {
    if (static_cast<int>(pi.size()) != g.size())
        throw Error(Status::invalid, "distribution length " + std::to_string(pi.size()) + " does not match vertex count " + std::to_string(g.size()));
    for (std::size_t i = 0; i < pi.size(); ++i)
        if (!(pi[i] > 0.0) || !std::isfinite(pi[i]))
            throw Error(Status::invalid, "distribution entry " + std::to_string(i) + " is not strictly positive");
}

Matrix build_laplacian(const Graph& g, const Weights& q) {
    if (static_cast<int>(q.size()) != g.edge_count()) throw Error(Status::invalid, "weight vector does not match edge count");
    Matrix L(g.size());
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        L(u, u) += q[e];
        L(v, v) += q[e];
        L(u, v) -= q[e];
        L(v, u) -= q[e];
    }
    return L;
}

Vec vertex_slack(const Graph& g, const Vec& pi, const Weights& q) {
    Vec s = pi;
    for (int e = 0; e < g.edge_count(); ++e) {
        s[g.edge(e).u] -= q[e];
        s[g.edge(e).v] -= q[e];
    }
    return s;
}

double feasibility_violation(const Graph& g, const Vec& pi, const Weights& q) {
    const double scale = *std::max_element(pi.begin(), pi.end());
    double worst = 0.0;
    for (double x : q) worst = std::max(worst, -x);
    for (double s : vertex_slack(g, pi, q)) worst = std::max(worst, -s);
    return worst / scale;
}

Chain transition_matrix(const Graph& g, const Vec& pi, const Weights& q, double tol) {
    check_distribution(g, pi);
    const double viol = feasibility_violation(g, pi, q);
    if (viol > tol) throw Error(Status::infeasible, "infeasible weights: relative violation " + std::to_string(viol));
    Chain c{Matrix::identity(g.size()), pi};
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        c.p(u, v) = q[e] / pi[u];
        c.p(v, u) = q[e] / pi[v];
    }
    for (int i = 0; i < g.size(); ++i) {
        double off = 0.0;
        for (int j : g.neighbors(i)) off += c.p(i, j);
        // Rounding can leave a diagonal at -1e-17 on active constraints.
        c.p(i, i) = std::max(0.0, 1.0 - off);
    }
    return c;
}

Chain metropolis_chain(const Graph& g, const Vec& pi) {
    check_distribution(g, pi);
    if (!g.connected()) throw Error(Status::infeasible, "graph is disconnected");
    Chain c{Matrix(g.size()), pi};
    for (const auto& [u, v] : g.edges()) {
        const double du = g.degree(u), dv = g.degree(v);
        c.p(u, v) = std::min(pi[v] * du / (pi[u] * dv), 1.0) / du;
        c.p(v, u) = std::min(pi[u] * dv / (pi[v] * du), 1.0) / dv;
    }
    for (int i = 0; i < g.size(); ++i) {
        double off = 0.0;
        for (int j : g.neighbors(i)) off += c.p(i, j);
        c.p(i, i) = std::max(0.0, 1.0 - off);
    }
    return c;
}

Weights weights_of_chain(const Graph& g, const Chain& c) {
    Weights q(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        // Average the two sides so rounding cannot break symmetry.
        q[e] = 0.5 * (c.pi[u] * c.p(u, v) + c.pi[v] * c.p(v, u));
    }
    return q;
}

double ChainReport::worst() const {
    return std::max({negativity, above_one, row_sum, sparsity, detailed_balance, stationarity});
}

ChainReport validate_chain(const Chain& c, const Graph& g) {
    const int n = g.size();
    if (c.p.rows() != n || c.p.cols() != n || static_cast<int>(c.pi.size()) != n)
        throw Error(Status::invalid, "chain dimension does not match graph");
    ChainReport r;
    const double scale = *std::max_element(c.pi.begin(), c.pi.end());
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            const double x = c.p(i, j);
            row += x;
            r.negativity = std::max(r.negativity, -x);
            r.above_one = std::max(r.above_one, x - 1.0);
            if (i != j && !g.has_edge(i, j)) r.sparsity = std::max(r.sparsity, std::abs(x));
            if (j > i) r.detailed_balance = std::max(r.detailed_balance, std::abs(c.pi[i] * x - c.pi[j] * c.p(j, i)) / scale);
        }
        r.row_sum = std::max(r.row_sum, std::abs(row - 1.0));
    }
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += c.pi[i] * c.p(i, j);
        r.stationarity = std::max(r.stationarity, std::abs(s - c.pi[j]) / scale);
    }
    return r;
}

}  // namespace fmmc
