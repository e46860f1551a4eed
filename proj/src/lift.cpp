#include "fmmc/lift.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fmmc/spectral.hpp"

namespace fmmc {

void check_lift_spec(const LiftSpec& spec) {
    if (static_cast<int>(spec.fibers.size()) != spec.base.size())
        throw Error(Status::invalid, "lift needs one fiber size per base vertex");
    for (int m : spec.fibers)
        if (m < 1) throw Error(Status::invalid, "fiber sizes must be at least 1");
}

std::vector<int> fiber_offsets(const LiftSpec& spec) {
    check_lift_spec(spec);
    std::vector<int> off(spec.fibers.size() + 1, 0);
    for (std::size_t i = 0; i < spec.fibers.size(); ++i) off[i + 1] = off[i] + spec.fibers[i];
    return off;
}

int lifted_size(const LiftSpec& spec) { return fiber_offsets(spec).back(); }

Graph build_lift(const LiftSpec& spec) {
    const auto off = fiber_offsets(spec);
    std::vector<std::pair<int, int>> pairs;
    const int nb = spec.base.size();
    // Edges are emitted in lifted-vertex order so ids are deterministic.
    for (int i = 0; i < nb; ++i)
        for (int a = 0; a < spec.fibers[i]; ++a) {
            const int x = off[i] + a;
            for (int b = a + 1; b < spec.fibers[i]; ++b) pairs.push_back({x, off[i] + b});
            for (int j = i + 1; j < nb; ++j)
                if (spec.base.has_edge(i, j))
                    for (int b = 0; b < spec.fibers[j]; ++b) pairs.push_back({x, off[j] + b});
        }
    return Graph(off.back(), pairs);
}

Vec aggregate_distribution(const LiftSpec& spec, const Vec& lifted_pi) {
    const auto off = fiber_offsets(spec);
    if (static_cast<int>(lifted_pi.size()) != off.back())
        throw Error(Status::invalid, "lifted distribution length does not match the lift");
    Vec pi(spec.fibers.size(), 0.0);
    for (std::size_t i = 0; i < spec.fibers.size(); ++i)
        for (int a = off[i]; a < off[i + 1]; ++a) {
            if (!(lifted_pi[a] > 0.0)) throw Error(Status::invalid, "lifted distribution must be positive");
            pi[i] += lifted_pi[a];
        }
    return pi;
}

Weights lift_weights(const LiftSpec& spec, const Weights& base_q, const Vec& base_pi, const Vec& lifted_pi,
                     double tol) {
    const auto off = fiber_offsets(spec);
    const Graph& g = spec.base;
    check_distribution(g, base_pi);
    const Vec agg = aggregate_distribution(spec, lifted_pi);
    const double scale = *std::max_element(base_pi.begin(), base_pi.end());
    for (int i = 0; i < g.size(); ++i)
        if (std::abs(agg[i] - base_pi[i]) > tol * scale)
            throw Error(Status::consistency, "fiber sum of vertex " + std::to_string(i) + " does not match the base distribution");
    if (feasibility_violation(g, base_pi, base_q) > tol) throw Error(Status::infeasible, "base weights are infeasible");

    const Vec slack = vertex_slack(g, base_pi, base_q);
    const Graph lifted = build_lift(spec);
    Weights q(lifted.edge_count(), 0.0);
    std::vector<int> owner(off.back());
    for (int i = 0; i < g.size(); ++i)
        for (int a = off[i]; a < off[i + 1]; ++a) owner[a] = i;
    for (int e = 0; e < lifted.edge_count(); ++e) {
        const auto [x, y] = lifted.edge(e);
        const int i = owner[x], j = owner[y];
        if (i == j) {
            // Tight vertex constraints give exact zeros, kept as explicit entries.
            q[e] = std::max(0.0, slack[i]) * ((lifted_pi[x] / base_pi[i]) * (lifted_pi[y] / base_pi[i]));
        } else {
            // Fiber shares are exactly 1 for trivial fibers, so those weights pass through unchanged.
            q[e] = base_q[g.edge_id(i, j)] * ((lifted_pi[x] / base_pi[i]) * (lifted_pi[y] / base_pi[j]));
        }
    }
    return q;
}

Matrix compress_chain(const LiftSpec& spec, const Chain& lifted) {
    const auto off = fiber_offsets(spec);
    if (lifted.p.rows() != off.back()) throw Error(Status::invalid, "lifted chain dimension does not match the lift");
    const int nb = spec.base.size();
    // Lambda rows are 1/sqrt(m_i) on fiber i; the similarity diag(1/sqrt(m_i)) turns
    // Lambda P Lambda^T into per-fiber block averages over the source fiber.
    Matrix lam(nb, off.back());
    for (int i = 0; i < nb; ++i)
        for (int a = off[i]; a < off[i + 1]; ++a) lam(i, a) = 1.0 / std::sqrt(spec.fibers[i]);
    const Matrix core = lam * lifted.p * lam.transpose();
    Matrix out(nb);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) out(i, j) = core(i, j) * std::sqrt(static_cast<double>(spec.fibers[j]) / spec.fibers[i]);
    return out;
}

Matrix compress_symmetric(const LiftSpec& spec, const Chain& lifted) {
    const auto off = fiber_offsets(spec);
    const Vec pi = aggregate_distribution(spec, lifted.pi);
    const int nb = spec.base.size();
    Matrix v(nb, off.back());
    for (int i = 0; i < nb; ++i)
        for (int a = off[i]; a < off[i + 1]; ++a) v(i, a) = std::sqrt(lifted.pi[a] / pi[i]);
    const Matrix b = v * symmetrized(lifted) * v.transpose();
    Matrix s(nb);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) s(i, j) = 0.5 * (b(i, j) + b(j, i));
    return s;
}

InterlacingReport verify_interlacing(const Vec& lifted_eigs, const Vec& base_eigs, double tol) {
    const int n = static_cast<int>(lifted_eigs.size()), m = static_cast<int>(base_eigs.size());
    if (m > n) throw Error(Status::invalid, "base spectrum is longer than the lifted spectrum");
    for (int k = 1; k < n; ++k)
        if (lifted_eigs[k] > lifted_eigs[k - 1] + tol) throw Error(Status::invalid, "lifted spectrum is not sorted");
    for (int k = 1; k < m; ++k)
        if (base_eigs[k] > base_eigs[k - 1] + tol) throw Error(Status::invalid, "base spectrum is not sorted");

    InterlacingReport r;
    for (int j = 0; j < m; ++j) {
        r.max_violation = std::max(r.max_violation, base_eigs[j] - lifted_eigs[j]);
        r.max_violation = std::max(r.max_violation, lifted_eigs[j + n - m] - base_eigs[j]);
    }
    r.holds = r.max_violation <= tol;

    std::vector<char> used(n, 0);
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < n; ++k)
            if (!used[k] && std::abs(lifted_eigs[k] - base_eigs[j]) <= std::sqrt(tol)) {
                used[k] = 1;
                ++r.tight;
                break;
            }
    return r;
}

}  // namespace fmmc
