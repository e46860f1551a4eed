#include "fmmc/solver.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "fmmc/spectral.hpp"

namespace fmmc {

namespace {

using Dense = Eigen::MatrixXd;

// Deflated symmetric operator I - D^{-1/2} L D^{-1/2} - Jtilde.
Dense deflated(const Graph& g, const Vec& pi, const Weights& q) {
    const int n = g.size();
    const double total = std::accumulate(pi.begin(), pi.end(), 0.0);
    Eigen::VectorXd root(n);
    for (int i = 0; i < n; ++i) root(i) = std::sqrt(pi[i]);
    Dense m = Dense::Identity(n, n) - root * root.transpose() / total;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        m(u, u) -= q[e] / pi[u];
        m(v, v) -= q[e] / pi[v];
        const double off = q[e] / (root(u) * root(v));
        m(u, v) += off;
        m(v, u) += off;
    }
    return m;
}

struct Eval {
    double value = 1.0;
    Weights grad;
};

// Squared projections of an eigenspace onto each edge vector b_e = e_u/sqrt(pi_u) - e_v/sqrt(pi_v), averaged.
Weights edge_energy(const Graph& g, const Vec& pi, const Dense& vecs, const std::vector<int>& cols) {
    Weights out(g.edge_count(), 0.0);
    for (int k : cols)
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto [u, v] = g.edge(e);
            const double d = vecs(u, k) / std::sqrt(pi[u]) - vecs(v, k) / std::sqrt(pi[v]);
            out[e] += d * d / static_cast<double>(cols.size());
        }
    return out;
}

Eval evaluate(const Graph& g, const Vec& pi, const Weights& q) {
    const int n = g.size();
    Eval ev;
    ev.grad.assign(g.edge_count(), 0.0);
    if (n < 2) {
        ev.value = 0.0;
        return ev;
    }
    Eigen::SelfAdjointEigenSolver<Dense> es(deflated(g, pi, q));
    const auto& lam = es.eigenvalues();  // ascending
    const double top = lam(n - 1), bottom = -lam(0);
    ev.value = std::max({top, bottom, 0.0});
    const bool up = top >= bottom - 1e-12, down = bottom >= top - 1e-12;
    std::vector<int> up_cols, down_cols;
    for (int k = 0; k < n; ++k) {
        if (up && std::abs(lam(k) - top) <= 1e-9) up_cols.push_back(k);
        if (down && std::abs(lam(k) + bottom) <= 1e-9) down_cols.push_back(k);
    }
    const double share = up && down ? 0.5 : 1.0;
    if (up) {
        const Weights w = edge_energy(g, pi, es.eigenvectors(), up_cols);
        for (int e = 0; e < g.edge_count(); ++e) ev.grad[e] -= share * w[e];
    }
    if (down) {
        const Weights w = edge_energy(g, pi, es.eigenvectors(), down_cols);
        for (int e = 0; e < g.edge_count(); ++e) ev.grad[e] += share * w[e];
    }
    return ev;
}

Vec capacities(const Graph& g, const Vec& pi, const FixedWeights& fixed) {
    Vec cap = pi;
    if (fixed.empty()) return cap;
    for (int e = 0; e < g.edge_count(); ++e)
        if (fixed.mask[e]) {
            cap[g.edge(e).u] -= fixed.values[e];
            cap[g.edge(e).v] -= fixed.values[e];
        }
    const double scale = *std::max_element(pi.begin(), pi.end());
    for (int i = 0; i < g.size(); ++i) {
        if (cap[i] < -1e-9 * scale) throw Error(Status::infeasible, "fixed weights exceed the capacity of vertex " + std::to_string(i));
        cap[i] = std::max(cap[i], 0.0);
    }
    return cap;
}

bool is_fixed(const FixedWeights& f, int e) { return !f.empty() && f.mask[e]; }

Weights dykstra(const Graph& g, const Vec& cap, const Weights& w, const FixedWeights& fixed, double scale) {
    const int m = g.edge_count(), n = g.size();
    Weights x = w;
    for (int e = 0; e < m; ++e)
        if (is_fixed(fixed, e)) x[e] = fixed.values[e];

    auto load = [&](const Weights& y, int i) {
        double s = 0.0;
        for (int e : g.incident(i))
            if (!is_fixed(fixed, e)) s += y[e];
        return s;
    };
    bool feasible = true;
    for (int e = 0; e < m && feasible; ++e)
        if (!is_fixed(fixed, e) && x[e] < 0.0) feasible = false;
    for (int i = 0; i < n && feasible; ++i)
        if (load(x, i) > cap[i]) feasible = false;
    if (feasible) return x;

    Weights box_inc(m, 0.0);
    std::vector<Weights> vert_inc(n);
    for (int i = 0; i < n; ++i) vert_inc[i].assign(g.incident(i).size(), 0.0);
    for (int sweep = 0; sweep < 20000; ++sweep) {
        double change = 0.0;
        for (int e = 0; e < m; ++e) {
            if (is_fixed(fixed, e)) continue;
            const double y = x[e] + box_inc[e];
            const double nx = std::max(y, 0.0);
            change = std::max(change, std::abs(nx - x[e]));
            box_inc[e] = y - nx;
            x[e] = nx;
        }
        for (int i = 0; i < n; ++i) {
            const auto& inc = g.incident(i);
            double s = 0.0;
            int k = 0;
            for (std::size_t a = 0; a < inc.size(); ++a)
                if (!is_fixed(fixed, inc[a])) {
                    s += x[inc[a]] + vert_inc[i][a];
                    ++k;
                }
            if (k == 0) continue;
            const double shift = s > cap[i] ? (s - cap[i]) / k : 0.0;
            for (std::size_t a = 0; a < inc.size(); ++a) {
                const int e = inc[a];
                if (is_fixed(fixed, e)) continue;
                const double y = x[e] + vert_inc[i][a];
                const double nx = y - shift;
                change = std::max(change, std::abs(nx - x[e]));
                vert_inc[i][a] = y - nx;
                x[e] = nx;
            }
        }
        if (change <= 1e-14 * scale) break;
    }
    // Remove rounding residue so downstream feasibility checks pass exactly.
    for (int e = 0; e < m; ++e)
        if (!is_fixed(fixed, e)) x[e] = std::max(x[e], 0.0);
    for (int i = 0; i < n; ++i) {
        const double s = load(x, i);
        if (s > cap[i] && s > 0.0)
            for (int e : g.incident(i))
                if (!is_fixed(fixed, e)) x[e] *= cap[i] / s;
    }
    return x;
}

// Rounds to 40 significant bits so that pi and any rescaling of it normalize to the same values.
double canonical(double x) {
    int ex = 0;
    const double m = std::frexp(x, &ex);
    return std::ldexp(std::nearbyint(std::ldexp(m, 40)), ex - 40);
}

Weights metropolis_weights(const Graph& g, const Vec& pi) { return weights_of_chain(g, metropolis_chain(g, pi)); }

struct RunOutcome {
    Weights q;
    double value = 1.0;
    int iterations = 0;
    bool exhausted = false;
};

RunOutcome run(const Graph& g, const Vec& pi, const Vec& cap, const FixedWeights& fixed, Weights start, const SolverOptions& o,
               double step0, double scale) {
    RunOutcome out;
    Weights q = dykstra(g, cap, start, fixed, scale);
    Eval ev = evaluate(g, pi, q);
    out.q = q;
    out.value = ev.value;
    double c = step0, window_best = out.value;
    int t = 1, halvings = 0;
    for (int it = 1; it <= o.max_iters; ++it) {
        out.iterations = it;
        double norm = 0.0;
        for (int e = 0; e < g.edge_count(); ++e)
            if (!is_fixed(fixed, e)) norm += ev.grad[e] * ev.grad[e];
        norm = std::sqrt(norm);
        if (norm == 0.0 || out.value == 0.0) break;
        const double step = c / std::sqrt(static_cast<double>(t));
        for (int e = 0; e < g.edge_count(); ++e)
            if (!is_fixed(fixed, e)) q[e] -= step * ev.grad[e] / norm;
        q = dykstra(g, cap, q, fixed, scale);
        ev = evaluate(g, pi, q);
        ++t;
        if (ev.value < out.value) {
            out.value = ev.value;
            out.q = q;
        }
        if (it % o.stall_window == 0) {
            if (window_best - out.value < o.stall_tol) {
                // Stalled: restart the step schedule from the best point with a smaller scale.
                if (++halvings > o.max_halvings) break;
                c *= 0.5;
                t = 1;
                q = out.q;
                ev = evaluate(g, pi, q);
            }
            window_best = out.value;
        }
        if (it == o.max_iters) out.exhausted = true;
    }
    return out;
}

// Log-sum-exp smoothing of the largest |eigenvalue| of the deflated operator, within mu*log(2n) of it.
struct Smoothed {
    double value = 0.0;  // smoothed objective
    double exact = 1.0;  // unsmoothed objective at the same point
    Weights grad;
};

Smoothed smoothed(const Graph& g, const Vec& pi, const Weights& q, double mu) {
    const int n = g.size();
    Eigen::SelfAdjointEigenSolver<Dense> es(deflated(g, pi, q));
    const auto& lam = es.eigenvalues();
    const auto& vec = es.eigenvectors();
    const double peak = std::max(lam(n - 1), -lam(0));
    Smoothed out;
    out.exact = std::max(peak, 0.0);
    Eigen::VectorXd coef(n);
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const double a = std::exp((lam(k) - peak) / mu), b = std::exp((-lam(k) - peak) / mu);
        coef(k) = a - b;
        sum += a + b;
    }
    coef /= sum;
    out.value = peak + mu * std::log(sum);
    out.grad.assign(g.edge_count(), 0.0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        double acc = 0.0;
        for (int k = 0; k < n; ++k) {
            if (coef(k) == 0.0) continue;
            const double d = vec(u, k) / std::sqrt(pi[u]) - vec(v, k) / std::sqrt(pi[v]);
            acc += coef(k) * d * d;
        }
        out.grad[e] = -acc;
    }
    return out;
}

// Projected gradient with backtracking on the smoothed objective, lowering mu in stages.
RunOutcome polish(const Graph& g, const Vec& pi, const Vec& cap, const FixedWeights& fixed, const RunOutcome& from, int iters,
                  double scale) {
    RunOutcome best = from;
    if (iters <= 0 || g.size() < 2 || from.value == 0.0) return best;
    Weights x = from.q;
    double step = 1e-2 * scale;
    for (double mu = 1e-2; mu >= 1e-7; mu *= 0.25) {
        Smoothed cur = smoothed(g, pi, x, mu);
        // A level ends once 50 steps gain less than a small fraction of its smoothing error.
        double checkpoint = cur.value;
        for (int it = 0; it < iters; ++it) {
            if (it > 0 && it % 50 == 0) {
                if (checkpoint - cur.value < 1e-2 * mu) break;
                checkpoint = cur.value;
            }
            ++best.iterations;
            bool moved = false;
            for (int tries = 0; tries < 60; ++tries) {
                Weights y = x;
                for (int e = 0; e < g.edge_count(); ++e)
                    if (!is_fixed(fixed, e)) y[e] -= step * cur.grad[e];
                y = dykstra(g, cap, y, fixed, scale);
                double lin = 0.0, dist = 0.0;
                for (int e = 0; e < g.edge_count(); ++e) {
                    lin += cur.grad[e] * (y[e] - x[e]);
                    dist += (y[e] - x[e]) * (y[e] - x[e]);
                }
                if (dist <= 1e-30 * scale * scale) break;
                const Smoothed next = smoothed(g, pi, y, mu);
                if (next.value <= cur.value + lin + dist / (2.0 * step)) {
                    x = std::move(y);
                    cur = next;
                    moved = true;
                    step *= 1.5;
                    break;
                }
                step *= 0.5;
            }
            if (cur.exact < best.value) {
                best.value = cur.exact;
                best.q = x;
            }
            if (!moved) break;
        }
    }
    return best;
}

// Euclidean projection of eigenvalues onto the probability simplex.
Vec simplex_projection(Vec v) {
    Vec s = v;
    std::sort(s.begin(), s.end(), std::greater<>());
    double acc = 0.0, theta = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        acc += s[k];
        const double t = (acc - 1.0) / static_cast<double>(k + 1);
        if (s[k] - t > 0.0) theta = t;
    }
    for (double& x : v) x = std::max(x - theta, 0.0);
    return v;
}

// Least-squares residual of the stationarity system
//   <Y_up - Y_down, b_e b_e^T> = c_u + c_v - d_e,
// over Y_up, Y_down PSD on the attaining eigenspaces with total trace 1, c >= 0 on active
// vertices and d >= 0 on zero-weight edges. Returned relative to the largest edge energy.
double stationarity_residual(const Graph& g, const Vec& pi, const Weights& q, const Dense& up, const Dense& down,
                             const std::vector<int>& active, double zero_tol) {
    const int m = g.edge_count(), k1 = static_cast<int>(up.cols()), k2 = static_cast<int>(down.cols());
    std::vector<Eigen::VectorXd> a1(m), a2(m);
    double energy = 0.0, lip = 0.0;
    for (int e = 0; e < m; ++e) {
        const auto [u, v] = g.edge(e);
        Eigen::VectorXd b = Eigen::VectorXd::Zero(g.size());
        b(u) = 1.0 / std::sqrt(pi[u]);
        b(v) = -1.0 / std::sqrt(pi[v]);
        a1[e] = k1 ? Eigen::VectorXd(up.transpose() * b) : Eigen::VectorXd();
        a2[e] = k2 ? Eigen::VectorXd(down.transpose() * b) : Eigen::VectorXd();
        const double s1 = k1 ? a1[e].squaredNorm() : 0.0, s2 = k2 ? a2[e].squaredNorm() : 0.0;
        energy = std::max({energy, s1, s2});
        lip += s1 * s1 + s2 * s2 + 3.0;
    }
    if (energy == 0.0) return 0.0;
    std::vector<char> is_active(g.size(), 0);
    for (int i : active) is_active[i] = 1;
    const double qscale = *std::max_element(pi.begin(), pi.end());
    std::vector<char> at_zero(m, 0);
    for (int e = 0; e < m; ++e) at_zero[e] = q[e] <= zero_tol * qscale;

    Dense z1 = k1 ? Dense(Dense::Identity(k1, k1) / (k1 + k2)) : Dense();
    Dense z2 = k2 ? Dense(Dense::Identity(k2, k2) / (k1 + k2)) : Dense();
    Vec c(g.size(), 0.0), d(m, 0.0);

    auto residuals = [&](const Dense& y1, const Dense& y2, const Vec& cc, const Vec& dd) {
        Vec r(m);
        for (int e = 0; e < m; ++e) {
            double val = 0.0;
            if (k1) val += a1[e].dot(y1 * a1[e]);
            if (k2) val -= a2[e].dot(y2 * a2[e]);
            r[e] = val - cc[g.edge(e).u] - cc[g.edge(e).v] + dd[e];
        }
        return r;
    };
    auto norm_of = [](const Vec& r) {
        double s = 0.0;
        for (double x : r) s += x * x;
        return std::sqrt(s);
    };

    const double step = 1.0 / lip;
    double best = norm_of(residuals(z1, z2, c, d));
    Dense y1 = z1, y2 = z2;
    Vec yc = c, yd = d;
    double tk = 1.0;
    // Stops well below the consistency threshold, or once progress over a block of iterations stalls.
    double checkpoint = best;
    for (int it = 0; it < 20000 && best > 1e-9 * energy; ++it) {
        if (it > 0 && it % 500 == 0) {
            if (best > 0.99 * checkpoint) break;
            checkpoint = best;
        }
        const Vec r = residuals(y1, y2, yc, yd);
        Dense n1 = y1, n2 = y2;
        Vec nc = yc, nd = yd;
        for (int e = 0; e < m; ++e) {
            if (k1) n1 -= step * r[e] * a1[e] * a1[e].transpose();
            if (k2) n2 += step * r[e] * a2[e] * a2[e].transpose();
            nc[g.edge(e).u] += step * r[e];
            nc[g.edge(e).v] += step * r[e];
            nd[e] -= step * r[e];
        }
        // Joint projection: PSD blocks with unit total trace.
        Vec eig;
        Eigen::SelfAdjointEigenSolver<Dense> e1, e2;
        if (k1) {
            e1.compute(n1);
            for (int i = 0; i < k1; ++i) eig.push_back(e1.eigenvalues()(i));
        }
        if (k2) {
            e2.compute(n2);
            for (int i = 0; i < k2; ++i) eig.push_back(e2.eigenvalues()(i));
        }
        eig = simplex_projection(eig);
        if (k1) n1 = e1.eigenvectors() * Eigen::Map<Eigen::VectorXd>(eig.data(), k1).asDiagonal() * e1.eigenvectors().transpose();
        if (k2) n2 = e2.eigenvectors() * Eigen::Map<Eigen::VectorXd>(eig.data() + k1, k2).asDiagonal() * e2.eigenvectors().transpose();
        for (int i = 0; i < g.size(); ++i) nc[i] = is_active[i] ? std::max(nc[i], 0.0) : 0.0;
        for (int e = 0; e < m; ++e) nd[e] = at_zero[e] ? std::max(nd[e], 0.0) : 0.0;

        const double tn = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * tk * tk));
        const double mom = (tk - 1.0) / tn;
        if (k1) y1 = n1 + mom * (n1 - z1);
        if (k2) y2 = n2 + mom * (n2 - z2);
        for (int i = 0; i < g.size(); ++i) yc[i] = nc[i] + mom * (nc[i] - c[i]);
        for (int e = 0; e < m; ++e) yd[e] = nd[e] + mom * (nd[e] - d[e]);
        z1 = n1;
        z2 = n2;
        c = nc;
        d = nd;
        tk = tn;
        best = std::min(best, norm_of(residuals(z1, z2, c, d)));
    }
    return best / energy;
}

}  // namespace

Matrix jtilde(const Vec& pi) {
    const double total = std::accumulate(pi.begin(), pi.end(), 0.0);
    const int n = static_cast<int>(pi.size());
    Matrix j(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) j(a, b) = std::sqrt(pi[a] * pi[b]) / total;
    return j;
}

double objective(const Graph& g, const Vec& pi, const Weights& q) {
    check_distribution(g, pi);
    if (static_cast<int>(q.size()) != g.edge_count()) throw Error(Status::invalid, "weight vector does not match edge count");
    const double viol = feasibility_violation(g, pi, q);
    if (viol > 1e-9) throw Error(Status::infeasible, "infeasible weights: relative violation " + std::to_string(viol));
    return evaluate(g, pi, q).value;
}

Weights subgradient(const Graph& g, const Vec& pi, const Weights& q) {
    check_distribution(g, pi);
    return evaluate(g, pi, q).grad;
}

Weights project_feasible(const Graph& g, const Vec& pi, const Weights& w, const FixedWeights& fixed) {
    check_distribution(g, pi);
    if (static_cast<int>(w.size()) != g.edge_count()) throw Error(Status::invalid, "weight vector does not match edge count");
    const Vec cap = capacities(g, pi, fixed);
    return dykstra(g, cap, w, fixed, *std::max_element(pi.begin(), pi.end()));
}

SolveResult solve(const Graph& g, const Vec& pi_in, const SolverOptions& o, const FixedWeights& fixed, const Weights* warm) {
    check_distribution(g, pi_in);
    if (!g.connected()) throw Error(Status::infeasible, "graph is disconnected");
    if (!fixed.empty() && (static_cast<int>(fixed.mask.size()) != g.edge_count() || static_cast<int>(fixed.values.size()) != g.edge_count()))
        throw Error(Status::invalid, "fixed-weight mask does not match edge count");
    if (o.max_iters < 1 || o.stall_window < 1 || o.restarts < 0 || o.polish_iters < 0 || o.stall_tol <= 0.0 || o.step_scale < 0.0)
        throw Error(Status::invalid, "solver options must be positive");

    // Work on pi normalized to unit sum; weights scale back at the end.
    const double total = std::accumulate(pi_in.begin(), pi_in.end(), 0.0);
    Vec pi = pi_in;
    for (double& x : pi) x = canonical(x / total);
    FixedWeights fx = fixed;
    for (double& x : fx.values) x = canonical(x / total);
    const Vec cap = capacities(g, pi, fx);
    const double scale = *std::max_element(pi.begin(), pi.end());
    const double step0 = o.step_scale > 0.0 ? o.step_scale / total : 0.1 * *std::min_element(pi.begin(), pi.end());

    const Weights metro = metropolis_weights(g, pi);
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> jitter(0.5, 1.5);

    SolveResult best;
    best.slem = 2.0;
    for (int r = 0; r <= o.restarts; ++r) {
        Weights start = metro;
        if (r == 0 && warm) {
            if (static_cast<int>(warm->size()) != g.edge_count()) throw Error(Status::invalid, "warm start does not match edge count");
            for (int e = 0; e < g.edge_count(); ++e) start[e] = (*warm)[e] / total;
        } else if (r > 0) {
            for (double& x : start) x *= jitter(rng);
        }
        const RunOutcome out = polish(g, pi, cap, fx, run(g, pi, cap, fx, start, o, step0, scale), o.polish_iters, scale);
        best.iterations += out.iterations;
        best.budget_exhausted = best.budget_exhausted || out.exhausted;
        if (out.value < best.slem) {
            best.slem = out.value;
            best.q = out.q;
            best.best_run = r;
        }
    }
    for (double& x : best.q) x *= total;
    for (int e = 0; e < g.edge_count(); ++e)
        if (is_fixed(fixed, e)) best.q[e] = fixed.values[e];
    best.certificate = certify(g, pi_in, best.q);
    best.slem = best.certificate.slem;
    return best;
}

Certificate certify(const Graph& g, const Vec& pi, const Weights& q, double tol) {
    check_distribution(g, pi);
    const double viol = feasibility_violation(g, pi, q);
    if (viol > 1e-9) throw Error(Status::infeasible, "infeasible weights: relative violation " + std::to_string(viol));
    const int n = g.size();
    Certificate cert;
    if (n < 2) {
        cert.slem = 0.0;
        cert.dual_consistent = true;
        return cert;
    }

    // Spectrum of D^{-1/2} L D^{-1/2}; the chain eigenvalues are 1 minus these.
    Matrix a(n);
    const Matrix lap = build_laplacian(g, q);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = lap(i, j) / std::sqrt(pi[i] * pi[j]);
    const EigenResult es = eig_symmetric(a, true);  // nonincreasing
    cert.lambda2 = es.values[n - 2];
    cert.lambdaN = es.values[0];
    cert.eigenvalue_sum_gap = std::abs(cert.lambda2 + cert.lambdaN - 2.0);
    const double upper = 1.0 - cert.lambda2, lower = cert.lambdaN - 1.0;
    cert.slem = std::max({upper, lower, 0.0});
    cert.upper_active = upper >= cert.slem - tol;
    cert.lower_active = lower >= cert.slem - tol;

    // Attaining eigenvectors, excluding the trivial direction sqrt(pi) at index n-1.
    std::vector<int> up_cols, down_cols;
    for (int k = 0; k < n - 1; ++k) {
        const double chain_eig = 1.0 - es.values[k];
        if (cert.upper_active && chain_eig >= cert.slem - tol) up_cols.push_back(k);
        if (cert.lower_active && -chain_eig >= cert.slem - tol) down_cols.push_back(k);
    }
    auto gather = [&](const std::vector<int>& cols) {
        Matrix v(n, static_cast<int>(cols.size()));
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (int i = 0; i < n; ++i) v(i, static_cast<int>(c)) = es.vectors(i, cols[c]);
        return v;
    };
    cert.upper_vectors = gather(up_cols);
    cert.lower_vectors = gather(down_cols);

    const Vec slack = vertex_slack(g, pi, q);
    for (int i = 0; i < n; ++i)
        if (slack[i] <= 1e-9 * pi[i]) cert.active_vertices.push_back(i);

    if (cert.slem == 0.0) {
        cert.dual_consistent = true;
        return cert;
    }
    auto to_dense = [](const Matrix& m) {
        Dense d(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) d(i, j) = m(i, j);
        return d;
    };
    cert.dual_residual = stationarity_residual(g, pi, q, to_dense(cert.upper_vectors), to_dense(cert.lower_vectors),
                                               cert.active_vertices, 1e-9);
    cert.dual_consistent = cert.dual_residual <= 1e-6;
    return cert;
}

}  // namespace fmmc
