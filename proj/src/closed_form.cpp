#include "fmmc/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "fmmc/lift.hpp"
#include "fmmc/spectral.hpp"

namespace fmmc {

namespace {

std::string idx(const char* sym, int i) { return std::string(sym) + "_" + std::to_string(i); }

Condition at_least(std::string text, double lhs, double rhs) {
    const double slack = kConditionSlack * std::max(std::abs(lhs), std::abs(rhs));
    return {std::move(text), lhs >= rhs - slack, lhs - rhs};
}

double sum(const Vec& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

ClosedFormResult start(std::string family, Graph g, Vec pi) {
    check_distribution(g, pi);
    ClosedFormResult r;
    r.family = std::move(family);
    r.q.assign(g.edge_count(), 0.0);
    r.graph = std::move(g);
    r.pi = std::move(pi);
    return r;
}

void refuse(ClosedFormResult& r, std::string reason) {
    r.refused = true;
    r.reason = std::move(reason);
}

// Marks the result refused on the first failed required condition.
bool conditions_fail(ClosedFormResult& r) {
    for (const auto& c : r.conditions)
        if (!c.ok) {
            refuse(r, "condition failed: " + c.text);
            return true;
        }
    return false;
}

// Feasibility plus agreement of the reported SLEM with the spectrum of the built chain.
void finish(ClosedFormResult& r) {
    if (r.refused) return;
    const double viol = feasibility_violation(r.graph, r.pi, r.q);
    if (viol > 1e-9) {
        refuse(r, "constructed weights are infeasible (relative violation " + std::to_string(viol) + ")");
        return;
    }
    r.slem = slem_of_chain(transition_matrix(r.graph, r.pi, r.q)).slem;
    if (r.formula_slem && std::abs(*r.formula_slem - r.slem) > 1e-8)
        refuse(r, "closed-form SLEM " + std::to_string(*r.formula_slem) + " disagrees with the spectral value " +
                      std::to_string(r.slem));
}

void set_edge(ClosedFormResult& r, int a, int b, double w) {
    const int e = r.graph.edge_id(a, b);
    if (e < 0) throw Error(Status::internal, "generator is missing edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    r.q[e] = w;
}

double harmonic(double a, double b) { return a * b / (a + b); }

// Path solver over a named distribution; sym labels the condition texts.
ClosedFormResult path_impl(const Vec& pi, const char* sym) {
    const int n = static_cast<int>(pi.size());
    if (n < 2) throw Error(Status::invalid, "path needs at least two vertices");
    ClosedFormResult r = start("path", path_graph(n), pi);

    if (n == 3 && pi[1] * pi[1] < pi[0] * pi[2] - kConditionSlack * pi[0] * pi[2]) {
        // Middle vertex constraint is active.
        const double d = pi[1] * (pi[0] + pi[2]) + 4.0 * pi[0] * pi[2];
        r.regime = "middle_active";
        r.q[0] = pi[0] * pi[1] * (pi[1] + 2.0 * pi[2]) / d;
        r.q[1] = pi[2] * pi[1] * (pi[1] + 2.0 * pi[0]) / d;
        r.formula_slem = (4.0 * pi[0] * pi[2] - pi[1] * pi[1]) / d;
        finish(r);
        return r;
    }

    r.regime = "interior";
    for (int i = 1; i + 1 < n; ++i)
        r.conditions.push_back(at_least(idx(sym, i + 1) + "^2 >= " + idx(sym, i) + "*" + idx(sym, i + 2), pi[i] * pi[i],
                                        pi[i - 1] * pi[i + 1]));
    if (conditions_fail(r)) return r;
    for (int i = 0; i + 1 < n; ++i) r.q[i] = harmonic(pi[i], pi[i + 1]);
    if (n == 2) {
        r.formula_slem = 0.0;
    } else if (n == 3) {
        r.formula_slem = std::sqrt(pi[0] * pi[2] / ((pi[0] + pi[1]) * (pi[1] + pi[2])));
    } else if (n == 4) {
        r.formula_slem = std::sqrt((pi[0] * pi[2] / (pi[0] + pi[1]) + pi[1] * pi[3] / (pi[2] + pi[3])) / (pi[1] + pi[2]));
    } else {
        r.formula_slem = path_slem(pi, r.q);
    }
    finish(r);
    return r;
}

// Minimizer of a convex function on [lo, hi].
double golden_min(const std::function<double(double)>& f, double lo, double hi) {
    if (hi <= lo) return lo;
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi, c = b - g * (b - a), d = a + g * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    // The bounds themselves are candidates: the optimum often sits on a constraint.
    double best = 0.5 * (a + b), fbest = f(best);
    for (double x : {lo, hi})
        if (f(x) <= fbest) {
            best = x;
            fbest = f(x);
        }
    return best;
}

void tree_weights(ClosedFormResult& r, const std::vector<int>& depth, const Vec& q_by_depth) {
    for (int e = 0; e < r.graph.edge_count(); ++e) {
        const auto [u, v] = r.graph.edge(e);
        r.q[e] = q_by_depth[std::min(depth[u], depth[v])];
    }
}

ClosedFormResult rename(ClosedFormResult r, std::string family) {
    r.family = std::move(family);
    return r;
}

}  // namespace

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, e);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return Graph(leaves + 1, e);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph(n, e);
}

std::vector<int> symmetric_tree_depths(const std::vector<int>& branching) {
    std::vector<int> depth{0};
    int level_size = 1;
    for (std::size_t d = 0; d < branching.size(); ++d) {
        level_size *= branching[d];
        for (int k = 0; k < level_size; ++k) depth.push_back(static_cast<int>(d) + 1);
    }
    return depth;
}

Graph symmetric_tree_graph(const std::vector<int>& branching) {
    if (branching.empty()) throw Error(Status::invalid, "symmetric tree needs depth at least 1");
    for (int m : branching)
        if (m < 1) throw Error(Status::invalid, "branching factors must be positive");
    std::vector<std::pair<int, int>> e;
    int level_start = 0, level_size = 1, next_id = 1;
    for (int m : branching) {
        for (int p = level_start; p < level_start + level_size; ++p)
            for (int c = 0; c < m; ++c) e.push_back({p, next_id++});
        level_start += level_size;
        level_size *= m;
    }
    return Graph(next_id, e);
}

Graph ccs_star_graph(int core, int depth) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < core; ++i)
        for (int j = i + 1; j < core; ++j) e.push_back({i, j});
    for (int d = 1; d <= depth; ++d)
        for (int i = 0; i < core; ++i) e.push_back({(d - 1) * core + i, d * core + i});
    return Graph(core * (depth + 1), e);
}

ClosedFormResult solve_path(const Vec& pi) { return path_impl(pi, "pi"); }

ClosedFormResult solve_star(double center, const Vec& leaves) {
    const int m = static_cast<int>(leaves.size());
    if (m < 1) throw Error(Status::invalid, "star needs at least one leaf");
    Vec pi{center};
    pi.insert(pi.end(), leaves.begin(), leaves.end());
    ClosedFormResult r = start("star", star_graph(m), pi);

    if (m <= 2) {
        // Two or three vertices: the star is a path with the center in the middle.
        const Vec order = m == 1 ? Vec{center, leaves[0]} : Vec{leaves[0], center, leaves[1]};
        ClosedFormResult p = solve_path(order);
        r.regime = "path_" + p.regime;
        r.conditions = p.conditions;
        if (p.refused) {
            refuse(r, p.reason);
            return r;
        }
        r.q = p.q;  // edge ids coincide: {0,1} then {0,2}
        r.formula_slem = p.formula_slem;
        finish(r);
        return r;
    }

    const double total = sum(leaves);
    const double heaviest = *std::max_element(leaves.begin(), leaves.end());
    r.conditions.push_back(at_least("Sum(leaves) >= 2*max(leaf)", total, 2.0 * heaviest));
    if (conditions_fail(r)) return r;
    const bool hub_slack = at_least("", 2.0 * center, total).ok;
    r.regime = hub_slack ? "hub_slack" : "hub_active";
    for (int i = 0; i < m; ++i)
        r.q[i] = hub_slack ? 2.0 * center * leaves[i] / (2.0 * center + total) : leaves[i] * center / total;
    r.formula_slem = hub_slack ? total / (2.0 * center + total) : (total - center) / total;
    finish(r);
    return r;
}

ClosedFormResult solve_palm(int leaves, int path_len, const Vec& pi) {
    if (leaves < 1 || path_len < 2) throw Error(Status::invalid, "palm needs at least one leaf and path length at least 2");
    const int n = leaves + path_len + 1;
    if (static_cast<int>(pi.size()) != n) throw Error(Status::invalid, "palm distribution must have n + m + 1 entries");
    const int c = leaves;  // center = path vertex 0
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < leaves; ++i) e.push_back({i, c});
    for (int k = 0; k < path_len; ++k) e.push_back({c + k, c + k + 1});
    ClosedFormResult r = start("palm", Graph(n, e), pi);
    r.regime = "interior";

    auto path = [&](int k) { return pi[c + k]; };
    const double leaf_sum = std::accumulate(pi.begin(), pi.begin() + leaves, 0.0);
    r.conditions.push_back(at_least("pi_0^2 >= pi_1*Sum(leaves)", path(0) * path(0), path(1) * leaf_sum));
    r.conditions.push_back(at_least("pi_1 >= Sum(leaves)", path(1), leaf_sum));
    for (int k = 1; k < path_len; ++k)
        r.conditions.push_back(
            at_least(idx("pi", k) + "^2 >= " + idx("pi", k - 1) + "*" + idx("pi", k + 1), path(k) * path(k), path(k - 1) * path(k + 1)));
    if (conditions_fail(r)) return r;

    for (int i = 0; i < leaves; ++i) set_edge(r, i, c, path(0) * pi[i] / (path(0) + leaf_sum));
    for (int k = 0; k < path_len; ++k) set_edge(r, c + k, c + k + 1, harmonic(path(k), path(k + 1)));
    finish(r);
    return r;
}

ClosedFormResult solve_ecl(const std::vector<int>& fibers, const Vec& pi) {
    if (fibers.empty()) throw Error(Status::invalid, "ladder needs at least one fiber");
    if (fibers.size() == 1) {
        if (static_cast<int>(pi.size()) != fibers[0]) throw Error(Status::invalid, "distribution length does not match fibers");
        return rename(solve_complete(pi), "ecl");
    }
    const LiftSpec spec{path_graph(static_cast<int>(fibers.size())), fibers};
    ClosedFormResult r = start("ecl", build_lift(spec), pi);
    const Vec sums = aggregate_distribution(spec, pi);
    ClosedFormResult base = path_impl(sums, "S");
    r.regime = base.regime;
    r.conditions = base.conditions;
    if (base.refused) {
        refuse(r, base.reason);
        return r;
    }
    r.q = lift_weights(spec, base.q, sums, pi);
    r.formula_slem = base.formula_slem;
    finish(r);
    return r;
}

ClosedFormResult solve_semi_complete(int n1, int n2, int core, const Vec& pi) {
    if (n1 < 1 || n2 < 1 || core < 1) throw Error(Status::invalid, "semi-complete needs n1, n2, m >= 1");
    std::vector<int> fibers(n1, 1);
    fibers.push_back(core);
    fibers.insert(fibers.end(), n2, 1);
    return rename(solve_ecl(fibers, pi), "semi_complete");
}

ClosedFormResult solve_lollipop(int clique, int path_len, const Vec& pi) {
    if (clique < 2 || path_len < 1) throw Error(Status::invalid, "lollipop needs m >= 2 and n >= 1");
    std::vector<int> fibers(path_len + 1, 1);
    fibers.push_back(clique - 1);
    return rename(solve_ecl(fibers, pi), "lollipop");
}

ClosedFormResult solve_barbell(int clique1, int clique2, int bridge, const Vec& pi) {
    if (clique1 < 2 || clique2 < 2 || bridge < 0) throw Error(Status::invalid, "barbell needs m1, m2 >= 2 and n >= 0");
    std::vector<int> fibers{clique1 - 1};
    fibers.insert(fibers.end(), bridge + 1, 1);
    fibers.push_back(clique2 - 1);
    return rename(solve_ecl(fibers, pi), "barbell");
}

ClosedFormResult solve_bistar(int left, int right, const Vec& pi) {
    if (left < 1 || right < 1) throw Error(Status::invalid, "bistar needs at least one leaf per side");
    const int n = left + right + 2;
    if (static_cast<int>(pi.size()) != n) throw Error(Status::invalid, "bistar distribution must have m1 + m2 + 2 entries");
    const int lc = left, rc = left + 1;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < left; ++i) e.push_back({i, lc});
    e.push_back({lc, rc});
    for (int i = rc + 1; i < n; ++i) e.push_back({rc, i});
    ClosedFormResult r = start("bistar", Graph(n, e), pi);
    r.regime = "interior";

    const double a = pi[lc], b = pi[rc];
    const double lsum = std::accumulate(pi.begin(), pi.begin() + left, 0.0);
    const double rsum = std::accumulate(pi.begin() + rc + 1, pi.end(), 0.0);
    r.conditions.push_back(at_least("pi_-1^2 >= pi_1*Sum(left leaves)", a * a, b * lsum));
    r.conditions.push_back(at_least("pi_1^2 >= pi_-1*Sum(right leaves)", b * b, a * rsum));
    if (conditions_fail(r)) return r;
    const double strict_left = lsum * (b - lsum) * (b + rsum) + rsum * (lsum + a) * (lsum + a);
    const double strict_right = rsum * (a - rsum) * (a + lsum) + lsum * (rsum + b) * (rsum + b);
    if (!(strict_left > 0.0)) r.warnings.push_back("strict left-side inequality does not hold; optimality not certified");
    if (!(strict_right > 0.0)) r.warnings.push_back("strict right-side inequality does not hold; optimality not certified");

    for (int i = 0; i < left; ++i) set_edge(r, i, lc, a * pi[i] / (a + lsum));
    set_edge(r, lc, rc, harmonic(a, b));
    for (int i = rc + 1; i < n; ++i) set_edge(r, rc, i, b * pi[i] / (b + rsum));
    r.formula_slem = std::sqrt((b * lsum / (a + lsum) + a * rsum / (b + rsum)) / (a + b));
    finish(r);
    return r;
}

ClosedFormResult solve_symmetric_tree(const std::vector<int>& branching, const Vec& depth_pi) {
    const int n = static_cast<int>(branching.size());
    if (n < 1 || static_cast<int>(depth_pi.size()) != n + 1)
        throw Error(Status::invalid, "symmetric tree needs m_0..m_{n-1} and pi_0..pi_n");
    if (branching[0] < 2) throw Error(Status::invalid, "symmetric tree root needs at least two children");
    const auto depth = symmetric_tree_depths(branching);
    Vec pi(depth.size());
    for (std::size_t v = 0; v < depth.size(); ++v) pi[v] = depth_pi[depth[v]];
    ClosedFormResult r = start("symmetric_tree", symmetric_tree_graph(branching), pi);

    const auto& m = branching;
    const Vec& p = depth_pi;
    auto reduced = [&](const Vec& q) { return reduced_tree_slem(reduced_tree_chain(m, p, q)); };

    const Condition hub = at_least("2*pi_0 >= m_0*pi_1", 2.0 * p[0], m[0] * p[1]);
    if (n == 1) {
        Vec q{hub.ok ? 2.0 * p[0] * p[1] / (2.0 * p[0] + m[0] * p[1]) : p[0] / m[0]};
        r.regime = hub.ok ? "main" : "hub_active";
        r.formula_slem = hub.ok ? m[0] * p[1] / (m[0] * p[1] + 2.0 * p[0]) : (m[0] * p[1] - p[0]) / (m[0] * p[1]);
        tree_weights(r, depth, q);
        finish(r);
        return r;
    }

    std::vector<Condition> main{hub, at_least("m_0*pi_1^2 >= 2*m_1*pi_0*pi_2", m[0] * p[1] * p[1], 2.0 * m[1] * p[0] * p[2])};
    for (int k = 1; k + 1 < n; ++k)
        main.push_back(at_least("m_" + std::to_string(k) + "*pi_" + std::to_string(k + 1) + "^2 >= m_" + std::to_string(k + 1) +
                                    "*pi_" + std::to_string(k) + "*pi_" + std::to_string(k + 2),
                                m[k] * p[k + 1] * p[k + 1], m[k + 1] * p[k] * p[k + 2]));
    const bool main_ok = std::all_of(main.begin(), main.end(), [](const Condition& c) { return c.ok; });

    Vec q(n, 0.0);
    if (main_ok) {
        r.regime = n == 2 ? "case_1" : "main";
        r.conditions = main;
        q[0] = 2.0 * p[0] * p[1] / (2.0 * p[0] + m[0] * p[1]);
        for (int k = 1; k < n; ++k) q[k] = p[k] * p[k + 1] / (p[k] + m[k] * p[k + 1]);
        if (n == 2) {
            const double a = m[0] * m[0] * p[1] * p[1] * (m[1] * p[2] + p[1]) + 8.0 * m[1] * p[0] * p[2] * (m[0] * p[1] + 2.0 * p[0]);
            r.formula_slem = (std::sqrt(a / (m[1] * p[2] + p[1])) + m[0] * p[1]) / (2.0 * (m[0] * p[1] + 2.0 * p[0]));
        } else {
            r.formula_slem = reduced(q);
        }
    } else if (n == 2) {
        const bool c1 = main[0].ok, c2 = main[1].ok;
        if (!c1 && c2) {
            // Root constraint active; q_1 minimizes the reduced SLEM on that line.
            r.regime = "case_2";
            q[0] = p[0] / m[0];
            const double hi = std::min(p[2], (p[1] - q[0]) / m[1]);
            q[1] = golden_min([&](double x) { return reduced({q[0], x}); }, 0.0, hi);
        } else if (c1 && !c2) {
            // Depth-1 constraint active: q_0 + m_1 q_1 = pi_1.
            r.regime = "case_3";
            const double lo = std::max(0.0, (p[1] - p[0] / m[0]) / m[1]), hi = std::min(p[2], p[1] / m[1]);
            q[1] = golden_min([&](double x) { return reduced({p[1] - m[1] * x, x}); }, lo, hi);
            q[0] = p[1] - m[1] * q[1];
        } else {
            r.regime = "case_4";
            q[0] = p[0] / m[0];
            q[1] = (m[0] * p[1] - p[0]) / (m[0] * m[1]);
            const double a = p[1] * (m[0] * m[0] * p[1] * (m[1] * m[1] * p[2] * p[2] + 2.0 * m[1] * p[1] * p[2] + p[1] * p[1]) -
                                     2.0 * m[0] * p[0] * p[1] * (3.0 * m[1] * p[2] + p[1]) + p[0] * p[0] * (4.0 * m[1] * p[2] + p[1]));
            r.formula_slem = std::sqrt(a) / (2.0 * p[1] * p[2] * m[0] * m[1]) +
                             (m[0] * (m[1] * p[2] - p[1]) + p[0]) / (2.0 * m[0] * m[1] * p[2]);
        }
        if (!r.formula_slem) r.formula_slem = reduced(q);
    } else {
        // Every vertex constraint from the root down is active.
        std::vector<Condition> chain{at_least("m_0*pi_1 >= 2*pi_0", m[0] * p[1], 2.0 * p[0])};
        for (int i = 1; i < n; ++i)
            chain.push_back(at_least("2*m_" + std::to_string(i) + "*pi_" + std::to_string(i - 1) + "*pi_" + std::to_string(i + 1) +
                                         " >= m_" + std::to_string(i - 1) + "*pi_" + std::to_string(i) + "^2",
                                     2.0 * m[i] * p[i - 1] * p[i + 1], m[i - 1] * p[i] * p[i]));
        const bool chain_ok = std::all_of(chain.begin(), chain.end(), [](const Condition& c) { return c.ok; });
        if (!chain_ok) {
            r.conditions = main;
            conditions_fail(r);
            r.reason += " (and the all-active regime does not apply)";
            return r;
        }
        r.regime = "all_active";
        r.conditions = chain;
        q[0] = p[0] / m[0];
        for (int i = 1; i < n; ++i) q[i] = (p[i] - q[i - 1]) / m[i];
        r.formula_slem = reduced(q);
    }
    tree_weights(r, depth, q);
    finish(r);
    return r;
}

ClosedFormResult solve_symmetric_star(int branches, int depth, const Vec& depth_pi) {
    if (branches < 2 || depth < 1) throw Error(Status::invalid, "symmetric star needs m >= 2 and n >= 1");
    std::vector<int> branching(depth, 1);
    branching[0] = branches;
    return rename(solve_symmetric_tree(branching, depth_pi), "symmetric_star");
}

ClosedFormResult solve_semi_symmetric_star(int branches, int depth, const Vec& pi) {
    const int m = branches, n = depth;
    if (m < 2 || n < 1) throw Error(Status::invalid, "semi-symmetric star needs m >= 2 and n >= 1");
    if (static_cast<int>(pi.size()) != 1 + m * n) throw Error(Status::invalid, "semi-symmetric star distribution must have 1 + m*n entries");
    auto at = [&](int i, int a) { return i == 0 ? 0 : 1 + (i - 1) * m + a; };
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < m; ++a) e.push_back({0, at(1, a)});
    for (int i = 2; i <= n; ++i)
        for (int a = 0; a < m; ++a) e.push_back({at(i - 1, a), at(i, a)});
    ClosedFormResult r = start("semi_symmetric_star", Graph(1 + m * n, e), pi);
    r.regime = "interior";

    Vec chi(n + 1, 0.0);
    for (int i = 2; i <= n; ++i) {
        chi[i] = pi[at(i, 0)] / pi[at(i - 1, 0)];
        for (int a = 1; a < m; ++a)
            if (std::abs(pi[at(i, a)] / pi[at(i - 1, a)] - chi[i]) > 1e-9 * chi[i]) {
                refuse(r, "depth ratio chi_" + std::to_string(i) + " is not constant across branches");
                return r;
            }
    }
    const double p0 = pi[0];
    double hub_sum = 0.0, heaviest = 0.0;
    for (int a = 0; a < m; ++a) {
        hub_sum += pi[at(1, a)];
        heaviest = std::max(heaviest, pi[at(1, a)]);
    }
    for (int i = 2; i < n; ++i)
        r.conditions.push_back(at_least("chi_" + std::to_string(i) + " >= chi_" + std::to_string(i + 1), chi[i], chi[i + 1]));
    r.conditions.push_back(at_least("2*pi_0 >= Pi_1", 2.0 * p0, hub_sum));
    if (n >= 2) r.conditions.push_back(at_least("Pi_1 >= 2*pi_0*chi_2", hub_sum, 2.0 * p0 * chi[2]));
    r.conditions.push_back(at_least("Pi_1 >= 2*max(pi_1,a)", hub_sum, 2.0 * heaviest));
    if (conditions_fail(r)) return r;

    for (int a = 0; a < m; ++a) set_edge(r, 0, at(1, a), 2.0 * p0 * pi[at(1, a)] / (2.0 * p0 + hub_sum));
    for (int i = 2; i <= n; ++i)
        for (int a = 0; a < m; ++a) set_edge(r, at(i - 1, a), at(i, a), harmonic(pi[at(i - 1, a)], pi[at(i, a)]));
    const double beta = hub_sum / (2.0 * p0 + hub_sum);
    if (n == 1) r.formula_slem = beta;
    if (n == 2)
        r.formula_slem = 0.5 * (beta + std::sqrt(beta * beta + 8.0 * p0 * chi[2] / ((1.0 + chi[2]) * (2.0 * p0 + hub_sum))));
    finish(r);
    return r;
}

ClosedFormResult solve_ccs_star(int core, int depth, const Vec& depth_pi) {
    const int m = core, n = depth;
    if (m < 2) throw Error(Status::invalid, "CCS star needs a core of at least two vertices");
    if (n < 1 || static_cast<int>(depth_pi.size()) != n + 1) throw Error(Status::invalid, "CCS star needs n >= 1 and pi_0..pi_n");
    Vec pi(m * (n + 1));
    for (int v = 0; v < m * (n + 1); ++v) pi[v] = depth_pi[v / m];
    ClosedFormResult r = start("ccs_star", ccs_star_graph(m, n), pi);
    const Vec& p = depth_pi;

    const Condition core_cond = at_least("pi_0 >= (m-1)*pi_1", p[0], (m - 1) * p[1]);
    std::vector<Condition> path;
    for (int j = 1; j < n; ++j)
        path.push_back(at_least(idx("pi", j) + "^2 >= " + idx("pi", j - 1) + "*" + idx("pi", j + 1), p[j] * p[j], p[j - 1] * p[j + 1]));

    Vec q(n + 1, 0.0);
    if (core_cond.ok) {
        r.regime = "main";
        r.conditions = path;
        r.conditions.insert(r.conditions.begin(), core_cond);
        if (conditions_fail(r)) return r;
        q[0] = p[0] / m;
        for (int j = 1; j <= n; ++j) q[j] = harmonic(p[j], p[j - 1]);
        const double base = p[1] / (p[0] + p[1]);
        if (n == 1) r.formula_slem = std::sqrt(base);
        else if (n == 2) r.formula_slem = std::sqrt(base + p[0] * p[2] / ((p[0] + p[1]) * (p[1] + p[2])));
        else r.formula_slem = ccs_reduced_slem(ccs_reduced_chain(m, n, p, q));
    } else if (n == 2) {
        r.regime = "core_heavy";
        const double d = (m - 1) * p[0] + (4.0 * m - 2.0) * p[1];
        q[0] = p[0] * (2.0 * p[1] + p[0]) / d;
        q[1] = 2.0 * m * p[0] * p[1] / d;
        q[2] = harmonic(p[1], p[2]);
        r.formula_slem = (2.0 * (2.0 * m - 1.0) * p[1] - p[0]) / d;
    } else {
        r.conditions = {core_cond};
        conditions_fail(r);
        return r;
    }
    for (int e = 0; e < r.graph.edge_count(); ++e) {
        const auto [u, v] = r.graph.edge(e);
        r.q[e] = q[std::max(u, v) / m];
    }
    finish(r);
    return r;
}

ClosedFormResult solve_complete(const Vec& pi) {
    const int n = static_cast<int>(pi.size());
    if (n < 1) throw Error(Status::invalid, "complete graph needs at least one vertex");
    ClosedFormResult r = start("complete", complete_graph(n), pi);
    r.regime = "rank_one";
    const double total = sum(pi);
    for (int e = 0; e < r.graph.edge_count(); ++e) r.q[e] = pi[r.graph.edge(e).u] * pi[r.graph.edge(e).v] / total;
    r.formula_slem = 0.0;
    finish(r);
    return r;
}

}  // namespace fmmc
