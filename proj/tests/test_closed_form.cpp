#include <doctest.h>

#include <cmath>
#include <numeric>

#include "fmmc/closed_form.hpp"
#include "fmmc/lift.hpp"
#include "fmmc/spectral.hpp"
#include "support.hpp"

using namespace fmmc;
using namespace testing_support;

namespace {

// SLEM of the chain from weights built by a parameter map; 2 when infeasible, so grid_min avoids it.
double param_slem(const Graph& g, const Vec& pi, const Weights& q) {
    if (feasibility_violation(g, pi, q) > 1e-12) return 2.0;
    return oracle_slem(transition_matrix(g, pi, q).p);
}

// Feasible, reversible, and the reported SLEM is the spectral value.
void check_result(const ClosedFormResult& r) {
    REQUIRE_FALSE(r.refused);
    CHECK(feasibility_violation(r.graph, r.pi, r.q) <= 1e-9);
    const Chain c = transition_matrix(r.graph, r.pi, r.q);
    CHECK(validate_chain(c, r.graph).ok(1e-9));
    CHECK(std::abs(r.slem - oracle_slem(c.p)) <= 1e-9);
    if (r.formula_slem) CHECK(std::abs(*r.formula_slem - r.slem) <= 1e-8);
}

double weight(const ClosedFormResult& r, int a, int b) {
    const int e = r.graph.edge_id(a, b);
    REQUIRE(e >= 0);
    return r.q[e];
}

// Depth-2 symmetric tree SLEM as a function of the two depth weights.
double tree2_slem(const std::vector<int>& m, const Vec& dp, double q0, double q1) {
    const Graph g = symmetric_tree_graph(m);
    const auto depth = symmetric_tree_depths(m);
    Vec pi(depth.size());
    for (std::size_t v = 0; v < depth.size(); ++v) pi[v] = dp[depth[v]];
    Weights q(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) q[e] = std::min(depth[g.edge(e).u], depth[g.edge(e).v]) == 0 ? q0 : q1;
    return param_slem(g, pi, q);
}

}  // namespace

TEST_CASE("path N=2 has SLEM 0") {
    const ClosedFormResult r = solve_path({2.0, 3.0});
    check_result(r);
    CHECK(r.q[0] == doctest::Approx(6.0 / 5.0));
    CHECK(std::abs(r.slem) <= 1e-12);
}

TEST_CASE("path N=5 worked example") {
    const ClosedFormResult r = solve_path({1.9, 2.9, 3.1, 2.8, 1.7});
    check_result(r);
    CHECK(r.regime == "interior");
    CHECK(std::abs(r.slem - 0.748251) <= 1e-5);
    for (int i = 0; i < 4; ++i) CHECK(r.q[i] == doctest::Approx(r.pi[i] * r.pi[i + 1] / (r.pi[i] + r.pi[i + 1])));
}

TEST_CASE("path N=3 with (1,2,4)") {
    const ClosedFormResult r = solve_path({1.0, 2.0, 4.0});
    check_result(r);
    CHECK(r.slem == doctest::Approx(std::sqrt(4.0 / 18.0)));
}

TEST_CASE("path N=3 with an active middle constraint") {
    const ClosedFormResult r = solve_path({1.0, 1.0, 4.0});
    check_result(r);
    CHECK(r.regime == "middle_active");
    CHECK(r.q[0] == doctest::Approx(3.0 / 7.0));
    CHECK(r.q[1] == doctest::Approx(4.0 / 7.0));
    CHECK(r.q[0] + r.q[1] == doctest::Approx(1.0));
    CHECK(r.slem == doctest::Approx(5.0 / 7.0));
    const Graph g = path_graph(3);
    const double best = grid_min([&](const Vec& x) { return param_slem(g, r.pi, x); }, {0.0, 0.0}, {1.0, 1.0});
    CHECK(std::abs(best - 5.0 / 7.0) <= 1e-4);
}

TEST_CASE("path N=3 regimes partition and match a grid oracle") {
    std::mt19937_64 rng(1);
    const Graph g = path_graph(3);
    for (int t = 0; t < 12; ++t) {
        const Vec pi = random_pi(rng, 3, 0.3, 4.0);
        const ClosedFormResult r = solve_path(pi);
        check_result(r);
        CHECK(r.regime == (pi[1] * pi[1] >= pi[0] * pi[2] ? "interior" : "middle_active"));
        const double best = grid_min([&](const Vec& x) { return param_slem(g, pi, x); }, {0.0, 0.0},
                                     {std::min(pi[0], pi[1]), std::min(pi[1], pi[2])});
        CHECK(r.slem <= best + 1e-6);
        CHECK(r.slem >= best - 1e-3);
    }
}

TEST_CASE("path N>=4 refuses outside the interior regime") {
    const ClosedFormResult r = solve_path({1.0, 0.5, 1.0, 1.0});
    CHECK(r.refused);
    CHECK(r.reason.find("pi_2^2 >= pi_1*pi_3") != std::string::npos);
    REQUIRE_FALSE(r.conditions.empty());
    CHECK_FALSE(r.conditions[0].ok);
    CHECK(r.conditions[0].margin < 0.0);
    CHECK(r.graph.size() == 4);
}

TEST_CASE("path conditions at the boundary are accepted") {
    const ClosedFormResult r = solve_path({1.0, 2.0, 4.0, 8.0});
    check_result(r);
}

TEST_CASE("star worked example") {
    const ClosedFormResult r = solve_star(4.9, {2.2, 2.5, 2.1, 1.9});
    check_result(r);
    CHECK(r.regime == "hub_slack");
    CHECK(std::abs(r.slem - 8.7 / 18.5) <= 1e-9);
    CHECK(std::abs(r.slem - 0.47027) <= 1e-5);
}

TEST_CASE("uniform star with m=3 has SLEM 2/3") {
    const ClosedFormResult r = solve_star(1.0, {1.0, 1.0, 1.0});
    check_result(r);
    CHECK(r.regime == "hub_active");
    CHECK(r.slem == doctest::Approx(2.0 / 3.0));
    const double best = grid_min([&](const Vec& x) { return param_slem(r.graph, r.pi, Weights(3, x[0])); }, {0.0}, {1.0 / 3.0});
    CHECK(std::abs(best - 2.0 / 3.0) <= 1e-6);
}

TEST_CASE("star with a heavy center") {
    const ClosedFormResult r = solve_star(100.0, {1.0, 1.0, 1.0});
    check_result(r);
    CHECK(r.slem == doctest::Approx(3.0 / 203.0));
    const double best = grid_min([&](const Vec& x) { return param_slem(r.graph, r.pi, Weights(3, x[0])); }, {0.0}, {1.0});
    CHECK(std::abs(best - 3.0 / 203.0) <= 1e-6);
}

TEST_CASE("star leaf-to-center probabilities are equal") {
    const ClosedFormResult r = solve_star(2.0, {1.0, 1.5, 2.5, 2.0});
    check_result(r);
    const Chain c = transition_matrix(r.graph, r.pi, r.q);
    for (int i = 2; i <= 4; ++i) CHECK(c.p(i, 0) == doctest::Approx(c.p(1, 0)));
}

TEST_CASE("star regimes partition") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 40; ++t) {
        const int m = 3 + t % 4;
        Vec leaves = random_pi(rng, m, 1.0, 2.0);
        const double center = std::uniform_real_distribution<double>(0.5, 10.0)(rng);
        const ClosedFormResult r = solve_star(center, leaves);
        check_result(r);
        const double total = std::accumulate(leaves.begin(), leaves.end(), 0.0);
        CHECK(r.regime == (total <= 2.0 * center ? "hub_slack" : "hub_active"));
    }
}

TEST_CASE("star with a dominant leaf refuses") {
    const ClosedFormResult r = solve_star(1.0, {10.0, 1.0, 1.0});
    CHECK(r.refused);
}

TEST_CASE("star with two leaves is the 3-path") {
    const ClosedFormResult s = solve_star(2.0, {1.0, 3.0});
    const ClosedFormResult p = solve_path({1.0, 2.0, 3.0});
    check_result(s);
    CHECK(s.slem == doctest::Approx(p.slem));
    CHECK(weight(s, 0, 1) == doctest::Approx(p.q[0]));
    CHECK(weight(s, 0, 2) == doctest::Approx(p.q[1]));
}

TEST_CASE("palm from the composite example") {
    const ClosedFormResult r = solve_palm(4, 2, {0.8, 0.9, 1.0, 1.1, 7.0, 6.0, 1.0});
    check_result(r);
    CHECK(weight(r, 0, 4) == doctest::Approx(5.6 / 10.8));
    CHECK(weight(r, 1, 4) == doctest::Approx(6.3 / 10.8));
    CHECK(std::abs(weight(r, 0, 4) - 0.518532) <= 1e-4);
    CHECK(std::abs(weight(r, 1, 4) - 0.583355) <= 1e-4);
    CHECK(weight(r, 4, 5) == doctest::Approx(42.0 / 13.0));
}

TEST_CASE("palm with one leaf is a path") {
    const Vec pi{1.0, 3.0, 3.0, 1.0};
    const ClosedFormResult r = solve_palm(1, 2, pi);
    const ClosedFormResult p = solve_path(pi);
    check_result(r);
    check_result(p);
    for (int i = 0; i < 3; ++i) CHECK(weight(r, i, i + 1) == doctest::Approx(p.q[i]));
    CHECK(r.slem == doctest::Approx(p.slem));
}

TEST_CASE("palm refuses when the leaves outweigh the first path vertex") {
    const ClosedFormResult r = solve_palm(3, 2, {1.0, 1.0, 1.0, 5.0, 2.0, 1.0});
    CHECK(r.refused);
    CHECK(r.reason.find("pi_1 >= Sum(leaves)") != std::string::npos);
}

TEST_CASE("semi-complete from the composite example") {
    // Free end 32, then 31, core 28-30, then 27 and 26.
    const ClosedFormResult r = solve_semi_complete(2, 2, 3, {3.2, 31.0, 11.2, 11.6, 12.0, 27.0, 2.6});
    check_result(r);
    CHECK(weight(r, 5, 2) == doctest::Approx(27.0 * 11.2 / (34.8 + 27.0)));
    CHECK(std::abs(weight(r, 5, 2) - 4.893188) <= 1e-3);
    CHECK(std::abs(weight(r, 1, 2) - 5.276578) <= 1e-3);
    CHECK(std::abs(weight(r, 1, 4) - 5.653494) <= 1e-3);
    CHECK(std::abs(weight(r, 2, 3) - 0.343425) <= 1e-3);
    // Intra-core weights follow the printed formula.
    const double core = 34.8, a = 31.0, b = 27.0;
    const double intra = 11.2 * 11.6 * (core * core - a * b) / (core * (core + a) * (core + b));
    CHECK(weight(r, 2, 3) == doctest::Approx(intra).epsilon(1e-12));
}

TEST_CASE("semi-complete with a single core vertex is a path") {
    const Vec pi{1.0, 2.0, 3.0, 2.5, 1.0};
    const ClosedFormResult r = solve_semi_complete(2, 2, 1, pi);
    const ClosedFormResult p = solve_path(pi);
    check_result(r);
    for (int i = 0; i < 4; ++i) CHECK(weight(r, i, i + 1) == doctest::Approx(p.q[i]));
}

TEST_CASE("semi-complete core weight vanishes on the boundary") {
    const ClosedFormResult r = solve_semi_complete(2, 2, 2, {1.0, 2.0, 1.0, 1.0, 2.0, 1.0});
    check_result(r);
    CHECK(std::abs(weight(r, 2, 3)) <= 1e-15);
}

TEST_CASE("ladder examples") {
    const ClosedFormResult paw = solve_ecl({1, 2, 1}, {1.9, 3.1, 2.8, 1.7});
    check_result(paw);
    CHECK(std::abs(paw.slem - 0.233425) <= 1e-5);
    const ClosedFormResult bar = solve_barbell(3, 4, 1, {1.9, 1.8, 6.4, 8.1, 2.9, 3.2, 2.1});
    check_result(bar);
    CHECK(std::abs(bar.slem - 0.653212) <= 1e-5);
}

TEST_CASE("lollipop from the composite example") {
    // Hub, path vertex 12, junction 13, clique 14-17.
    const ClosedFormResult r = solve_lollipop(5, 2, {1.0, 12.0, 13.0, 1.4, 1.5, 1.6, 1.7});
    check_result(r);
    CHECK(weight(r, 3, 4) == doctest::Approx(1.4 * 1.5 / (6.2 + 13.0)));
    CHECK(std::abs(weight(r, 3, 4) - 0.109411) <= 1e-3);
    CHECK(std::abs(weight(r, 1, 2) - 6.240006) <= 1e-3);
    CHECK(std::abs(weight(r, 2, 3) - 0.947944) <= 1e-3);
}

TEST_CASE("lollipop worked example through the ladder form") {
    const ClosedFormResult r = solve_lollipop(3, 2, {0.9, 3.2, 6.5, 3.1, 2.9});
    check_result(r);
    CHECK(std::abs(r.slem - 0.552672) <= 1e-5);
}

TEST_CASE("ladder weights follow the cross and end-fiber formulas") {
    std::mt19937_64 rng(3);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 30; ++t) {
        const int n = 2 + t % 4;
        std::vector<int> fibers(n);
        for (int& m : fibers) m = std::uniform_int_distribution<int>(1, 3)(rng);
        const LiftSpec spec{path_graph(n), fibers};
        const Vec pi = random_pi(rng, lifted_size(spec));
        const ClosedFormResult r = solve_ecl(fibers, pi);
        if (r.refused || r.regime != "interior") continue;
        ++checked;
        check_result(r);
        const Vec s = aggregate_distribution(spec, pi);
        const auto off = fiber_offsets(spec);
        for (int i = 0; i + 1 < n; ++i)
            for (int x = off[i]; x < off[i + 1]; ++x)
                for (int y = off[i + 1]; y < off[i + 2]; ++y) CHECK(weight(r, x, y) == doctest::Approx(pi[x] * pi[y] / (s[i] + s[i + 1])));
        for (int x = off[0]; x < off[1]; ++x)
            for (int y = x + 1; y < off[1]; ++y) CHECK(weight(r, x, y) == doctest::Approx(pi[x] * pi[y] / (s[0] + s[1])));
        // SLEM equals the base path on the fiber sums.
        CHECK(std::abs(r.slem - solve_path(s).slem) <= 1e-10);
    }
    CHECK(checked == 30);
}

TEST_CASE("ladder families agree with the lifted base-path solution") {
    struct Case {
        ClosedFormResult r;
        std::vector<int> fibers;
    };
    const Case cases[] = {
        {solve_ecl({1, 2, 1}, {1.9, 3.1, 2.8, 1.7}), {1, 2, 1}},
        {solve_barbell(3, 4, 1, {1.9, 1.8, 6.4, 8.1, 2.9, 3.2, 2.1}), {2, 1, 1, 3}},
        {solve_lollipop(3, 2, {0.9, 3.2, 6.5, 3.1, 2.9}), {1, 1, 1, 2}},
    };
    for (const auto& [r, fibers] : cases) {
        check_result(r);
        const LiftSpec spec{path_graph(static_cast<int>(fibers.size())), fibers};
        const Vec s = aggregate_distribution(spec, r.pi);
        const Weights lq = lift_weights(spec, solve_path(s).q, s, r.pi);
        const Graph g = build_lift(spec);
        for (const Edge& e : g.edges()) CHECK(std::abs(weight(r, e.u, e.v) - lq[g.edge_id(e.u, e.v)]) <= 1e-10);
    }
}

TEST_CASE("bistar worked example") {
    const ClosedFormResult r = solve_bistar(3, 4, {1.8, 2.3, 1.9, 7.8, 8.3, 2.1, 1.8, 1.7, 2.6});
    check_result(r);
    CHECK(std::abs(r.slem - 0.681843) <= 1e-5);
    const Vec ev = slem_of_chain(transition_matrix(r.graph, r.pi, r.q)).eigenvalues;
    bool plus = false, minus = false;
    for (double x : ev) {
        plus = plus || std::abs(x - r.slem) <= 1e-9;
        minus = minus || std::abs(x + r.slem) <= 1e-9;
    }
    CHECK(plus);
    CHECK(minus);
}

TEST_CASE("symmetric bistar") {
    const ClosedFormResult r = solve_bistar(2, 2, {1.0, 2.0, 5.0, 5.0, 1.5, 1.5});
    check_result(r);
    CHECK(r.slem == doctest::Approx(std::sqrt(3.0 / 8.0)));
}

TEST_CASE("bistar aggregates onto the 4-path") {
    const Vec pi{1.8, 2.3, 1.9, 7.8, 8.3, 2.1, 1.8, 1.7, 2.6};
    const ClosedFormResult r = solve_bistar(3, 4, pi);
    check_result(r);
    const double lsum = 1.8 + 2.3 + 1.9, rsum = 2.1 + 1.8 + 1.7 + 2.6;
    const Vec base{lsum, 7.8, 8.3, rsum};
    double left = 0.0, right = 0.0;
    for (int i = 0; i < 3; ++i) left += weight(r, i, 3);
    for (int i = 5; i < 9; ++i) right += weight(r, 4, i);
    CHECK(left == doctest::Approx(lsum * 7.8 / (lsum + 7.8)));
    CHECK(right == doctest::Approx(rsum * 8.3 / (rsum + 8.3)));
    const Vec base_q{left, weight(r, 3, 4), right};
    CHECK(std::abs(path_slem(base, base_q) - r.slem) <= 1e-10);
}

TEST_CASE("bistar refuses when a center is too light") {
    const ClosedFormResult r = solve_bistar(2, 2, {3.0, 3.0, 1.0, 5.0, 1.0, 1.0});
    CHECK(r.refused);
}

TEST_CASE("symmetric tree worked example") {
    const ClosedFormResult r = solve_symmetric_tree({2, 1, 3}, {6.1, 5.5, 3.4, 0.3});
    check_result(r);
    CHECK(r.regime == "main");
    CHECK(std::abs(r.slem - 0.793041) <= 1e-5);
}

TEST_CASE("symmetric star worked example") {
    const ClosedFormResult r = solve_symmetric_star(3, 2, {5.3, 3.1, 1.9});
    check_result(r);
    CHECK(std::abs(r.slem - 0.740632) <= 1e-5);
}

TEST_CASE("symmetric star of depth 1") {
    const ClosedFormResult r = solve_symmetric_star(4, 1, {3.0, 1.0});
    check_result(r);
    CHECK(r.slem == doctest::Approx(4.0 / (4.0 + 6.0)));
}

TEST_CASE("depth-2 tree cases match a grid oracle") {
    struct Case {
        Vec dp;
        const char* regime;
    };
    const std::vector<int> m{2, 1};
    const Case cases[] = {{{5.0, 2.0, 0.5}, "case_1"}, {{1.0, 2.0, 1.0}, "case_2"}, {{5.0, 2.0, 5.0}, "case_3"}, {{1.0, 2.0, 5.0}, "case_4"}};
    for (const auto& [dp, regime] : cases) {
        const ClosedFormResult r = solve_symmetric_tree(m, dp);
        check_result(r);
        CHECK(r.regime == regime);
        const double best = grid_min([&](const Vec& x) { return tree2_slem(m, dp, x[0], x[1]); }, {0.0, 0.0},
                                     {dp[0] / m[0], std::min(dp[2], dp[1] / m[1])});
        CHECK(r.slem <= best + 1e-6);
        CHECK(r.slem >= best - 1e-4);
    }
    const ClosedFormResult c2 = solve_symmetric_tree(m, {1.0, 2.0, 1.0});
    CHECK(c2.q[0] == 0.5);
}

TEST_CASE("depth-2 tree regimes partition") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 60; ++t) {
        const std::vector<int> m{2 + t % 3, 1 + t % 2};
        const Vec dp = random_pi(rng, 3, 0.2, 5.0);
        const ClosedFormResult r = solve_symmetric_tree(m, dp);
        check_result(r);
        const bool c1 = 2.0 * dp[0] >= m[0] * dp[1];
        const bool c2 = m[0] * dp[1] * dp[1] >= 2.0 * m[1] * dp[0] * dp[2];
        const char* expect = c1 && c2 ? "case_1" : (!c1 && c2 ? "case_2" : (c1 ? "case_3" : "case_4"));
        CHECK(r.regime == expect);
    }
}

TEST_CASE("depth-3 tree with every constraint active") {
    const std::vector<int> m{2, 1, 1};
    const Vec dp{1.0, 2.0, 5.0, 13.0};
    const ClosedFormResult r = solve_symmetric_tree(m, dp);
    check_result(r);
    CHECK(r.regime == "all_active");
    const Graph g = symmetric_tree_graph(m);
    const auto depth = symmetric_tree_depths(m);
    Vec pi(depth.size());
    for (std::size_t v = 0; v < depth.size(); ++v) pi[v] = dp[depth[v]];
    auto f = [&](const Vec& x) {
        Weights q(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) q[e] = x[std::min(depth[g.edge(e).u], depth[g.edge(e).v])];
        return param_slem(g, pi, q);
    };
    const double best = grid_min(f, {0.0, 0.0, 0.0}, {0.5, 2.0, 5.0}, 21, 10);
    CHECK(r.slem <= best + 1e-6);
    CHECK(r.slem >= best - 1e-3);
}

TEST_CASE("depth-3 tree outside the covered regimes refuses") {
    const ClosedFormResult r = solve_symmetric_tree({2, 1, 1}, {1.0, 2.0, 2.0, 2.0});
    CHECK(r.refused);
}

TEST_CASE("semi-symmetric star worked example") {
    const ClosedFormResult r = solve_semi_symmetric_star(3, 2, {4.9, 3.3, 3.6, 2.7, 2.2, 2.4, 1.8});
    check_result(r);
    CHECK(std::abs(r.slem - 0.76053) <= 1e-5);
    // Depth-2 vertices step back towards the center with probability 1/(1+chi).
    const Chain c = transition_matrix(r.graph, r.pi, r.q);
    for (int a = 0; a < 3; ++a) CHECK(c.p(4 + a, 1 + a) == doctest::Approx(1.0 / (1.0 + 2.0 / 3.0)));
}

TEST_CASE("semi-symmetric star with identical branches is the symmetric star") {
    const ClosedFormResult a = solve_semi_symmetric_star(3, 2, {5.3, 3.1, 3.1, 3.1, 1.9, 1.9, 1.9});
    const ClosedFormResult b = solve_symmetric_star(3, 2, {5.3, 3.1, 1.9});
    check_result(a);
    check_result(b);
    CHECK(a.slem == doctest::Approx(b.slem).epsilon(1e-10));
}

TEST_CASE("semi-symmetric star refuses varying ratios") {
    const ClosedFormResult r = solve_semi_symmetric_star(3, 2, {4.9, 3.3, 3.6, 2.7, 2.2, 2.4, 1.0});
    CHECK(r.refused);
    CHECK(r.reason.find("not constant") != std::string::npos);
}

TEST_CASE("CCS star worked example") {
    const ClosedFormResult r = solve_ccs_star(3, 2, {12.8, 4.7, 1.1});
    check_result(r);
    CHECK(std::abs(r.slem - 0.638193) <= 1e-5);
}

TEST_CASE("CCS star of depth 1") {
    const ClosedFormResult r = solve_ccs_star(4, 1, {5.0, 1.0});
    check_result(r);
    CHECK(r.slem == doctest::Approx(std::sqrt(1.0 / 6.0)));
}

TEST_CASE("CCS star preconditions") {
    CHECK_THROWS_AS(solve_ccs_star(1, 2, {1.0, 1.0, 1.0}), Error);
    CHECK(solve_ccs_star(3, 2, {1.0, 1.0, 0.5}).refused);
}

TEST_CASE("complete graph") {
    const ClosedFormResult two = solve_complete({1.0, 3.0});
    check_result(two);
    const Chain c2 = transition_matrix(two.graph, two.pi, two.q);
    CHECK(c2.p(0, 0) == doctest::Approx(0.25));
    CHECK(c2.p(0, 1) == doctest::Approx(0.75));
    const ClosedFormResult four = solve_complete({1.0, 1.0, 1.0, 1.0});
    const Chain c4 = transition_matrix(four.graph, four.pi, four.q);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(c4.p(i, j) == doctest::Approx(0.25));
    const ClosedFormResult r = solve_complete({1.0, 2.0, 3.0});
    check_result(r);
    CHECK(std::abs(eig_symmetric(symmetrized(transition_matrix(r.graph, r.pi, r.q))).values[1]) <= 1e-12);
}

TEST_CASE("malformed parameters throw") {
    CHECK_THROWS_AS(solve_path({1.0}), Error);
    CHECK_THROWS_AS(solve_palm(0, 2, {1.0, 1.0, 1.0}), Error);
    CHECK_THROWS_AS(solve_palm(2, 2, {1.0, 1.0}), Error);
    CHECK_THROWS_AS(solve_bistar(1, 1, {1.0, 1.0}), Error);
    CHECK_THROWS_AS(solve_symmetric_tree({1, 2}, {1.0, 1.0, 1.0}), Error);
    CHECK_THROWS_AS(solve_semi_symmetric_star(3, 2, {1.0}), Error);
    CHECK_THROWS_AS(solve_ecl({1, 2}, {1.0, 1.0}), Error);
}
