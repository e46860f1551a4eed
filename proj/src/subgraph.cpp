#include "fmmc/subgraph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace fmmc {

namespace {

const char* const kFamilies[] = {"path", "palm", "lollipop", "ecl", "semi_complete"};

std::string label(int s, const AttachedSubgraph& sub) { return "subgraph " + std::to_string(s) + " (" + sub.family + ")"; }

Condition at_least(std::string text, double lhs, double rhs) {
    const double slack = kConditionSlack * std::max(std::abs(lhs), std::abs(rhs));
    return {std::move(text), lhs >= rhs - slack, lhs - rhs};
}

// BFS layers of the subgraph, layer 0 being the members adjacent to the attachment vertex.
std::vector<std::vector<int>> layers_from_attach(const Graph& g, const AttachedSubgraph& sub, const std::string& name) {
    std::vector<int> dist(g.size(), -2);
    for (int v : sub.vertices) dist[v] = -1;
    std::vector<std::vector<int>> layers(1);
    for (int v : g.neighbors(sub.attach))
        if (dist[v] == -1) {
            dist[v] = 0;
            layers[0].push_back(v);
        }
    if (layers[0].empty()) throw Error(Status::invalid, name + " is not adjacent to its attachment vertex");
    std::size_t seen = layers[0].size();
    while (true) {
        std::vector<int> next;
        for (int u : layers.back())
            for (int v : g.neighbors(u))
                if (dist[v] == -1) {
                    dist[v] = static_cast<int>(layers.size());
                    next.push_back(v);
                }
        if (next.empty()) break;
        seen += next.size();
        std::sort(next.begin(), next.end());
        layers.push_back(std::move(next));
    }
    std::sort(layers[0].begin(), layers[0].end());
    if (seen != sub.vertices.size()) throw Error(Status::invalid, name + " is not connected");
    return layers;
}

int induced_edges(const Graph& g, const std::vector<char>& member) {
    int count = 0;
    for (const Edge& e : g.edges())
        if (member[e.u] && member[e.v]) ++count;
    return count;
}

bool is_chain_family(const std::string& f) { return f == "path" || f == "lollipop" || f == "ecl" || f == "semi_complete"; }

// Structure of one declaration: fibers from the free end (chain families) or
// {leaves, center, path...} (palm). Throws on any mismatch.
std::vector<std::vector<int>> structure(const Graph& g, const AttachedSubgraph& sub, int s) {
    const std::string name = label(s, sub);
    std::vector<char> member(g.size(), 0);
    for (int v : sub.vertices) member[v] = 1;
    for (int v : sub.vertices)
        for (int w : g.neighbors(v))
            if (!member[w] && w != sub.attach)
                throw Error(Status::invalid, name + " has an edge leaving it other than through the attachment vertex");

    auto layers = layers_from_attach(g, sub, name);
    const int edges = induced_edges(g, member);
    const int k = static_cast<int>(layers.size());

    if (sub.family == "palm") {
        if (k < 3) throw Error(Status::invalid, name + " needs a path vertex, a center and leaves");
        for (int i = 0; i + 1 < k; ++i)
            if (layers[i].size() != 1) throw Error(Status::invalid, name + " path part is not a simple path");
        const int leaves = static_cast<int>(layers.back().size());
        if (edges != (k - 2) + leaves) throw Error(Status::invalid, name + " does not induce a palm");
        std::vector<std::vector<int>> out{layers.back()};
        for (int i = k - 2; i >= 0; --i) out.push_back(layers[i]);
        return out;
    }

    // Fiber chain: cliques, consecutive fibers completely joined, nothing else.
    long expected = 0;
    for (int i = 0; i < k; ++i) {
        const long m = static_cast<long>(layers[i].size());
        expected += m * (m - 1) / 2;
        if (i + 1 < k) expected += m * static_cast<long>(layers[i + 1].size());
    }
    if (edges != expected) throw Error(Status::invalid, name + " is not a chain of cliques joined completely");
    std::reverse(layers.begin(), layers.end());

    auto sizes_ok = [&]() {
        if (sub.family == "ecl") return k >= 2;
        if (sub.family == "path")
            return k >= 2 && std::all_of(layers.begin(), layers.end(), [](const auto& f) { return f.size() == 1; });
        if (sub.family == "lollipop") {
            if (k < 2 || layers[0].size() < 2) return false;
            return std::all_of(layers.begin() + 1, layers.end(), [](const auto& f) { return f.size() == 1; });
        }
        // semi_complete: one interior fiber carries the core, all others are single vertices.
        int big = 0;
        for (int i = 0; i < k; ++i)
            if (layers[i].size() > 1) {
                if (i == 0 || i == k - 1) return false;
                ++big;
            }
        return k >= 3 && big == 1;
    };
    if (!sizes_ok()) throw Error(Status::invalid, name + " fiber sizes do not match the family");
    return layers;
}

double mass(const Vec& pi, const std::vector<int>& f) {
    double s = 0.0;
    for (int v : f) s += pi[v];
    return s;
}

void fix(const Graph& g, LocalAssignment& out, SubgraphReport& rep, int a, int b, double w) {
    const int e = g.edge_id(a, b);
    if (e < 0) throw Error(Status::internal, "missing host edge in subgraph assignment");
    out.fixed.mask[e] = 1;
    out.fixed.values[e] = w;
    rep.fixed_edges.push_back(e);
}

void assign_chain(const Graph& g, const Vec& pi, const std::vector<std::vector<int>>& fibers, LocalAssignment& out,
                  SubgraphReport& rep) {
    const int n = static_cast<int>(fibers.size());
    Vec s(n);
    for (int i = 0; i < n; ++i) s[i] = mass(pi, fibers[i]);
    // Conditions whose three fibers lie inside the subgraph.
    for (int i = 1; i + 1 < n; ++i)
        rep.conditions.push_back(at_least("S_" + std::to_string(i + 1) + "^2 >= S_" + std::to_string(i) + "*S_" +
                                              std::to_string(i + 2),
                                          s[i] * s[i], s[i - 1] * s[i + 1]));
    for (const auto& c : rep.conditions)
        if (!c.ok) {
            rep.reason = "condition failed: " + c.text;
            return;
        }
    for (int i = 0; i + 1 < n; ++i) {
        for (int u : fibers[i])
            for (int v : fibers[i + 1]) fix(g, out, rep, u, v, pi[u] * pi[v] / (s[i] + s[i + 1]));
        // Intra-fiber weights share the fiber's slack; the last fiber's slack depends on the attachment.
        const double left = i > 0 ? s[i - 1] * s[i] / (s[i - 1] + s[i]) : 0.0;
        const double slack = std::max(0.0, s[i] - left - s[i] * s[i + 1] / (s[i] + s[i + 1]));
        for (std::size_t a = 0; a < fibers[i].size(); ++a)
            for (std::size_t b = a + 1; b < fibers[i].size(); ++b)
                fix(g, out, rep, fibers[i][a], fibers[i][b], pi[fibers[i][a]] * pi[fibers[i][b]] * slack / (s[i] * s[i]));
    }
    rep.assigned = true;
}

void assign_palm(const Graph& g, const Vec& pi, const std::vector<std::vector<int>>& layers, LocalAssignment& out,
                 SubgraphReport& rep) {
    const auto& leaves = layers[0];
    std::vector<int> path;  // center first, then towards the attachment
    for (std::size_t i = 1; i < layers.size(); ++i) path.push_back(layers[i][0]);
    const double leaf_sum = mass(pi, leaves);
    auto p = [&](std::size_t k) { return pi[path[k]]; };
    rep.conditions.push_back(at_least("pi_0^2 >= pi_1*Sum(leaves)", p(0) * p(0), p(1) * leaf_sum));
    rep.conditions.push_back(at_least("pi_1 >= Sum(leaves)", p(1), leaf_sum));
    for (std::size_t k = 1; k + 1 < path.size(); ++k)
        rep.conditions.push_back(at_least("pi_" + std::to_string(k) + "^2 >= pi_" + std::to_string(k - 1) + "*pi_" +
                                              std::to_string(k + 1),
                                          p(k) * p(k), p(k - 1) * p(k + 1)));
    for (const auto& c : rep.conditions)
        if (!c.ok) {
            rep.reason = "condition failed: " + c.text;
            return;
        }
    for (int v : leaves) fix(g, out, rep, v, path[0], p(0) * pi[v] / (p(0) + leaf_sum));
    for (std::size_t k = 0; k + 1 < path.size(); ++k) fix(g, out, rep, path[k], path[k + 1], p(k) * p(k + 1) / (p(k) + p(k + 1)));
    rep.assigned = true;
}

}  // namespace

void validate_subgraphs(const Graph& host, const std::vector<AttachedSubgraph>& subs) {
    std::vector<int> owner(host.size(), -1);
    for (std::size_t s = 0; s < subs.size(); ++s) {
        const auto& sub = subs[s];
        const std::string name = label(static_cast<int>(s), sub);
        if (std::find(std::begin(kFamilies), std::end(kFamilies), sub.family) == std::end(kFamilies))
            throw Error(Status::invalid, name + ": unknown family");
        if (sub.vertices.empty()) throw Error(Status::invalid, name + " has no vertices");
        if (sub.attach < 0 || sub.attach >= host.size()) throw Error(Status::invalid, name + " attachment vertex out of range");
        for (int v : sub.vertices) {
            if (v < 0 || v >= host.size()) throw Error(Status::invalid, name + " vertex out of range");
            if (v == sub.attach) throw Error(Status::invalid, name + " contains its attachment vertex");
            if (owner[v] == static_cast<int>(s)) throw Error(Status::invalid, name + " lists a vertex twice");
            if (owner[v] >= 0) throw Error(Status::invalid, name + " overlaps subgraph " + std::to_string(owner[v]));
            owner[v] = static_cast<int>(s);
        }
        structure(host, sub, static_cast<int>(s));
    }
}

LocalAssignment assign_local(const Graph& host, const Vec& pi, const std::vector<AttachedSubgraph>& subs) {
    check_distribution(host, pi);
    validate_subgraphs(host, subs);
    LocalAssignment out;
    out.fixed.mask.assign(host.edge_count(), 0);
    out.fixed.values.assign(host.edge_count(), 0.0);
    for (std::size_t s = 0; s < subs.size(); ++s) {
        SubgraphReport rep;
        rep.family = subs[s].family;
        rep.layers = structure(host, subs[s], static_cast<int>(s));
        if (is_chain_family(rep.family))
            assign_chain(host, pi, rep.layers, out, rep);
        else
            assign_palm(host, pi, rep.layers, out, rep);
        out.reports.push_back(std::move(rep));
    }
    if (subs.empty()) out.fixed = {};
    return out;
}

CompositeResult solve_composite(const Graph& host, const Vec& pi, const std::vector<AttachedSubgraph>& subs,
                                const SolverOptions& opts, const std::optional<SolverOptions>& reference_opts) {
    CompositeResult r;
    r.local = assign_local(host, pi, subs);
    r.result = solve(host, pi, opts, r.local.fixed);
    if (reference_opts) {
        r.reference = solve(host, pi, *reference_opts);
        r.locality_ok = r.result.slem <= r.reference->slem + kLocalityTol;
    }
    return r;
}

}  // namespace fmmc
