#include "fmmc/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>

#include "fmmc/spectral.hpp"

namespace fmmc {

namespace {

Instance descriptor_instance(std::string id, std::string family, Json params, Vec pi) {
    Instance inst;
    inst.id = std::move(id);
    inst.descriptor = Descriptor{std::move(family), std::move(params), pi};
    inst.pi = std::move(pi);
    return inst;
}

// Closed-form optimum and Metropolis SLEM against the published pair.
std::vector<Check> pair_checks(const Instance& inst, Method method, double optimal, double optimal_tol, double metropolis,
                               std::uint64_t seed) {
    RunOptions o;
    o.method = method;
    o.solver.seed = seed;
    const Comparison c = compare_instance(inst, o);
    return {{"optimal slem (" + c.optimal.method + ")", c.optimal.slem, optimal, optimal_tol},
            {"metropolis slem", c.metropolis.slem, metropolis, 1e-5}};
}

CorpusItem pair_item(std::string id, std::string title, std::vector<std::string> families, std::string family, Json params,
                     Vec pi, double optimal, double metropolis, Method method = Method::closed, double tol = 1e-5) {
    Instance inst = descriptor_instance(id, std::move(family), std::move(params), std::move(pi));
    return {std::move(id), std::move(title), std::move(families),
            [=](std::uint64_t seed) { return pair_checks(inst, method, optimal, tol, metropolis, seed); }};
}

std::vector<Check> composite_checks(std::uint64_t seed) {
    const Instance inst = composite_example();
    SolverOptions o;
    o.seed = seed;
    const CompositeResult c = solve_composite(inst.graph, inst.pi, inst.subgraphs, o, std::nullopt);
    std::vector<Check> out{{"composite slem", c.result.slem, 0.99748869, 5e-4}};
    const auto& quoted = composite_example_weights();
    // Anchors named with the examples; the full table is compared by the acceptance suite.
    const std::pair<std::pair<int, int>, double> anchors[] = {
        {{2, 3}, 1e-3}, {{6, 7}, 1e-4}, {{7, 8}, 1e-4}, {{7, 9}, 1e-4}, {{14, 15}, 1e-3}, {{27, 28}, 1e-3}};
    for (const auto& [ij, tol] : anchors) {
        const int e = inst.graph.edge_id(ij.first - 1, ij.second - 1);
        out.push_back({"q_" + std::to_string(ij.first) + "," + std::to_string(ij.second), c.result.q[e], quoted.at(ij), tol});
    }
    return out;
}

std::vector<CorpusItem> build_corpus() {
    std::vector<CorpusItem> items;
    items.push_back(pair_item("01-path", "path N=5", {"path"}, "path", Json::object(), {1.9, 2.9, 3.1, 2.8, 1.7}, 0.748251,
                              0.861111));
    items.push_back(pair_item("02-paw", "paw (ladder 1-2-1)", {"ecl", "paw"}, "ecl", {{"fibers", {1, 2, 1}}},
                              {1.9, 3.1, 2.8, 1.7}, 0.233425, 0.608497));
    items.push_back(pair_item("03-barbell", "extended barbell m1=3 m2=4 n=1", {"ecl", "barbell"}, "barbell",
                              {{"clique1", 3}, {"clique2", 4}, {"bridge", 1}}, {1.9, 1.8, 6.4, 8.1, 2.9, 3.2, 2.1}, 0.653212,
                              0.780862));
    items.push_back(pair_item("04-lollipop", "lollipop m=3 n=2 (numeric)", {"ecl", "lollipop"}, "lollipop",
                              {{"clique", 3}, {"path", 2}}, {0.9, 3.2, 6.5, 3.1, 2.9}, 0.552672, 0.610267, Method::numeric,
                              2e-3));
    items.push_back(pair_item("05-star", "star m=4", {"star"}, "star", Json::object(), {4.9, 2.2, 2.5, 2.1, 1.9}, 0.47027,
                              0.571792));
    items.push_back(pair_item("06-semi-symmetric-star", "semi-symmetric star m=3 n=2", {"semi_symmetric_star", "star"},
                              "semi_symmetric_star", {{"branches", 3}, {"depth", 2}}, {4.9, 3.3, 3.6, 2.7, 2.2, 2.4, 1.8},
                              0.76053, 0.836403));
    items.push_back(pair_item("07-bistar", "bistar m1=3 m2=4", {"bistar", "star"}, "bistar", {{"left", 3}, {"right", 4}},
                              {1.8, 2.3, 1.9, 7.8, 8.3, 2.1, 1.8, 1.7, 2.6}, 0.681843, 0.877593));
    items.push_back(pair_item("08-symmetric-tree", "symmetric tree (2,1,3)", {"symmetric_tree"}, "symmetric_tree",
                              {{"branching", {2, 1, 3}}}, {6.1, 5.5, 3.4, 0.3}, 0.793041, 0.865453));
    items.push_back(pair_item("09-symmetric-star", "symmetric star m=3 n=2", {"symmetric_star", "symmetric_tree", "star"},
                              "symmetric_star", {{"branches", 3}, {"depth", 2}}, {5.3, 3.1, 1.9}, 0.740632, 0.84752));
    items.push_back(pair_item("10-ccs-star", "complete-core symmetric star m=3 n=2", {"ccs_star", "star"}, "ccs_star",
                              {{"core", 3}, {"depth", 2}}, {12.8, 4.7, 1.1}, 0.638193, 0.702632));
    items.push_back({"11-composite", "32-vertex host with five attached subgraphs",
                     {"composite", "path", "palm", "lollipop", "ecl", "semi_complete"}, composite_checks});
    return items;
}

}  // namespace

double Check::delta() const { return std::abs(value - expected); }

bool CorpusOutcome::pass() const {
    if (!error.empty()) return false;
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
}

const std::vector<CorpusItem>& corpus() {
    static const std::vector<CorpusItem> items = build_corpus();
    return items;
}

std::vector<CorpusOutcome> run_corpus(const std::string& family, std::optional<double> tol, std::uint64_t seed) {
    if (tol && !(*tol >= 0.0)) throw Error(Status::invalid, "tolerance must be nonnegative");
    std::vector<const CorpusItem*> chosen;
    for (const auto& item : corpus())
        if (family.empty() || std::find(item.families.begin(), item.families.end(), family) != item.families.end())
            chosen.push_back(&item);
    if (chosen.empty()) throw Error(Status::invalid, "no corpus item matches family \"" + family + "\"");

    std::vector<std::future<CorpusOutcome>> jobs;
    for (const CorpusItem* item : chosen)
        jobs.push_back(std::async(std::launch::async, [item, tol, seed] {
            CorpusOutcome out{item->id, item->title, {}, {}};
            try {
                out.checks = item->run(seed);
                if (tol)
                    for (auto& c : out.checks) c.tol = *tol;
            } catch (const std::exception& e) {
                out.error = e.what();
            }
            return out;
        }));
    // Futures are collected in id order, so the merged result does not depend on scheduling.
    std::vector<CorpusOutcome> outcomes;
    for (auto& j : jobs) outcomes.push_back(j.get());
    return outcomes;
}

std::string corpus_report(const std::vector<CorpusOutcome>& outcomes) {
    std::ostringstream os;
    int passed = 0;
    char line[256];
    for (const auto& o : outcomes) {
        passed += o.pass();
        os << (o.pass() ? "PASS " : "FAIL ") << o.id << "  " << o.title << "\n";
        if (!o.error.empty()) os << "    error: " << o.error << "\n";
        for (const auto& c : o.checks) {
            std::snprintf(line, sizeof line, "    %-4s %-28s got %.9g expected %.9g delta %.3g tol %.3g\n",
                          c.pass() ? "ok" : "FAIL", c.name.c_str(), c.value, c.expected, c.delta(), c.tol);
            os << line;
        }
    }
    os << passed << "/" << outcomes.size() << " examples passed\n";
    return os.str();
}

Json corpus_json(const std::vector<CorpusOutcome>& outcomes) {
    Json items = Json::array();
    for (const auto& o : outcomes) {
        Json checks = Json::array();
        for (const auto& c : o.checks)
            checks.push_back({{"name", c.name},
                              {"value", round_sig(c.value)},
                              {"expected", c.expected},
                              {"delta", round_sig(c.delta())},
                              {"tol", c.tol},
                              {"pass", c.pass()}});
        Json item{{"id", o.id}, {"title", o.title}, {"pass", o.pass()}, {"checks", checks}};
        if (!o.error.empty()) item["error"] = o.error;
        items.push_back(item);
    }
    const bool all = std::all_of(outcomes.begin(), outcomes.end(), [](const CorpusOutcome& o) { return o.pass(); });
    return Json{{"items", items}, {"pass", all}};
}

Instance composite_example() {
    // Hub 1; path 2-5; palm 6 (path), 7 (center), 8-11 (leaves); lollipop 12 (path), 13-17 (clique);
    // ladder fibers {18,19}, {20,21,22}, {23}, {24,25}; semi-complete 26, 27, core {28,29,30}, 31, 32.
    const std::vector<std::pair<int, int>> edges = {
        {1, 2},   {2, 3},   {3, 4},   {4, 5},   {1, 6},   {6, 7},   {7, 8},   {7, 9},   {7, 10},  {7, 11},  {1, 12},
        {12, 13}, {13, 14}, {13, 15}, {13, 16}, {13, 17}, {14, 15}, {14, 16}, {14, 17}, {15, 16}, {15, 17}, {16, 17},
        {1, 18},  {1, 19},  {18, 19}, {18, 20}, {18, 21}, {18, 22}, {19, 20}, {19, 21}, {19, 22}, {20, 21}, {20, 22},
        {21, 22}, {20, 23}, {21, 23}, {22, 23}, {23, 24}, {23, 25}, {24, 25}, {1, 26},  {26, 27}, {27, 28}, {27, 29},
        {27, 30}, {28, 29}, {28, 30}, {29, 30}, {28, 31}, {29, 31}, {30, 31}, {31, 32}};
    std::vector<std::pair<int, int>> zero_based;
    for (const auto& [a, b] : edges) zero_based.push_back({a - 1, b - 1});
    Instance inst;
    inst.id = "11-composite";
    inst.graph = Graph(32, zero_based);
    inst.pi.resize(32);
    for (int i = 0; i < 32; ++i) inst.pi[i] = i + 1;
    const std::pair<int, double> special[] = {{8, 0.8},  {9, 0.9},  {10, 1.0},  {11, 1.1},  {14, 1.4},
                                              {15, 1.5}, {16, 1.6}, {17, 1.7},  {24, 2.4},  {25, 2.5},
                                              {26, 2.6}, {28, 11.2}, {29, 11.6}, {30, 12.0}, {32, 3.2}};
    for (const auto& [v, p] : special) inst.pi[v - 1] = p;
    auto ids = [](std::initializer_list<int> l) {
        std::vector<int> out;
        for (int v : l) out.push_back(v - 1);
        return out;
    };
    inst.subgraphs = {{"path", ids({2, 3, 4, 5}), 0},
                      {"palm", ids({6, 7, 8, 9, 10, 11}), 0},
                      {"lollipop", ids({12, 13, 14, 15, 16, 17}), 0},
                      {"ecl", ids({18, 19, 20, 21, 22, 23, 24, 25}), 0},
                      {"semi_complete", ids({26, 27, 28, 29, 30, 31, 32}), 0}};
    return inst;
}

const std::map<std::pair<int, int>, double>& composite_example_weights() {
    static const std::map<std::pair<int, int>, double> q = {
        {{1, 2}, 0.058191},   {{2, 3}, 1.2},        {{3, 4}, 1.714286},   {{4, 5}, 2.222},      {{1, 6}, 0.068084},
        {{6, 7}, 3.230788},   {{7, 8}, 0.518532},   {{7, 9}, 0.583355},   {{7, 10}, 0.740753},  {{7, 11}, 0.750025},
        {{1, 12}, 0.126473},  {{12, 13}, 6.240006}, {{13, 14}, 0.947944}, {{13, 15}, 1.015646}, {{13, 16}, 1.083346},
        {{13, 17}, 1.151045}, {{14, 15}, 0.109411}, {{14, 16}, 0.116697}, {{14, 17}, 0.123986}, {{15, 16}, 0.125025},
        {{15, 17}, 0.132831}, {{16, 17}, 0.141676}, {{1, 18}, 0.251854},  {{1, 19}, 0.266908},  {{18, 19}, 5.565850},
        {{18, 20}, 3.599990}, {{18, 21}, 3.779993}, {{18, 22}, 3.959996}, {{19, 20}, 3.799989}, {{19, 21}, 3.989992},
        {{19, 22}, 4.179995}, {{20, 21}, 2.417034}, {{20, 22}, 2.532134}, {{20, 23}, 5.348812}, {{21, 22}, 2.658744},
        {{21, 23}, 5.616256}, {{22, 23}, 5.883701}, {{23, 24}, 1.978508}, {{23, 25}, 2.060948}, {{24, 25}, 0.178161},
        {{1, 26}, 0.228464},  {{26, 27}, 2.371536}, {{27, 28}, 4.893188}, {{27, 29}, 5.067973}, {{27, 30}, 5.242719},
        {{28, 29}, 0.343425}, {{28, 30}, 0.355233}, {{28, 31}, 5.276578}, {{29, 30}, 0.367962}, {{29, 31}, 5.404536},
        {{30, 31}, 5.653494}, {{31, 32}, 2.900599}};
    return q;
}

}  // namespace fmmc
