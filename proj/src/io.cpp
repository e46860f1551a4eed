#include "fmmc/io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "fmmc/spectral.hpp"

namespace fmmc {

namespace {

[[noreturn]] void schema(const std::string& msg) { throw Error(Status::parse, msg); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) schema("expected a JSON object");
    const auto it = j.find(key);
    if (it == j.end()) schema(std::string("missing field \"") + key + "\"");
    return *it;
}

int as_int(const Json& v, const std::string& what) {
    if (!v.is_number_integer()) schema(what + " must be an integer");
    return v.get<int>();
}

int param_int(const Json& params, const char* key) { return as_int(field(params, key), std::string("params.") + key); }

std::vector<int> int_list(const Json& v, const std::string& what) {
    if (!v.is_array()) schema(what + " must be an array of integers");
    std::vector<int> out;
    for (const auto& x : v) out.push_back(as_int(x, what));
    return out;
}

Vec number_list(const Json& v, const std::string& what) {
    if (!v.is_array()) schema(what + " must be an array of numbers");
    Vec out;
    for (const auto& x : v) {
        if (!x.is_number()) schema(what + " must be an array of numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

// Weights are truncated towards zero so that rounding never breaks a tight vertex constraint.
double round_weight(double x) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    const double r = round_sig(x);
    if (std::abs(r) <= std::abs(x)) return r;
    const double unit = std::pow(10.0, std::floor(std::log10(std::abs(x))) - 8);
    return round_sig(r - std::copysign(unit, x));
}

Json number(double x) {
    if (!std::isfinite(x)) return nullptr;
    return round_sig(x);
}

Json certificate_json(const Certificate& c) {
    Json active = Json::array();
    for (int v : c.active_vertices) active.push_back(v + 1);
    return Json{{"slem", number(c.slem)},
                {"lambda2", number(c.lambda2)},
                {"lambdaN", number(c.lambdaN)},
                {"eigenvalue_sum_gap", number(c.eigenvalue_sum_gap)},
                {"active_vertices", active},
                {"upper_active", c.upper_active},
                {"lower_active", c.lower_active},
                {"dual_residual", number(c.dual_residual)},
                {"dual_consistent", c.dual_consistent}};
}

void fill_solver_details(RunResult& r, const SolveResult& s) {
    r.details["iterations"] = s.iterations;
    r.details["best_run"] = s.best_run;
    r.details["budget_exhausted"] = s.budget_exhausted;
}

RunResult base_result(const Instance& inst, const Graph& g, const Vec& pi) {
    RunResult r;
    r.id = inst.id;
    r.graph = g;
    r.pi = pi;
    if (inst.descriptor) r.family = inst.descriptor->family;
    return r;
}

void set_slem(RunResult& r, double slem) {
    r.slem = slem;
    r.mixing_time = mixing_time(slem);
}

RunResult numeric_result(const Instance& inst, const Graph& g, const Vec& pi, const RunOptions& opts) {
    RunResult r = base_result(inst, g, pi);
    r.method = "numeric";
    if (!inst.subgraphs.empty()) {
        SolverOptions ref = opts.solver;
        ref.restarts = 0;
        const CompositeResult c = solve_composite(g, pi, inst.subgraphs, opts.solver, ref);
        r.q = c.result.q;
        set_slem(r, c.result.slem);
        r.certificate = c.result.certificate;
        fill_solver_details(r, c.result);
        Json subs = Json::array();
        for (const auto& rep : c.local.reports) {
            Json conds = Json::array();
            for (const auto& cond : rep.conditions)
                conds.push_back({{"text", cond.text}, {"ok", cond.ok}, {"margin", number(cond.margin)}});
            subs.push_back({{"family", rep.family},
                            {"assigned", rep.assigned},
                            {"reason", rep.reason},
                            {"fixed_edges", static_cast<int>(rep.fixed_edges.size())},
                            {"conditions", conds}});
        }
        r.details["subgraphs"] = subs;
        r.details["free_slem"] = number(c.reference->slem);
        r.details["locality_ok"] = c.locality_ok;
        return r;
    }
    const SolveResult s = solve(g, pi, opts.solver);
    r.q = s.q;
    set_slem(r, s.slem);
    r.certificate = s.certificate;
    fill_solver_details(r, s);
    return r;
}

}  // namespace

double round_sig(double x, int digits) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

Graph graph_from_json(const Json& j) {
    const int n = as_int(field(j, "n"), "n");
    if (n < 1) throw Error(Status::invalid, "graph needs at least one vertex");
    const Json& edges = field(j, "edges");
    if (!edges.is_array()) schema("edges must be an array of [i, j] pairs");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : edges) {
        const auto ij = int_list(e, "edge");
        if (ij.size() != 2) schema("each edge must be an [i, j] pair");
        if (ij[0] < 1 || ij[0] > n || ij[1] < 1 || ij[1] > n)
            throw Error(Status::invalid, "edge endpoint out of range 1.." + std::to_string(n));
        pairs.push_back({ij[0] - 1, ij[1] - 1});
    }
    return Graph(n, pairs);
}

Descriptor descriptor_from_json(const Json& j) {
    Descriptor d;
    const Json& fam = field(j, "family");
    if (!fam.is_string()) schema("family must be a string");
    d.family = fam.get<std::string>();
    if (j.contains("params")) {
        if (!j["params"].is_object()) schema("params must be an object");
        d.params = j["params"];
    }
    d.pi = number_list(field(j, "pi"), "pi");
    return d;
}

LiftSpec lift_spec_from_json(const Json& j) {
    LiftSpec spec{graph_from_json(field(j, "base")), int_list(field(j, "fibers"), "fibers")};
    check_lift_spec(spec);
    return spec;
}

Instance instance_from_json(const Json& j) {
    if (!j.is_object()) schema("instance must be a JSON object");
    Instance inst;
    if (j.contains("id")) {
        if (!j["id"].is_string()) schema("id must be a string");
        inst.id = j["id"].get<std::string>();
    }
    if (j.contains("family")) {
        inst.descriptor = descriptor_from_json(j);
        inst.pi = inst.descriptor->pi;
        // Building the family graph validates the name and parameters up front.
        inst.graph = solve_descriptor(*inst.descriptor).graph;
    } else {
        inst.graph = graph_from_json(j);
        inst.pi = number_list(field(j, "pi"), "pi");
        check_distribution(inst.graph, inst.pi);
    }
    if (j.contains("subgraphs")) {
        const Json& subs = j["subgraphs"];
        if (!subs.is_array()) schema("subgraphs must be an array");
        for (const auto& s : subs) {
            AttachedSubgraph a;
            const Json& fam = field(s, "family");
            if (!fam.is_string()) schema("subgraph family must be a string");
            a.family = fam.get<std::string>();
            for (int v : int_list(field(s, "vertices"), "subgraph vertices")) a.vertices.push_back(v - 1);
            a.attach = as_int(field(s, "attach"), "subgraph attach") - 1;
            inst.subgraphs.push_back(std::move(a));
        }
        if (!inst.descriptor) validate_subgraphs(inst.graph, inst.subgraphs);
    }
    return inst;
}

Instance parse_instance(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(Status::parse, std::string("invalid JSON: ") + e.what());
    }
    return instance_from_json(j);
}

ClosedFormResult solve_descriptor(const Descriptor& d) {
    const Json& p = d.params;
    const std::string& f = d.family;
    if (f == "path") return solve_path(d.pi);
    if (f == "complete") return solve_complete(d.pi);
    if (f == "star") {
        if (d.pi.size() < 2) throw Error(Status::invalid, "star needs a center and leaves");
        return solve_star(d.pi[0], Vec(d.pi.begin() + 1, d.pi.end()));
    }
    if (f == "palm") return solve_palm(param_int(p, "leaves"), param_int(p, "path"), d.pi);
    if (f == "semi_complete") return solve_semi_complete(param_int(p, "n1"), param_int(p, "n2"), param_int(p, "core"), d.pi);
    if (f == "ecl") return solve_ecl(int_list(field(p, "fibers"), "params.fibers"), d.pi);
    if (f == "lollipop") return solve_lollipop(param_int(p, "clique"), param_int(p, "path"), d.pi);
    if (f == "barbell") return solve_barbell(param_int(p, "clique1"), param_int(p, "clique2"), param_int(p, "bridge"), d.pi);
    if (f == "bistar") return solve_bistar(param_int(p, "left"), param_int(p, "right"), d.pi);
    if (f == "symmetric_tree") return solve_symmetric_tree(int_list(field(p, "branching"), "params.branching"), d.pi);
    if (f == "symmetric_star") return solve_symmetric_star(param_int(p, "branches"), param_int(p, "depth"), d.pi);
    if (f == "semi_symmetric_star") return solve_semi_symmetric_star(param_int(p, "branches"), param_int(p, "depth"), d.pi);
    if (f == "ccs_star") return solve_ccs_star(param_int(p, "core"), param_int(p, "depth"), d.pi);
    throw Error(Status::parse, "unknown family \"" + f + "\"");
}

Method method_from_string(const std::string& s) {
    if (s == "auto") return Method::automatic;
    if (s == "closed") return Method::closed;
    if (s == "numeric") return Method::numeric;
    if (s == "metropolis") return Method::metropolis;
    throw Error(Status::parse, "unknown method \"" + s + "\"");
}

RunResult metropolis_result(const Instance& inst) {
    Graph g = inst.graph;
    Vec pi = inst.pi;
    if (inst.descriptor) {
        ClosedFormResult cf = solve_descriptor(*inst.descriptor);
        g = cf.graph;
        pi = cf.pi;
    }
    if (!g.connected()) throw Error(Status::infeasible, "graph is disconnected");
    RunResult r = base_result(inst, g, pi);
    r.method = "metropolis";
    const Chain c = metropolis_chain(g, pi);
    r.q = weights_of_chain(g, c);
    set_slem(r, slem_of_chain(c).slem);
    return r;
}

RunResult run_instance(const Instance& inst, const RunOptions& opts) {
    if (opts.method == Method::metropolis) return metropolis_result(inst);
    if (!inst.descriptor) {
        if (opts.method == Method::closed) throw Error(Status::invalid, "closed-form method needs a family descriptor");
        if (!inst.graph.connected()) throw Error(Status::infeasible, "graph is disconnected");
        return numeric_result(inst, inst.graph, inst.pi, opts);
    }
    ClosedFormResult cf = solve_descriptor(*inst.descriptor);
    if (opts.method == Method::numeric) return numeric_result(inst, cf.graph, cf.pi, opts);
    if (!cf.refused) {
        RunResult r = base_result(inst, cf.graph, cf.pi);
        r.method = "closed_form";
        r.family = cf.family;
        r.regime = cf.regime;
        r.q = cf.q;
        set_slem(r, cf.slem);
        r.conditions = cf.conditions;
        r.certificate = certify(cf.graph, cf.pi, cf.q);
        for (const auto& w : cf.warnings) r.notes.push_back(w);
        if (cf.formula_slem) r.details["formula_slem"] = number(*cf.formula_slem);
        return r;
    }
    if (opts.method == Method::closed) throw Error(Status::infeasible, "closed form refused: " + cf.reason);
    RunResult r = numeric_result(inst, cf.graph, cf.pi, opts);
    r.family = cf.family;
    r.conditions = cf.conditions;
    r.notes.push_back("closed form refused (" + cf.reason + "); numeric fallback");
    return r;
}

Comparison compare_instance(const Instance& inst, const RunOptions& opts) {
    Comparison c;
    RunOptions o = opts;
    if (o.method == Method::metropolis) o.method = Method::automatic;
    c.optimal = run_instance(inst, o);
    c.metropolis = metropolis_result(inst);
    const double a = c.optimal.mixing_time, b = c.metropolis.mixing_time;
    if (a == 0.0)
        c.ratio = b == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    else
        c.ratio = b / a;
    return c;
}

RunResult lift_result(const RunResult& base, const LiftSpec& spec, const Vec& lifted_pi) {
    check_lift_spec(spec);
    if (spec.base.size() != base.graph.size() || spec.base.edge_count() != base.graph.edge_count())
        throw Error(Status::consistency, "lift base graph does not match the base result");
    Weights q(spec.base.edge_count(), 0.0);
    for (int e = 0; e < base.graph.edge_count(); ++e) {
        const int id = spec.base.edge_id(base.graph.edge(e).u, base.graph.edge(e).v);
        if (id < 0) throw Error(Status::consistency, "lift base graph does not match the base result");
        q[id] = base.q[e];
    }
    if (static_cast<int>(lifted_pi.size()) != lifted_size(spec))
        throw Error(Status::consistency, "lifted distribution has " + std::to_string(lifted_pi.size()) + " entries, lift has " +
                                             std::to_string(lifted_size(spec)) + " vertices");
    const Weights lq = lift_weights(spec, q, base.pi, lifted_pi);
    const Graph lg = build_lift(spec);

    const SpectralReport base_rep = slem_of_chain(transition_matrix(spec.base, base.pi, q));
    const SpectralReport lifted_rep = slem_of_chain(transition_matrix(lg, lifted_pi, lq));
    const double diff = std::abs(base_rep.slem - lifted_rep.slem);
    if (diff > 1e-8)
        throw Error(Status::consistency, "lifted SLEM " + std::to_string(lifted_rep.slem) + " differs from base SLEM " +
                                             std::to_string(base_rep.slem));
    const InterlacingReport il = verify_interlacing(lifted_rep.eigenvalues, base_rep.eigenvalues);

    RunResult r;
    r.id = base.id;
    r.method = "lifted";
    r.family = base.family;
    r.graph = lg;
    r.pi = lifted_pi;
    r.q = lq;
    set_slem(r, lifted_rep.slem);
    r.details["base_slem"] = number(base_rep.slem);
    r.details["slem_difference"] = number(diff);
    r.details["interlacing"] = {{"holds", il.holds}, {"tight", il.tight}, {"max_violation", number(il.max_violation)}};
    Json fibers = Json::array();
    for (int m : spec.fibers) fibers.push_back(m);
    r.details["fibers"] = fibers;
    return r;
}

Json to_json(const RunResult& r) {
    Json j;
    j["id"] = r.id;
    j["method"] = r.method;
    if (!r.family.empty()) j["family"] = r.family;
    if (!r.regime.empty()) j["regime"] = r.regime;
    j["slem"] = number(r.slem);
    j["mixing_time"] = number(r.mixing_time);
    j["n"] = r.graph.size();
    Json pi = Json::array();
    for (double x : r.pi) pi.push_back(number(x));
    j["pi"] = pi;
    Json w = Json::array();
    for (int e = 0; e < r.graph.edge_count(); ++e)
        w.push_back(Json::array({r.graph.edge(e).u + 1, r.graph.edge(e).v + 1, round_weight(r.q[e])}));
    j["weights"] = w;
    if (!r.conditions.empty()) {
        Json conds = Json::array();
        for (const auto& c : r.conditions) conds.push_back({{"text", c.text}, {"ok", c.ok}, {"margin", number(c.margin)}});
        j["conditions"] = conds;
    }
    if (r.certificate) j["certificate"] = certificate_json(*r.certificate);
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (!r.details.empty()) j["details"] = r.details;
    return j;
}

Json to_json(const Comparison& c) {
    return Json{{"optimal", to_json(c.optimal)}, {"metropolis", to_json(c.metropolis)}, {"ratio", number(c.ratio)}};
}

RunResult run_result_from_json(const Json& j) {
    RunResult r;
    if (j.contains("id") && j["id"].is_string()) r.id = j["id"].get<std::string>();
    if (j.contains("method") && j["method"].is_string()) r.method = j["method"].get<std::string>();
    if (j.contains("family") && j["family"].is_string()) r.family = j["family"].get<std::string>();
    const int n = as_int(field(j, "n"), "n");
    r.pi = number_list(field(j, "pi"), "pi");
    const Json& w = field(j, "weights");
    if (!w.is_array()) schema("weights must be an array of [i, j, q] triples");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& t : w) {
        if (!t.is_array() || t.size() != 3 || !t[2].is_number()) schema("each weight must be an [i, j, q] triple");
        const int a = as_int(t[0], "weight endpoint"), b = as_int(t[1], "weight endpoint");
        if (a < 1 || a > n || b < 1 || b > n) throw Error(Status::invalid, "weight endpoint out of range");
        pairs.push_back({a - 1, b - 1});
    }
    r.graph = Graph(n, pairs);
    check_distribution(r.graph, r.pi);
    r.q.assign(r.graph.edge_count(), 0.0);
    for (const auto& t : w) r.q[r.graph.edge_id(t[0].get<int>() - 1, t[1].get<int>() - 1)] = t[2].get<double>();
    if (j.contains("slem") && j["slem"].is_number()) set_slem(r, j["slem"].get<double>());
    return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string comparison_table(const Comparison& c) {
    auto tau = [](double t) {
        char buf[32];
        if (std::isinf(t)) return std::string("inf");
        std::snprintf(buf, sizeof buf, "%.6f", t);
        return std::string(buf);
    };
    std::ostringstream os;
    char line[160];
    std::snprintf(line, sizeof line, "%-12s %-12s %-14s %s\n", "chain", "slem", "mixing_time", "method");
    os << line;
    std::snprintf(line, sizeof line, "%-12s %-12.6f %-14s %s\n", "optimal", c.optimal.slem, tau(c.optimal.mixing_time).c_str(),
                  c.optimal.method.c_str());
    os << line;
    std::snprintf(line, sizeof line, "%-12s %-12.6f %-14s %s\n", "metropolis", c.metropolis.slem,
                  tau(c.metropolis.mixing_time).c_str(), "metropolis");
    os << line;
    os << "ratio " << tau(c.ratio) << "\n";
    return os.str();
}

}  // namespace fmmc
