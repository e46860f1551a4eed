#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fmmc/closed_form.hpp"
#include "fmmc/graph.hpp"
#include "fmmc/lift.hpp"
#include "fmmc/solver.hpp"
#include "fmmc/subgraph.hpp"

namespace fmmc {

using Json = nlohmann::json;

// {"family": "...", "params": {...}, "pi": [...]}
struct Descriptor {
    std::string family;
    Json params = Json::object();
    Vec pi;
};

// Either a raw graph ({"n", "edges", "pi"}, 1-based ids) or a descriptor; optional "id" and "subgraphs".
struct Instance {
    std::string id;
    Graph graph;
    Vec pi;
    std::optional<Descriptor> descriptor;
    std::vector<AttachedSubgraph> subgraphs;  // zero-based after parsing
};

// Throws Status::parse on malformed JSON or schema, Status::invalid on bad graphs or parameters.
Instance parse_instance(const std::string& text);
Instance instance_from_json(const Json& j);
Descriptor descriptor_from_json(const Json& j);
Graph graph_from_json(const Json& j);
LiftSpec lift_spec_from_json(const Json& j);

// Runs the family solver named by the descriptor.
ClosedFormResult solve_descriptor(const Descriptor& d);

enum class Method { automatic, closed, numeric, metropolis };
Method method_from_string(const std::string& s);

struct RunOptions {
    Method method = Method::automatic;
    SolverOptions solver;
};

struct RunResult {
    std::string id;
    std::string method;  // closed_form | numeric | metropolis | lifted
    std::string family;
    std::string regime;
    double slem = 1.0;
    double mixing_time = 0.0;
    Graph graph;
    Vec pi;
    Weights q;
    std::vector<Condition> conditions;
    std::optional<Certificate> certificate;
    std::vector<std::string> notes;
    Json details = Json::object();
};

// Dispatch: descriptor -> closed form (numeric fallback on refusal in automatic mode);
// raw graph -> numeric, composite when subgraphs are declared.
RunResult run_instance(const Instance& inst, const RunOptions& opts = {});

RunResult metropolis_result(const Instance& inst);

struct Comparison {
    RunResult optimal;
    RunResult metropolis;
    double ratio = 1.0;  // Metropolis mixing time over optimal mixing time
};

Comparison compare_instance(const Instance& inst, const RunOptions& opts = {});

// Transfers a base RunResult across a clique lift and checks SLEM equality (1e-8) and interlacing.
// Throws Status::consistency on an aggregation mismatch or a SLEM disagreement.
RunResult lift_result(const RunResult& base, const LiftSpec& spec, const Vec& lifted_pi);

// Fixed formatting: 9 significant digits, sorted keys, 1-based vertex ids.
double round_sig(double x, int digits = 9);
Json to_json(const RunResult& r);
Json to_json(const Comparison& c);
RunResult run_result_from_json(const Json& j);
std::string dump(const Json& j);
std::string comparison_table(const Comparison& c);

}  // namespace fmmc
