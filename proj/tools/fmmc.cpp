#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "fmmc/fmmc.h"

namespace {

// CLI exit codes: 0 success, 2 parse or invalid input, 3 infeasible, 4 consistency, 5 reproduce failure.
int exit_code(fmmc_status s) {
    switch (s) {
        case FMMC_OK: return 0;
        case FMMC_ERR_INVALID:
        case FMMC_ERR_PARSE: return 2;
        case FMMC_ERR_INFEASIBLE: return 3;
        case FMMC_ERR_CONSISTENCY: return 4;
        case FMMC_ERR_REPRODUCE: return 5;
        default: return 1;
    }
}

bool read_file(const std::string& path, std::string& out) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        out = ss.str();
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    return static_cast<bool>(out);
}

struct ResultDeleter {
    void operator()(fmmc_result* r) const { fmmc_result_free(r); }
};
struct InstanceDeleter {
    void operator()(fmmc_instance* i) const { fmmc_instance_free(i); }
};
using ResultPtr = std::unique_ptr<fmmc_result, ResultDeleter>;
using InstancePtr = std::unique_ptr<fmmc_instance, InstanceDeleter>;

int fail(fmmc_status s) {
    std::cerr << "error: " << fmmc_last_error() << "\n";
    return exit_code(s);
}

int fail_io(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

// Writes the JSON document to --out when given (with the text summary on stdout), else to stdout.
int emit(const fmmc_result* r, const std::string& out_path, bool text_to_stdout) {
    if (!out_path.empty()) {
        if (!write_file(out_path, fmmc_result_json(r))) return fail_io("cannot write " + out_path);
        std::cout << fmmc_result_text(r);
    } else if (text_to_stdout) {
        std::cout << fmmc_result_text(r);
    } else {
        std::cout << fmmc_result_json(r);
    }
    return 0;
}

int load_instance(const std::string& path, InstancePtr& inst) {
    std::string text;
    if (!read_file(path, text)) return fail_io("cannot read " + path);
    fmmc_instance* raw = nullptr;
    const fmmc_status s = fmmc_instance_parse(text.c_str(), &raw);
    if (s != FMMC_OK) return fail(s);
    inst.reset(raw);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fastest mixing reversible Markov chains on graphs"};
    app.require_subcommand(1);

    std::string input, method = "auto", out, family, base_path, spec_path, pi_path;
    std::uint64_t seed = 0;
    double tol = -1.0;

    auto* solve = app.add_subcommand("solve", "Optimize transition weights for an instance");
    solve->add_option("input", input, "Instance JSON file ('-' for stdin)")->required();
    solve->add_option("--method", method, "auto, closed, numeric or metropolis")
        ->check(CLI::IsMember({"auto", "closed", "numeric", "metropolis"}));
    solve->add_option("--seed", seed, "Numeric solver seed");
    solve->add_option("--tol", tol, "Numeric solver stall tolerance");
    solve->add_option("--out", out, "Write the result JSON here");

    auto* compare = app.add_subcommand("compare", "Optimal chain against the Metropolis chain");
    compare->add_option("input", input, "Instance JSON file ('-' for stdin)")->required();
    compare->add_option("--method", method, "auto, closed or numeric")->check(CLI::IsMember({"auto", "closed", "numeric"}));
    compare->add_option("--seed", seed, "Numeric solver seed");
    compare->add_option("--tol", tol, "Numeric solver stall tolerance");
    compare->add_option("--out", out, "Write the comparison JSON here");

    auto* lift = app.add_subcommand("lift", "Transfer a base solution to a clique lift");
    lift->add_option("base", base_path, "Base result JSON (output of solve)")->required();
    lift->add_option("spec", spec_path, "Lift spec JSON {\"base\": graph, \"fibers\": [...]}")->required();
    lift->add_option("pi", pi_path, "Lifted distribution JSON")->required();
    lift->add_option("--out", out, "Write the lifted result JSON here");

    auto* reproduce = app.add_subcommand("reproduce", "Run the built-in worked examples");
    reproduce->add_option("--family", family, "Only items tagged with this family");
    reproduce->add_option("--tol", tol, "Replace every per-item tolerance");
    reproduce->add_option("--seed", seed, "Numeric solver seed");
    reproduce->add_option("--out", out, "Write the summary JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    fmmc_options opts;
    fmmc_options_init(&opts);
    opts.seed = seed;
    if (tol > 0.0) opts.tol = tol;
    if (method == "closed") opts.method = FMMC_METHOD_CLOSED;
    if (method == "numeric") opts.method = FMMC_METHOD_NUMERIC;
    if (method == "metropolis") opts.method = FMMC_METHOD_METROPOLIS;

    if (*solve || *compare) {
        InstancePtr inst;
        if (const int rc = load_instance(input, inst)) return rc;
        fmmc_result* raw = nullptr;
        const fmmc_status s = *solve ? fmmc_solve(inst.get(), &opts, &raw) : fmmc_compare(inst.get(), &opts, &raw);
        ResultPtr res(raw);
        if (s != FMMC_OK) return fail(s);
        return emit(res.get(), out, static_cast<bool>(*compare));
    }
    if (*lift) {
        std::string base, spec, pi;
        if (!read_file(base_path, base)) return fail_io("cannot read " + base_path);
        if (!read_file(spec_path, spec)) return fail_io("cannot read " + spec_path);
        if (!read_file(pi_path, pi)) return fail_io("cannot read " + pi_path);
        fmmc_result* raw = nullptr;
        const fmmc_status s = fmmc_lift(base.c_str(), spec.c_str(), pi.c_str(), &raw);
        ResultPtr res(raw);
        if (s != FMMC_OK) return fail(s);
        return emit(res.get(), out, false);
    }
    fmmc_result* raw = nullptr;
    const fmmc_status s = fmmc_reproduce(family.empty() ? nullptr : family.c_str(), tol, seed, &raw);
    ResultPtr res(raw);
    if (!res) return fail(s);
    if (const int rc = emit(res.get(), out, true)) return rc;
    if (s != FMMC_OK) std::cerr << "error: " << fmmc_last_error() << "\n";
    return exit_code(s);
}
