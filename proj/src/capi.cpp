#include "fmmc/fmmc.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <new>
#include <optional>
#include <string>

#include "fmmc/corpus.hpp"
#include "fmmc/io.hpp"

struct fmmc_instance {
    fmmc::Instance inst;
};

struct fmmc_result {
    std::string json;
    std::string text;
    double slem = std::numeric_limits<double>::quiet_NaN();
};

namespace {

thread_local std::string last_error;

template <class F>
fmmc_status guarded(F&& body) {
    last_error.clear();
    try {
        return body();
    } catch (const fmmc::Error& e) {
        last_error = e.what();
        return static_cast<fmmc_status>(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
    } catch (const std::exception& e) {
        last_error = e.what();
    }
    return FMMC_ERR_INTERNAL;
}

fmmc_status null_argument(const char* what) {
    last_error = std::string("null argument: ") + what;
    return FMMC_ERR_INVALID;
}

fmmc::RunOptions run_options(const fmmc_options* o) {
    fmmc::RunOptions r;
    if (!o) return r;
    switch (o->method) {
        case FMMC_METHOD_AUTO: r.method = fmmc::Method::automatic; break;
        case FMMC_METHOD_CLOSED: r.method = fmmc::Method::closed; break;
        case FMMC_METHOD_NUMERIC: r.method = fmmc::Method::numeric; break;
        case FMMC_METHOD_METROPOLIS: r.method = fmmc::Method::metropolis; break;
        default: throw fmmc::Error(fmmc::Status::invalid, "unknown method code " + std::to_string(o->method));
    }
    r.solver.seed = o->seed;
    if (o->tol > 0.0) r.solver.stall_tol = o->tol;
    if (o->max_iters > 0) r.solver.max_iters = o->max_iters;
    return r;
}

fmmc::Json parse_json(const char* text, const char* what) {
    try {
        return fmmc::Json::parse(text);
    } catch (const fmmc::Json::parse_error& e) {
        throw fmmc::Error(fmmc::Status::parse, std::string("invalid JSON in ") + what + ": " + e.what());
    }
}

std::string summary(const fmmc::RunResult& r) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s slem %.9g mixing_time %.9g\n", r.method.c_str(), r.slem, r.mixing_time);
    std::string out = buf;
    for (const auto& n : r.notes) out += "note: " + n + "\n";
    return out;
}

}  // namespace

extern "C" {

const char* fmmc_version(void) { return "1.0.0"; }

const char* fmmc_last_error(void) { return last_error.c_str(); }

void fmmc_options_init(fmmc_options* opts) {
    if (!opts) return;
    opts->method = FMMC_METHOD_AUTO;
    opts->seed = 0;
    opts->tol = 0.0;
    opts->max_iters = 0;
}

fmmc_status fmmc_instance_parse(const char* json, fmmc_instance** out) {
    if (!json) return null_argument("json");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        auto* h = new fmmc_instance{fmmc::parse_instance(json)};
        *out = h;
        return FMMC_OK;
    });
}

int fmmc_instance_size(const fmmc_instance* inst) {
    if (!inst) return -1;
    return static_cast<int>(inst->inst.pi.size());
}

void fmmc_instance_free(fmmc_instance* inst) { delete inst; }

fmmc_status fmmc_solve(const fmmc_instance* inst, const fmmc_options* opts, fmmc_result** out) {
    if (!inst) return null_argument("instance");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        const fmmc::RunResult r = fmmc::run_instance(inst->inst, run_options(opts));
        *out = new fmmc_result{fmmc::dump(fmmc::to_json(r)), summary(r), r.slem};
        return FMMC_OK;
    });
}

fmmc_status fmmc_compare(const fmmc_instance* inst, const fmmc_options* opts, fmmc_result** out) {
    if (!inst) return null_argument("instance");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        const fmmc::Comparison c = fmmc::compare_instance(inst->inst, run_options(opts));
        *out = new fmmc_result{fmmc::dump(fmmc::to_json(c)), fmmc::comparison_table(c), c.optimal.slem};
        return FMMC_OK;
    });
}

fmmc_status fmmc_lift(const char* base_result, const char* lift_spec, const char* lifted_pi, fmmc_result** out) {
    if (!base_result) return null_argument("base_result");
    if (!lift_spec) return null_argument("lift_spec");
    if (!lifted_pi) return null_argument("lifted_pi");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        const fmmc::RunResult base = fmmc::run_result_from_json(parse_json(base_result, "base result"));
        const fmmc::LiftSpec spec = fmmc::lift_spec_from_json(parse_json(lift_spec, "lift spec"));
        fmmc::Json pj = parse_json(lifted_pi, "lifted distribution");
        if (pj.is_object()) {
            if (!pj.contains("pi")) throw fmmc::Error(fmmc::Status::parse, "lifted distribution needs a \"pi\" array");
            pj = pj["pi"];
        }
        if (!pj.is_array()) throw fmmc::Error(fmmc::Status::parse, "lifted distribution must be an array of numbers");
        fmmc::Vec pi;
        for (const auto& x : pj) {
            if (!x.is_number()) throw fmmc::Error(fmmc::Status::parse, "lifted distribution must be an array of numbers");
            pi.push_back(x.get<double>());
        }
        const fmmc::RunResult r = fmmc::lift_result(base, spec, pi);
        std::string text = summary(r);
        const auto& il = r.details["interlacing"];
        text += "base slem " + std::to_string(r.details["base_slem"].get<double>()) + ", interlacing " +
                (il["holds"].get<bool>() ? "holds" : "violated") + ", tight " + std::to_string(il["tight"].get<int>()) + "\n";
        *out = new fmmc_result{fmmc::dump(fmmc::to_json(r)), text, r.slem};
        return FMMC_OK;
    });
}

fmmc_status fmmc_reproduce(const char* family, double tol, uint64_t seed, fmmc_result** out) {
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        std::optional<double> t;
        if (tol >= 0.0) t = tol;
        const auto outcomes = fmmc::run_corpus(family ? family : "", t, seed);
        const fmmc::Json j = fmmc::corpus_json(outcomes);
        *out = new fmmc_result{fmmc::dump(j), fmmc::corpus_report(outcomes), std::numeric_limits<double>::quiet_NaN()};
        if (!j["pass"].get<bool>()) {
            last_error = "reproduce: at least one example failed";
            return FMMC_ERR_REPRODUCE;
        }
        return FMMC_OK;
    });
}

const char* fmmc_result_json(const fmmc_result* res) { return res ? res->json.c_str() : ""; }

const char* fmmc_result_text(const fmmc_result* res) { return res ? res->text.c_str() : ""; }

double fmmc_result_slem(const fmmc_result* res) { return res ? res->slem : std::numeric_limits<double>::quiet_NaN(); }

void fmmc_result_free(fmmc_result* res) { delete res; }

}  // extern "C"
