#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fmmc/io.hpp"

namespace fmmc {

struct Check {
    std::string name;
    double value = 0.0;
    double expected = 0.0;
    double tol = 0.0;
    double delta() const;
    bool pass() const { return delta() <= tol; }
};

struct CorpusItem {
    std::string id;
    std::string title;
    std::vector<std::string> families;  // used by the family filter
    std::function<std::vector<Check>(std::uint64_t seed)> run;
};

struct CorpusOutcome {
    std::string id;
    std::string title;
    std::vector<Check> checks;
    std::string error;
    bool pass() const;
};

// The built-in worked examples, in id order.
const std::vector<CorpusItem>& corpus();

// Runs the items matching family (all when empty) in parallel; tol replaces every per-check tolerance.
// Throws Status::invalid when the filter matches nothing.
std::vector<CorpusOutcome> run_corpus(const std::string& family = "", std::optional<double> tol = std::nullopt,
                                      std::uint64_t seed = 0);

std::string corpus_report(const std::vector<CorpusOutcome>& outcomes);
Json corpus_json(const std::vector<CorpusOutcome>& outcomes);

// The 32-vertex host with five attached subgraphs (1-based labels in the comments of corpus.cpp).
Instance composite_example();
// Published weights of the composite example, keyed by 1-based vertex pairs.
const std::map<std::pair<int, int>, double>& composite_example_weights();

}  // namespace fmmc
