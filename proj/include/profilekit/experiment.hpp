#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "profilekit/profiles.hpp"

namespace profilekit {

struct ExperimentRow {
    std::string suite;
    int instance = 0;
    std::uint64_t seed = 0;
    std::string params;   // semicolon-separated key=value pairs
    std::string measured;
    std::string bound;
    bool pass = false;
    long long micros = 0;
    bool gating = true;   // informational rows never fail a suite
};

struct ExperimentReport {
    std::string suite;
    std::vector<ExperimentRow> rows;

    bool all_pass() const;
};

const std::vector<std::string> & suite_names();

// Runs one named suite deterministically from the seed. Row order is fixed
// by instance index.
ExperimentReport run_suite(const std::string & name, std::uint64_t seed, const Budgets & budgets = {});

// Header 'suite,instance,seed,params,measured,bound,pass,micros'; LF line
// endings, locale-free formatting. Without micros the text is byte-stable
// across reruns with the same seed.
std::string to_csv(const ExperimentReport & report, bool include_micros = true);

// Runs the suite and writes the CSV; returns the report.
ExperimentReport run_experiment(const std::string & name, std::uint64_t seed,
                                const std::string & out_path, const Budgets & budgets = {});

} // namespace profilekit
