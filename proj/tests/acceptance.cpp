// Acceptance suite: one checkable criterion per entry, each printing a
// single PASS/FAIL line plus failing-row details. Exit code 0 only when
// every requested criterion passes.
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "profilekit/experiment.hpp"

using namespace profilekit;

namespace {

struct CriterionResult {
    int id = 0;
    std::string description;
    bool pass = false;
    std::vector<std::string> failures;
};

void collect_failures(const ExperimentReport & report, CriterionResult & result)
{
    for (const auto & row : report.rows) {
        if (row.gating && !row.pass)
            result.failures.push_back("  instance " + std::to_string(row.instance) + " [" +
                                      row.params + "]: measured " + row.measured + " vs bound " +
                                      row.bound);
    }
}

CriterionResult suite_criterion(int id, const std::string & description, const std::string & suite,
                                std::uint64_t seed)
{
    CriterionResult result{id, description, false, {}};
    auto report = run_suite(suite, seed);
    result.pass = report.all_pass();
    collect_failures(report, result);
    return result;
}

CriterionResult determinism_criterion(int id, std::uint64_t seed)
{
    CriterionResult result{id, "determinism: reruns yield identical CSV without the micros column",
                           true, {}};
    for (const auto & name : suite_names()) {
        auto first = to_csv(run_suite(name, seed), false);
        auto second = to_csv(run_suite(name, seed), false);
        if (first != second) {
            result.pass = false;
            result.failures.push_back("  suite " + name + " differs between reruns");
        }
    }
    return result;
}

CriterionResult run_criterion(int id, std::uint64_t seed)
{
    switch (id) {
    case 1:
        return suite_criterion(1, "split-gadget exactness: pc = (r+1)(2^k-1) for k in 1..4, r in 0..5",
                               "split-exact", seed);
    case 2:
        return suite_criterion(2, "subcubic neighbourhood count: nc = 2^k at the prescribed radius",
                               "subcubic-nc", seed);
    case 3:
        return suite_criterion(3, "interval lower bound: pc >= kr + (k/2)^2 (r-2)", "interval-lb",
                               seed);
    case 4:
        return suite_criterion(4, "treelength-2 lower bound: pc >= 54 with a length-2 certificate",
                               "tl2-lb", seed);
    case 5:
        return suite_criterion(
            5, "treewidth upper bound: pc <= 2^(t+3) (r+1)^(t+1) (t+1)^(t+1) |A| on 50 instances",
            "treewidth-upper", seed);
    case 6:
        return suite_criterion(
            6, "guarding correctness: both constructions verified with exact size and member caps",
            "guarding", seed);
    case 7:
        return suite_criterion(
            7, "oracle equivalence: deletion check and reach sets match path enumeration",
            "oracle-equiv", seed);
    case 8:
        return suite_criterion(
            8, "closure properties: size cap, idempotence, two-neighbour components", "lca-closure",
            seed);
    case 9:
        return suite_criterion(
            9, "outerplanar: pc <= 1+(2r+2)^2 |A| with level monotonicity and the level-sum cap",
            "outerplanar", seed);
    case 10:
        return suite_criterion(
            10, "interval: pc bound, signature soundness, and sweep chains within 2r+6",
            "interval-upper", seed);
    case 11:
        return suite_criterion(
            11, "chordal: exact cover by the case partition, separator bounds, explicit pc bound",
            "chordal", seed);
    case 12:
        return suite_criterion(12, "instance inequality nc <= pc + 1 on every suite instance",
                               "nc-pc", seed);
    case 13:
        return suite_criterion(13, "order-diameter-dimension corollary on small connected instances",
                               "corollary", seed);
    case 14:
        return determinism_criterion(14, seed);
    default:
        throw InputError("criterion id must be within 1..14");
    }
}

} // namespace

int main(int argc, char ** argv)
{
    std::uint64_t seed = 0;
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            wanted.push_back(std::stoi(argv[++i]));
        else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
            seed = std::stoull(argv[++i]);
        else {
            std::cerr << "usage: acceptance [--criterion N]... [--seed S]\n";
            return 2;
        }
    }
    if (wanted.empty())
        for (int id = 1; id <= 14; ++id)
            wanted.push_back(id);

    bool all_pass = true;
    for (int id : wanted) {
        auto result = run_criterion(id, seed);
        std::cout << "CRITERION " << result.id << ": " << (result.pass ? "PASS" : "FAIL") << " - "
                  << result.description << "\n";
        std::size_t shown = 0;
        for (const auto & failure : result.failures) {
            if (shown++ == 8) {
                std::cout << "  (" << result.failures.size() - 8 << " more failing rows)\n";
                break;
            }
            std::cout << failure << "\n";
        }
        all_pass = all_pass && result.pass;
    }
    return all_pass ? 0 : 1;
}
