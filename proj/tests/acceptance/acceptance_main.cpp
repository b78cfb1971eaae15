// One line per acceptance criterion; exit status 0 only if all of them pass.
#include <cstdlib>
#include <iostream>

#include "sqp/acceptance.hpp"

int main(int argc, char** argv) {
    sqp::AcceptanceOptions options;
    if (const char* budget = std::getenv("SQP_JONES_BUDGET")) options.jones_budget = std::atoi(budget);
    if (argc > 1) options.corpus_dir = argv[1];

    bool all = true;
    for (int id = 1; id <= sqp::criterion_count; ++id) {
        const sqp::CriterionResult r = sqp::run_criterion(id, options);
        std::cout << sqp::format_result(r) << std::endl;
        all = all && r.passed;
    }
    const sqp::CriterionResult corpus = sqp::replay_corpus(options);
    std::cout << sqp::format_result(corpus) << std::endl;
    all = all && corpus.passed;
    std::cout << (all ? "acceptance: all criteria pass" : "acceptance: FAILED") << std::endl;
    return all ? 0 : 1;
}
