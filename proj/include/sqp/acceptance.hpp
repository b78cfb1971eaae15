#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "sqp/corpus.hpp"
#include "sqp/invariants.hpp"
#include "sqp/tie.hpp"

namespace sqp {

struct AcceptanceOptions {
    // Replaces the bundled annulus word (8 strands) everywhere it is used. Negative control.
    std::string alpha_override;
    int jones_budget = default_jones_budget;
    std::filesystem::path corpus_dir = default_corpus_dir();
    std::uint64_t seed = 20240611;
    Execution mode = Execution::parallel;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double limit_seconds = 0.0;
};

inline constexpr int criterion_count = 8;

CriterionResult run_criterion(int id, const AcceptanceOptions& options);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

// Recomputes every corpus entry and compares it with its expected sidecar.
CriterionResult replay_corpus(const AcceptanceOptions& options);

// The annulus the criteria use: bundled, or the override word with the same metadata.
AnnulusWord acceptance_annulus(const AcceptanceOptions& options);

std::string format_result(const CriterionResult& r);

}  // namespace sqp
