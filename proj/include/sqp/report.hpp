#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "sqp/invariants.hpp"
#include "sqp/laurent.hpp"
#include "sqp/selection.hpp"
#include "sqp/surface.hpp"
#include "sqp/tie.hpp"

namespace sqp {

inline constexpr int schema_version = 1;
inline constexpr const char* tool_version = "1.0.0";

struct WordInput {
    std::string word;
    int strands = 1;
    std::string syntax = "band";  // "band" or "artin"

    friend bool operator==(const WordInput&, const WordInput&) = default;
};

struct FamilyEntry {
    int iteration = 0;
    std::string word;
    int strands = 1;
    std::string provenance;
    BandSelection selection;
    InvariantReport report;
    std::vector<Assertion> certificate;
};

struct ReportEnvelope {
    int schema = schema_version;
    std::string version = tool_version;
    std::string subcommand;
    std::vector<WordInput> inputs;
    std::vector<InvariantReport> reports;
    std::vector<FamilyEntry> family;
    std::vector<Assertion> assertions;
    double seconds = 0.0;
};

// Runs family() and reports every member. Adds to each tie certificate:
// (n) distinguished from every earlier member by a computed invariant; when no
// invariant separates them in Case 2 the claim is recorded as paper-cited.
std::vector<FamilyEntry> family_report(const BandWord& seed, int count, const AnnulusWord& annulus,
                                       const ReportOptions& options);

// True when every assertion is pass or paper-cited.
bool all_hold(const std::vector<Assertion>& assertions);
bool all_hold(const ReportEnvelope& envelope);

void to_json(nlohmann::json& j, const LaurentPolynomial& p);
void from_json(const nlohmann::json& j, LaurentPolynomial& p);
void to_json(nlohmann::json& j, const IntMatrix& m);
void from_json(const nlohmann::json& j, IntMatrix& m);
void to_json(nlohmann::json& j, const InvariantReport& r);
void from_json(const nlohmann::json& j, InvariantReport& r);
void to_json(nlohmann::json& j, const BandSelection& s);
void from_json(const nlohmann::json& j, BandSelection& s);
void to_json(nlohmann::json& j, const Assertion& a);
void from_json(const nlohmann::json& j, Assertion& a);
void to_json(nlohmann::json& j, const WordInput& w);
void from_json(const nlohmann::json& j, WordInput& w);
void to_json(nlohmann::json& j, const FamilyEntry& f);
void from_json(const nlohmann::json& j, FamilyEntry& f);
void to_json(nlohmann::json& j, const ReportEnvelope& e);
void from_json(const nlohmann::json& j, ReportEnvelope& e);

nlohmann::json surface_json(const BandWord& w);

bool operator==(const InvariantReport& a, const InvariantReport& b);

// Human-readable summary.
std::string render_text(const InvariantReport& r);

}  // namespace sqp
