#pragma once

// The three-step decision procedure: (1) test marginal selectivity — a
// failure is immediately non-compositional and nothing else is evaluated;
// (2) on a pass, evaluate both inequality systems; (3) any violation is
// non-compositional, otherwise compositional. The joint-distribution LP is
// run alongside as a cross-check: on the MS-projected table when the gate
// passed, on the raw table (exact constraints) when it failed.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "concom/inequalities.hpp"
#include "concom/jdc.hpp"
#include "concom/model.hpp"
#include "concom/selectivity.hpp"

namespace concom {

enum class Verdict { Compositional, NonCompositionalMsFailure, NonCompositionalViolation };

std::string verdict_name(Verdict v);       // full subtype, e.g. "non-compositional (violation)"
std::string verdict_short_name(Verdict v); // "compositional" / "non-compositional"

enum class MsMode { Statistical, Strict };

struct AnalysisConfig {
    SelectivityConfig selectivity;
    MsMode ms_mode = MsMode::Statistical;
    bool override_ms = false;  // skip the MS gate for every table
    std::vector<std::string> ms_overrides;  // ...or only for these names
    double chsh_tolerance = kChshTolerance;
    double bellch_tolerance = kBellChTolerance;
    MarginalPolicy marginal_policy = MarginalPolicy::average();
    double lp_tolerance = kLpTolerance;
    int pivot_budget = kPivotBudget;

    bool overridden_for(const std::string& name) const;
};

struct Classification {
    Verdict verdict = Verdict::Compositional;
    MarginalSelectivityReport ms_report;
    // absent when the MS gate failed (the procedure short-circuits)
    std::optional<ChshReport> chsh_report;       // evaluated on the raw table
    std::optional<BellChReport> bellch_report;   // evaluated on the MS-projected table
    std::optional<JdcResult> jdc_result;
    std::optional<CombinationTable> projected;   // the exact-MS table the LP ran on
    std::vector<MsClamp> clamps;                 // expectation clamps during projection
    bool agreement = true;   // inequality verdict vs. LP feasibility
    bool borderline = false; // max|CHSH| in (2, 2.1]
    std::vector<std::string> notes;
};

Classification classify(const CombinationTable& table, const AnalysisConfig& config);

// Per-table classification with error isolation: one bad table yields an
// error entry, the rest are classified. `overrides` names are forced past
// the MS gate (recorded in the report).
struct BatchEntry {
    std::string name;
    std::variant<Classification, std::string> result;  // classification or error text

    bool ok() const { return std::holds_alternative<Classification>(result); }
    const Classification& classification() const { return std::get<Classification>(result); }
    const std::string& error() const { return std::get<std::string>(result); }
};

std::vector<BatchEntry> classify_batch(const TableSet& tables, const AnalysisConfig& config,
                                       const std::vector<std::string>& overrides = {});

}  // namespace concom
