#include "concom/classify.hpp"

#include <algorithm>
#include <cmath>

namespace concom {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Compositional: return "compositional";
        case Verdict::NonCompositionalMsFailure: return "non-compositional (marginal selectivity)";
        case Verdict::NonCompositionalViolation: return "non-compositional (violation)";
    }
    return "?";
}

std::string verdict_short_name(Verdict v) {
    return v == Verdict::Compositional ? "compositional" : "non-compositional";
}

bool AnalysisConfig::overridden_for(const std::string& name) const {
    if (override_ms) return true;
    return std::find(ms_overrides.begin(), ms_overrides.end(), name) != ms_overrides.end();
}

namespace {

std::string format_clamp(const MsClamp& c) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "projection clamped E(%s) from %.6g to %.6g",
                  c.condition.label().c_str(), c.e_requested, c.e_applied);
    return buf;
}

bool table_has_counts(const CombinationTable& t) {
    return std::all_of(t.blocks.begin(), t.blocks.end(),
                       [](const ConditionBlock& b) { return b.n.has_value() && *b.n > 0; });
}

}  // namespace

Classification classify(const CombinationTable& table, const AnalysisConfig& config) {
    if (!table.valid())
        throw ValidationError("table '" + table.name + "' violates block invariants", "table");

    Classification out;
    const bool overridden = config.overridden_for(table.name);

    // step 1: the marginal-selectivity gate
    if (config.ms_mode == MsMode::Statistical) {
        if (table_has_counts(table)) {
            out.ms_report = test_marginal_selectivity(table, config.selectivity);
        } else if (overridden) {
            // no counts, gate skipped anyway: report plain diffs
            out.ms_report = test_marginal_selectivity_strict(table, config.selectivity);
            out.notes.push_back("no sample sizes; statistical test unavailable, diffs reported");
        } else {
            // surfaces MissingSampleSizes
            out.ms_report = test_marginal_selectivity(table, config.selectivity);
        }
    } else {
        out.ms_report = test_marginal_selectivity_strict(table, config.selectivity);
    }
    if (overridden && !out.ms_report.holds) {
        out.ms_report.holds = true;
        out.ms_report.overridden = true;
        out.notes.push_back("marginal-selectivity gate overridden");
    } else if (overridden) {
        out.ms_report.overridden = true;
    }

    if (!out.ms_report.holds) {
        // immediately non-compositional; inequalities are inapplicable. The
        // LP on the raw table documents that no joint distribution exists
        // under exact constraints.
        out.verdict = Verdict::NonCompositionalMsFailure;
        out.jdc_result = solve(build_system(table), config.lp_tolerance, config.pivot_budget);
        out.agreement = out.jdc_result->status == JdcStatus::Infeasible;
        return out;
    }

    // step 2: inequalities. CHSH is reported from the observed table; the
    // Bell/CH system and the LP run on the MS-projected table, where the
    // joint-existence equivalence is exact.
    out.chsh_report = chsh(table, config.chsh_tolerance);
    MsProjection projection = project_to_ms(table);
    out.clamps = projection.clamps;
    for (const auto& c : out.clamps) out.notes.push_back(format_clamp(c));
    out.bellch_report = bell_ch(projection.table, config.marginal_policy, config.bellch_tolerance);
    out.jdc_result =
        solve(build_system(projection.table), config.lp_tolerance, config.pivot_budget);
    out.projected = std::move(projection.table);

    // step 3: verdict and cross-check
    const bool violated = out.chsh_report->violated || !out.bellch_report->satisfied;
    out.verdict = violated ? Verdict::NonCompositionalViolation : Verdict::Compositional;
    out.agreement = violated == (out.jdc_result->status == JdcStatus::Infeasible);
    if (!out.agreement)
        out.notes.push_back(
            "inequality verdict and joint-distribution LP disagree (possible only through "
            "projection clamping or tolerance edge cases); confidence downgraded");
    out.borderline = out.chsh_report->max_abs > 2.0 && out.chsh_report->max_abs <= 2.1;
    if (out.borderline)
        out.notes.push_back("max |CHSH| is within 0.1 of the bound; underpowered data cannot "
                            "settle this case");
    return out;
}

std::vector<BatchEntry> classify_batch(const TableSet& tables, const AnalysisConfig& config,
                                       const std::vector<std::string>& overrides) {
    AnalysisConfig effective = config;
    effective.ms_overrides.insert(effective.ms_overrides.end(), overrides.begin(),
                                  overrides.end());
    std::vector<BatchEntry> out;
    out.reserve(tables.size());
    for (const auto& [name, table] : tables) {
        try {
            out.push_back({name, classify(table, effective)});
        } catch (const std::exception& e) {
            out.push_back({name, std::string(e.what())});
        }
    }
    return out;
}

}  // namespace concom
