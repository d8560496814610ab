#pragma once

// Marginal selectivity: does each concept's interpretation probability stay
// put when the *other* concept's prime changes? This is the precondition
// for applying either inequality system.

#include <array>
#include <string>

#include "concom/model.hpp"

namespace concom {

// Variable order used throughout: A1, A2, B1, B2.
constexpr std::array<const char*, 4> kVariableNames = {"A1", "A2", "B1", "B2"};

struct MarginalSelectivityReport {
    std::array<double, 4> diffs{};          // |marginal difference| per variable
    std::array<double, 4> chi_squares{};    // 0 in strict mode
    std::array<bool, 4> per_variable_fail{};
    bool holds = true;                      // conjunction over variables (or forced by override)
    double alpha = 0.1;
    double critical_value = 2.71;
    bool statistical = true;                // false when the strict numeric test was used
    bool overridden = false;                // gate skipped by an explicit override
};

struct SelectivityConfig {
    double alpha = 0.1;
    double critical_value = 2.71;  // chi-square(1) at alpha = 0.1, per-variable
    bool yates = false;
    double strict_tolerance = 1e-9;
};

// diff(Ai) = |Pr(Ai=+1 | Bj=1-prime) - Pr(Ai=+1 | Bj=2-prime)| and the
// symmetric B diffs; order (A1, A2, B1, B2).
std::array<double, 4> marginal_diffs(const CombinationTable& table);

// Pooled two-proportion chi-square. Returns 0 when the pooled proportion is
// degenerate (0 or 1). Throws InvalidSampleSize when either n is zero.
double chi_square_two_proportions(double p1, std::int64_t n1, double p2, std::int64_t n2,
                                  bool yates);

// Statistical test: per-variable chi-square against config.critical_value.
// Every block must carry n (MissingSampleSizes otherwise).
MarginalSelectivityReport test_marginal_selectivity(const CombinationTable& table,
                                                    const SelectivityConfig& config);

// Strict mode for analytic tables: diff <= strict_tolerance per variable.
MarginalSelectivityReport test_marginal_selectivity_strict(const CombinationTable& table,
                                                           const SelectivityConfig& config);

}  // namespace concom
