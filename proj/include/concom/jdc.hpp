#pragma once

// The joint distribution criterion, solved as a linear program: does a
// 16-cell joint distribution Q >= 0 exist with MQ = P, where P stacks the
// sixteen observed block probabilities plus normalization? Feasibility is
// decided by a dense phase-1 simplex with Bland's anti-cycling rule; at
// this size (17 rows, 16 structural variables) nothing sparser is needed.

#include <optional>
#include <vector>

#include "concom/model.hpp"

namespace concom {

// 16 observation rows (one per block cell) + 1 normalization row.
struct LpSystem {
    static constexpr int kRows = 17;
    static constexpr int kCols = 16;
    std::array<std::array<double, kCols>, kRows> matrix{};
    std::array<double, kRows> rhs{};
};

// Row layout: blocks in condition order (1,1), (1,2), (2,1), (2,2), cells
// in canonical order within each block; row 16 is all-ones with rhs 1.
LpSystem build_system(const CombinationTable& table);

enum class JdcStatus { Feasible, Infeasible };

struct JdcResult {
    JdcStatus status = JdcStatus::Infeasible;
    std::optional<JointDistribution> witness;  // present iff Feasible, renormalized to sum 1
    double residual = 0.0;                     // L-inf of MQ - P at the phase-1 optimum
    double tolerance = 0.0;
};

constexpr double kLpTolerance = 1e-7;
constexpr int kPivotBudget = 10000;

// Phase-1 simplex on min sum(artificials) s.t. MQ + artificials = P, Q >= 0.
// Feasible iff the optimum objective <= tolerance. Throws IterationLimit
// (with the best residual) if the pivot budget is exhausted.
JdcResult solve(const LpSystem& system, double tolerance = kLpTolerance,
                int pivot_budget = kPivotBudget);

// Minimal adjustment to exact marginal selectivity: average the two
// empirical marginals per variable and rebuild each block from (averaged
// marginals, original expectation), clamping the expectation only where the
// averaged marginals force it.
struct MsClamp {
    PrimingCondition condition;
    double e_requested = 0.0;
    double e_applied = 0.0;
};

struct MsProjection {
    CombinationTable table;
    std::vector<MsClamp> clamps;
};

MsProjection project_to_ms(const CombinationTable& table);

// True iff marginalizing the witness reproduces every block cell within tol.
bool verify(const JointDistribution& witness, const CombinationTable& table, double tol);

}  // namespace concom
