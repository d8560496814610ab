#include "concom/jdc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "concom/synth.hpp"

namespace concom {

LpSystem build_system(const CombinationTable& table) {
    LpSystem sys;
    int row = 0;
    for (const auto& cond : all_conditions()) {
        const ConditionBlock& blk = table.blocks[cond.slot()];
        for (int cell = 0; cell < 4; ++cell, ++row) {
            const int a_sign = cell_a_sign(cell);
            const int b_sign = cell_b_sign(cell);
            // variables: 0 = A1, 1 = A2, 2 = B1, 3 = B2
            const int a_var = cond.a_index - 1;
            const int b_var = 2 + (cond.b_index - 1);
            for (int q = 0; q < 16; ++q) {
                if (JointDistribution::sign(q, a_var) == a_sign &&
                    JointDistribution::sign(q, b_var) == b_sign)
                    sys.matrix[row][q] = 1.0;
            }
            sys.rhs[row] = blk.p[cell];
        }
    }
    for (int q = 0; q < 16; ++q) sys.matrix[16][q] = 1.0;
    sys.rhs[16] = 1.0;
    return sys;
}

namespace {

constexpr int kRows = LpSystem::kRows;
constexpr int kStruct = LpSystem::kCols;
constexpr int kTotal = kStruct + kRows;  // structural + one artificial per row

double linf_residual(const LpSystem& sys, const std::array<double, kStruct>& x) {
    double worst = 0.0;
    for (int r = 0; r < kRows; ++r) {
        double lhs = 0.0;
        for (int c = 0; c < kStruct; ++c) lhs += sys.matrix[r][c] * x[c];
        worst = std::max(worst, std::abs(lhs - sys.rhs[r]));
    }
    return worst;
}

}  // namespace

JdcResult solve(const LpSystem& system, double tolerance, int pivot_budget) {
    // Tableau with an identity block of artificials; rhs is nonnegative
    // (probabilities), so the artificial basis is feasible as-is.
    std::array<std::array<double, kTotal + 1>, kRows> t{};
    std::array<int, kRows> basis{};
    for (int r = 0; r < kRows; ++r) {
        for (int c = 0; c < kStruct; ++c) t[r][c] = system.matrix[r][c];
        t[r][kStruct + r] = 1.0;
        t[r][kTotal] = system.rhs[r];
        basis[r] = kStruct + r;
    }
    auto cost = [](int j) { return j >= kStruct ? 1.0 : 0.0; };

    constexpr double kReducedCostEps = 1e-10;
    constexpr double kPivotEps = 1e-11;

    int pivots = 0;
    while (true) {
        // reduced costs against the current basis; Bland: first negative index enters
        int enter = -1;
        for (int j = 0; j < kTotal && enter < 0; ++j) {
            double z = 0.0;
            for (int r = 0; r < kRows; ++r) z += cost(basis[r]) * t[r][j];
            if (cost(j) - z < -kReducedCostEps) enter = j;
        }
        if (enter < 0) break;

        int leave = -1;
        double best_ratio = 0.0;
        for (int r = 0; r < kRows; ++r) {
            if (t[r][enter] > kPivotEps) {
                const double ratio = t[r][kTotal] / t[r][enter];
                if (leave < 0 || ratio < best_ratio - 1e-15 ||
                    (std::abs(ratio - best_ratio) <= 1e-15 && basis[r] < basis[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
        }
        if (leave < 0) break;  // unbounded cannot happen here (objective >= 0); stop defensively

        const double pivot = t[leave][enter];
        for (int c = 0; c <= kTotal; ++c) t[leave][c] /= pivot;
        for (int r = 0; r < kRows; ++r) {
            if (r == leave) continue;
            const double f = t[r][enter];
            if (f == 0.0) continue;
            for (int c = 0; c <= kTotal; ++c) t[r][c] -= f * t[leave][c];
        }
        basis[leave] = enter;

        if (++pivots > pivot_budget) {
            std::array<double, kStruct> x{};
            for (int r = 0; r < kRows; ++r)
                if (basis[r] < kStruct) x[basis[r]] = t[r][kTotal];
            throw IterationLimit(pivots, linf_residual(system, x));
        }
    }

    std::array<double, kStruct> x{};
    double objective = 0.0;
    for (int r = 0; r < kRows; ++r) {
        const double v = std::max(0.0, t[r][kTotal]);
        if (basis[r] < kStruct)
            x[basis[r]] = v;
        else
            objective += v;
    }

    JdcResult result;
    result.tolerance = tolerance;
    result.residual = linf_residual(system, x);
    if (objective <= tolerance) {
        result.status = JdcStatus::Feasible;
        JointDistribution w;
        double sum = 0.0;
        for (int q = 0; q < 16; ++q) sum += x[q];
        for (int q = 0; q < 16; ++q) w.q[q] = sum > 0.0 ? x[q] / sum : 0.0;
        result.witness = w;
    } else {
        result.status = JdcStatus::Infeasible;
    }
    return result;
}

MsProjection project_to_ms(const CombinationTable& table) {
    const double a1 = (marginal_a(table.block(1, 1)) + marginal_a(table.block(1, 2))) / 2.0;
    const double a2 = (marginal_a(table.block(2, 1)) + marginal_a(table.block(2, 2))) / 2.0;
    const double b1 = (marginal_b(table.block(1, 1)) + marginal_b(table.block(2, 1))) / 2.0;
    const double b2 = (marginal_b(table.block(1, 2)) + marginal_b(table.block(2, 2))) / 2.0;

    MsProjection out;
    out.table.name = table.name;
    out.table.primes = table.primes;
    for (const auto& cond : all_conditions()) {
        const ConditionBlock& orig = table.blocks[cond.slot()];
        const double a = cond.a_index == 1 ? a1 : a2;
        const double b = cond.b_index == 1 ? b1 : b2;
        BlockFromStats built = block_from_stats(a, b, expectation(orig), cond);
        built.block.n = orig.n;
        out.table.blocks[cond.slot()] = built.block;
        if (built.clamped)
            out.clamps.push_back({cond, built.e_requested, built.e_applied});
    }
    return out;
}

bool verify(const JointDistribution& witness, const CombinationTable& table, double tol) {
    const CombinationTable reproduced = marginalize(witness, table.name);
    for (int slot = 0; slot < 4; ++slot) {
        for (int cell = 0; cell < 4; ++cell) {
            if (std::abs(reproduced.blocks[slot].p[cell] - table.blocks[slot].p[cell]) > tol)
                return false;
        }
    }
    return true;
}

}  // namespace concom
