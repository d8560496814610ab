#include "concom/model.hpp"

#include <algorithm>
#include <cmath>

namespace concom {

SenseOutcome outcome_from_sign(int sign) {
    if (sign == +1) return SenseOutcome::InPrimedSense;
    if (sign == -1) return SenseOutcome::OtherSense;
    throw Error("sense outcome must be +1 or -1, got " + std::to_string(sign));
}

std::array<PrimingCondition, 4> all_conditions() {
    return {PrimingCondition{1, 1}, PrimingCondition{1, 2}, PrimingCondition{2, 1},
            PrimingCondition{2, 2}};
}

bool ConditionBlock::valid(double tol) const {
    if (!condition.valid()) return false;
    double sum = 0.0;
    for (double v : p) {
        if (!(v >= 0.0) || !std::isfinite(v)) return false;
        sum += v;
    }
    return std::abs(sum - 1.0) <= tol;
}

bool CombinationTable::valid(double tol) const {
    for (const auto& c : all_conditions()) {
        const ConditionBlock& b = blocks[c.slot()];
        if (b.condition != c || !b.valid(tol)) return false;
    }
    return true;
}

bool JointDistribution::valid(double tol) const {
    double sum = 0.0;
    for (double v : q) {
        if (!(v >= 0.0) || !std::isfinite(v)) return false;
        sum += v;
    }
    return std::abs(sum - 1.0) <= tol;
}

ConditionBlock normalize(const CountBlock& counts) {
    const std::uint64_t total = counts.total();
    if (total == 0)
        throw ZeroTrials("condition " + counts.condition.label() + " has zero trials");
    ConditionBlock out;
    out.condition = counts.condition;
    out.n = static_cast<std::int64_t>(total);
    for (int i = 0; i < 4; ++i)
        out.p[i] = static_cast<double>(counts.n[i]) / static_cast<double>(total);
    return out;
}

ExpectationRange feasible_expectation(double a, double b) {
    // Cell nonnegativity: pp >= 0 gives e >= 1-2a-2b, mm >= 0 gives
    // e >= 2a+2b-3, pm >= 0 gives e <= 1+2a-2b, mp >= 0 gives e <= 1-2a+2b.
    double lo = std::max({-1.0, 1.0 - 2.0 * a - 2.0 * b, 2.0 * a + 2.0 * b - 3.0});
    double hi = std::min({1.0, 1.0 + 2.0 * a - 2.0 * b, 1.0 - 2.0 * a + 2.0 * b});
    return {lo, hi};
}

BlockFromStats block_from_stats(double a, double b, double e, PrimingCondition condition) {
    if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0))
        throw Error("marginals must lie in [0,1]");
    if (!(e >= -1.0 && e <= 1.0)) throw Error("expectation must lie in [-1,1]");

    const ExpectationRange r = feasible_expectation(a, b);
    const double e2 = std::clamp(e, r.lo, r.hi);

    ConditionBlock blk;
    blk.condition = condition;
    const double pp = (e2 - 1.0 + 2.0 * a + 2.0 * b) / 4.0;
    blk.p[CellPP] = pp;
    blk.p[CellPM] = a - pp;
    blk.p[CellMP] = b - pp;
    blk.p[CellMM] = 1.0 - a - b + pp;
    // boundary clamps can leave a cell at -1e-17; clip the dust
    for (double& v : blk.p) {
        if (v < 0.0 && v > -1e-12) v = 0.0;
    }

    BlockFromStats out;
    out.block = blk;
    out.e_requested = e;
    out.e_applied = e2;
    out.clamped = e2 != e;
    return out;
}

}  // namespace concom
