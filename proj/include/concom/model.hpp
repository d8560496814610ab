#pragma once

// Core domain types for two-concept interpretation experiments: one 2x2
// outcome distribution per priming condition, four conditions per
// combination, and the 16-cell joint distribution over sign assignments.
//
// Cell order convention is fixed everywhere as (A outcome, B outcome) =
// (+,+), (+,-), (-,+), (-,-). All types are immutable values and all
// operations are pure functions.

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "concom/errors.hpp"

namespace concom {

// +1: the concept was interpreted in the primed sense; -1: it was not.
enum class SenseOutcome : int { InPrimedSense = +1, OtherSense = -1 };

inline int sign_of(SenseOutcome o) { return static_cast<int>(o); }
SenseOutcome outcome_from_sign(int sign);

// Which sense of each concept was primed: index 1 = dominant, 2 = subordinate.
struct PrimingCondition {
    int a_index = 1;
    int b_index = 1;

    bool valid() const { return (a_index == 1 || a_index == 2) && (b_index == 1 || b_index == 2); }
    // 0..3, ordered (1,1), (1,2), (2,1), (2,2)
    int slot() const { return (a_index - 1) * 2 + (b_index - 1); }
    std::string label() const { return "a" + std::to_string(a_index) + "b" + std::to_string(b_index); }
    friend bool operator==(const PrimingCondition&, const PrimingCondition&) = default;
};

std::array<PrimingCondition, 4> all_conditions();

enum Cell : int { CellPP = 0, CellPM = 1, CellMP = 2, CellMM = 3 };

inline int cell_index(int a_sign, int b_sign) { return (a_sign < 0 ? 2 : 0) + (b_sign < 0 ? 1 : 0); }
inline int cell_a_sign(int cell) { return cell & 2 ? -1 : +1; }
inline int cell_b_sign(int cell) { return cell & 1 ? -1 : +1; }

// Raw trial counts for one condition, precursor to a ConditionBlock.
struct CountBlock {
    std::array<std::uint64_t, 4> n{};  // cell order (pp, pm, mp, mm)
    PrimingCondition condition;

    std::uint64_t total() const { return n[0] + n[1] + n[2] + n[3]; }
};

constexpr double kBlockSumTolerance = 1e-9;

// One condition's outcome distribution. Invariant: cells >= 0 and sum to 1
// within kBlockSumTolerance.
struct ConditionBlock {
    std::array<double, 4> p{};  // cell order (pp, pm, mp, mm)
    PrimingCondition condition;
    std::optional<std::int64_t> n;  // sample size, when known

    bool valid(double tol = kBlockSumTolerance) const;
};

// The full 4x4 structure: one block per priming condition.
struct CombinationTable {
    std::string name;
    std::array<ConditionBlock, 4> blocks{};  // indexed by PrimingCondition::slot()
    std::optional<std::array<std::string, 4>> primes;  // a1, a2, b1, b2

    const ConditionBlock& block(int a_index, int b_index) const {
        return blocks[PrimingCondition{a_index, b_index}.slot()];
    }
    ConditionBlock& block(int a_index, int b_index) {
        return blocks[PrimingCondition{a_index, b_index}.slot()];
    }
    bool valid(double tol = kBlockSumTolerance) const;
};

// 16 nonnegative cells over sign assignments to (A1, A2, B1, B2), summing
// to 1. Index: bit 3 = A1 negative, bit 2 = A2 negative, bit 1 = B1
// negative, bit 0 = B2 negative (so index 0 is (+,+,+,+)).
struct JointDistribution {
    std::array<double, 16> q{};

    static int index(int a1, int a2, int b1, int b2) {
        return (a1 < 0 ? 8 : 0) + (a2 < 0 ? 4 : 0) + (b1 < 0 ? 2 : 0) + (b2 < 0 ? 1 : 0);
    }
    // sign of variable `var` (0=A1, 1=A2, 2=B1, 3=B2) in cell `idx`
    static int sign(int idx, int var) { return (idx >> (3 - var)) & 1 ? -1 : +1; }
    bool valid(double tol = kBlockSumTolerance) const;
};

// --- elementary operations -------------------------------------------------

// Counts to probabilities; throws ZeroTrials on an empty block.
ConditionBlock normalize(const CountBlock& counts);

// Pr(Ai = +1) under this condition
inline double marginal_a(const ConditionBlock& b) { return b.p[CellPP] + b.p[CellPM]; }
// Pr(Bj = +1) under this condition
inline double marginal_b(const ConditionBlock& b) { return b.p[CellPP] + b.p[CellMP]; }
// correlation E(Ai,Bj) = p++ + p-- - p+- - p-+, in [-1, 1]
inline double expectation(const ConditionBlock& b) {
    return b.p[CellPP] + b.p[CellMM] - b.p[CellPM] - b.p[CellMP];
}

// Feasible expectation interval for a block with marginals (a, b); outside
// it some cell would be negative.
struct ExpectationRange {
    double lo;
    double hi;
};
ExpectationRange feasible_expectation(double a, double b);

struct BlockFromStats {
    ConditionBlock block;
    bool clamped = false;
    double e_requested = 0.0;
    double e_applied = 0.0;
};

// Inverse parameterization: build the unique block with marginals (a, b)
// and expectation e. e is clamped to the nearest feasible value when the
// exact one would produce a negative cell; the clamp is reported, never an
// error.
BlockFromStats block_from_stats(double a, double b, double e,
                                PrimingCondition condition = PrimingCondition{1, 1});

}  // namespace concom
