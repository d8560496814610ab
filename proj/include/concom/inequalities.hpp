#pragma once

// The two inequality systems: the four CHSH sign variants on the
// per-condition correlations, and the Bell/CH system on joint (+,+)
// probabilities and single-variable marginals. Under exact marginal
// selectivity each system is necessary and sufficient for the existence of
// a four-variable joint distribution.

#include <array>

#include "concom/model.hpp"

namespace concom {

struct ChshReport {
    std::array<double, 4> e_values{};       // E(A1,B1), E(A1,B2), E(A2,B1), E(A2,B2)
    std::array<double, 4> variant_values{}; // S1..S4, minus on E(A2,B2), E(A1,B2), E(A2,B1), E(A1,B1)
    double max_abs = 0.0;
    bool violated = false;                  // any |S| > 2 + tolerance; |S| = 2 exactly is not a violation
};

constexpr double kChshTolerance = 1e-9;

ChshReport chsh(const CombinationTable& table, double tolerance = kChshTolerance);

// How Pr(Ai), Pr(Bj) are obtained for the Bell/CH expressions. Under exact
// marginal selectivity every policy agrees; under empirical noise `Average`
// is the symmetric choice.
struct MarginalPolicy {
    enum class Kind { Average, Condition };
    Kind kind = Kind::Average;
    // for Kind::Condition: read Pr(Ai) from block (i, condition.b_index)
    // and Pr(Bj) from block (condition.a_index, j)
    PrimingCondition condition{1, 1};

    static MarginalPolicy average() { return {}; }
    static MarginalPolicy from_condition(int a_index, int b_index) {
        return {Kind::Condition, PrimingCondition{a_index, b_index}};
    }
};

struct BellChReport {
    std::array<double, 4> expressions{};    // middle terms of the four double inequalities
    bool satisfied = false;                 // all expressions in [-1 - tol, 0 + tol]
    std::array<double, 4> marginals_used{}; // Pr(A1), Pr(A2), Pr(B1), Pr(B2)
};

constexpr double kBellChTolerance = 1e-9;

BellChReport bell_ch(const CombinationTable& table, MarginalPolicy policy = MarginalPolicy::average(),
                     double tolerance = kBellChTolerance);

// Worst-case deviation from the independent product model
// Pr(Ai,Bj) = Pr(Ai)Pr(Bj), taken over all blocks and cells. 0 means the
// naive compositional model fits exactly.
double independence_residual(const CombinationTable& table);

}  // namespace concom
