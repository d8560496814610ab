#include "concom/inequalities.hpp"

#include <cmath>

namespace concom {

ChshReport chsh(const CombinationTable& table, double tolerance) {
    ChshReport rep;
    const double e11 = expectation(table.block(1, 1));
    const double e12 = expectation(table.block(1, 2));
    const double e21 = expectation(table.block(2, 1));
    const double e22 = expectation(table.block(2, 2));
    rep.e_values = {e11, e12, e21, e22};
    rep.variant_values = {
        e11 + e12 + e21 - e22,
        e11 - e12 + e21 + e22,
        e11 + e12 - e21 + e22,
        -e11 + e12 + e21 + e22,
    };
    rep.max_abs = 0.0;
    for (double s : rep.variant_values) rep.max_abs = std::max(rep.max_abs, std::abs(s));
    rep.violated = rep.max_abs > 2.0 + tolerance;
    return rep;
}

namespace {

std::array<double, 4> marginals_for_policy(const CombinationTable& t, MarginalPolicy policy) {
    if (policy.kind == MarginalPolicy::Kind::Average) {
        return {
            (marginal_a(t.block(1, 1)) + marginal_a(t.block(1, 2))) / 2.0,
            (marginal_a(t.block(2, 1)) + marginal_a(t.block(2, 2))) / 2.0,
            (marginal_b(t.block(1, 1)) + marginal_b(t.block(2, 1))) / 2.0,
            (marginal_b(t.block(1, 2)) + marginal_b(t.block(2, 2))) / 2.0,
        };
    }
    const int i0 = policy.condition.a_index;
    const int j0 = policy.condition.b_index;
    return {
        marginal_a(t.block(1, j0)),
        marginal_a(t.block(2, j0)),
        marginal_b(t.block(i0, 1)),
        marginal_b(t.block(i0, 2)),
    };
}

}  // namespace

BellChReport bell_ch(const CombinationTable& table, MarginalPolicy policy, double tolerance) {
    BellChReport rep;
    // Pr(Ai,Bj) is the joint (+,+) probability of block (i,j)
    const double p11 = table.block(1, 1).p[CellPP];
    const double p12 = table.block(1, 2).p[CellPP];
    const double p21 = table.block(2, 1).p[CellPP];
    const double p22 = table.block(2, 2).p[CellPP];
    const auto m = marginals_for_policy(table, policy);
    rep.marginals_used = m;
    rep.expressions = {
        p11 + p12 + p22 - p21 - m[0] - m[3],
        p21 + p22 + p12 - p11 - m[1] - m[3],
        p12 + p11 + p21 - p22 - m[0] - m[2],
        p22 + p21 + p11 - p12 - m[1] - m[2],
    };
    rep.satisfied = true;
    for (double x : rep.expressions) {
        if (x < -1.0 - tolerance || x > 0.0 + tolerance) rep.satisfied = false;
    }
    return rep;
}

double independence_residual(const CombinationTable& table) {
    double worst = 0.0;
    for (const auto& blk : table.blocks) {
        const double a = marginal_a(blk);
        const double b = marginal_b(blk);
        const std::array<double, 4> product = {a * b, a * (1.0 - b), (1.0 - a) * b,
                                               (1.0 - a) * (1.0 - b)};
        for (int c = 0; c < 4; ++c) worst = std::max(worst, std::abs(blk.p[c] - product[c]));
    }
    return worst;
}

}  // namespace concom
