#include "concom/selectivity.hpp"

#include <cmath>

namespace concom {

std::array<double, 4> marginal_diffs(const CombinationTable& table) {
    const auto& b11 = table.block(1, 1);
    const auto& b12 = table.block(1, 2);
    const auto& b21 = table.block(2, 1);
    const auto& b22 = table.block(2, 2);
    return {
        std::abs(marginal_a(b11) - marginal_a(b12)),
        std::abs(marginal_a(b21) - marginal_a(b22)),
        std::abs(marginal_b(b11) - marginal_b(b21)),
        std::abs(marginal_b(b12) - marginal_b(b22)),
    };
}

double chi_square_two_proportions(double p1, std::int64_t n1, double p2, std::int64_t n2,
                                  bool yates) {
    if (n1 <= 0 || n2 <= 0) throw InvalidSampleSize("chi-square needs n > 0 in both samples");
    const double dn1 = static_cast<double>(n1);
    const double dn2 = static_cast<double>(n2);
    const double pooled = (p1 * dn1 + p2 * dn2) / (dn1 + dn2);
    if (pooled <= 0.0 || pooled >= 1.0) return 0.0;
    const double inv = 1.0 / dn1 + 1.0 / dn2;
    double d = std::abs(p1 - p2);
    if (yates) d = std::max(0.0, d - inv / 2.0);
    return d * d / (pooled * (1.0 - pooled) * inv);
}

namespace {

// The four (p, n) sample pairs feeding each variable's test, in the same
// order as marginal_diffs.
struct SamplePair {
    double p1, p2;
    std::int64_t n1, n2;
};

std::array<SamplePair, 4> sample_pairs(const CombinationTable& table) {
    const auto& b11 = table.block(1, 1);
    const auto& b12 = table.block(1, 2);
    const auto& b21 = table.block(2, 1);
    const auto& b22 = table.block(2, 2);
    auto n = [](const ConditionBlock& b) { return b.n.value_or(0); };
    return {{
        {marginal_a(b11), marginal_a(b12), n(b11), n(b12)},
        {marginal_a(b21), marginal_a(b22), n(b21), n(b22)},
        {marginal_b(b11), marginal_b(b21), n(b11), n(b21)},
        {marginal_b(b12), marginal_b(b22), n(b12), n(b22)},
    }};
}

}  // namespace

MarginalSelectivityReport test_marginal_selectivity(const CombinationTable& table,
                                                    const SelectivityConfig& config) {
    for (const auto& blk : table.blocks) {
        if (!blk.n.has_value() || *blk.n <= 0)
            throw MissingSampleSizes("statistical marginal-selectivity test needs n on every block (table '" +
                                     table.name + "')");
    }
    MarginalSelectivityReport rep;
    rep.alpha = config.alpha;
    rep.critical_value = config.critical_value;
    rep.statistical = true;
    rep.diffs = marginal_diffs(table);
    const auto pairs = sample_pairs(table);
    rep.holds = true;
    for (int v = 0; v < 4; ++v) {
        rep.chi_squares[v] = chi_square_two_proportions(pairs[v].p1, pairs[v].n1, pairs[v].p2,
                                                        pairs[v].n2, config.yates);
        rep.per_variable_fail[v] = rep.chi_squares[v] > config.critical_value;
        if (rep.per_variable_fail[v]) rep.holds = false;
    }
    return rep;
}

MarginalSelectivityReport test_marginal_selectivity_strict(const CombinationTable& table,
                                                           const SelectivityConfig& config) {
    MarginalSelectivityReport rep;
    rep.alpha = config.alpha;
    rep.critical_value = config.critical_value;
    rep.statistical = false;
    rep.diffs = marginal_diffs(table);
    rep.holds = true;
    for (int v = 0; v < 4; ++v) {
        rep.chi_squares[v] = 0.0;
        rep.per_variable_fail[v] = rep.diffs[v] > config.strict_tolerance;
        if (rep.per_variable_fail[v]) rep.holds = false;
    }
    return rep;
}

}  // namespace concom
