#include "concom/synth.hpp"

#include <cmath>

namespace concom {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ (stream + 1) * 0x9E3779B97F4A7C15ULL);
}

int UnitRng::categorical(const std::array<double, 4>& p) {
    const double u = next();
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) {
        acc += p[i];
        if (u <= acc) return i;
    }
    return 3;
}

GroundTruth GroundTruth::joint(JointDistribution q, std::uint64_t seed) {
    return {std::move(q), seed};
}

GroundTruth GroundTruth::per_condition(std::array<ConditionBlock, 4> blocks, std::uint64_t seed) {
    return {std::move(blocks), seed};
}

GroundTruth GroundTruth::per_condition(const CombinationTable& table, std::uint64_t seed) {
    return {table.blocks, seed};
}

std::array<ConditionBlock, 4> GroundTruth::condition_blocks() const {
    if (const auto* q = std::get_if<JointDistribution>(&model))
        return marginalize(*q).blocks;
    return std::get<std::array<ConditionBlock, 4>>(model);
}

CombinationTable marginalize(const JointDistribution& q, const std::string& name) {
    CombinationTable table;
    table.name = name;
    for (const auto& cond : all_conditions()) {
        ConditionBlock blk;
        blk.condition = cond;
        const int a_var = cond.a_index - 1;
        const int b_var = 2 + (cond.b_index - 1);
        for (int idx = 0; idx < 16; ++idx) {
            const int cell = cell_index(JointDistribution::sign(idx, a_var),
                                        JointDistribution::sign(idx, b_var));
            blk.p[cell] += q.q[idx];
        }
        table.blocks[cond.slot()] = blk;
    }
    return table;
}

std::vector<TrialRecord> sample_trials(const GroundTruth& truth, int n_per_condition,
                                       std::uint64_t seed, const std::string& combination) {
    if (n_per_condition <= 0) throw Error("n_per_condition must be positive");
    const auto blocks = truth.condition_blocks();
    std::vector<TrialRecord> records;
    records.reserve(static_cast<std::size_t>(n_per_condition) * 4);
    for (const auto& cond : all_conditions()) {
        UnitRng rng(derive_seed(seed, static_cast<std::uint64_t>(cond.slot())));
        const ConditionBlock& blk = blocks[cond.slot()];
        for (int k = 0; k < n_per_condition; ++k) {
            const int cell = rng.categorical(blk.p);
            TrialRecord rec;
            rec.combination = combination;
            rec.condition = cond;
            rec.a_outcome = outcome_from_sign(cell_a_sign(cell));
            rec.b_outcome = outcome_from_sign(cell_b_sign(cell));
            records.push_back(std::move(rec));
        }
    }
    return records;
}

JointDistribution random_joint(std::uint64_t seed) {
    UnitRng rng(seed);
    JointDistribution q;
    double sum = 0.0;
    for (double& v : q.q) {
        v = rng.exponential();
        sum += v;
    }
    for (double& v : q.q) v /= sum;
    return q;
}

}  // namespace concom
