#pragma once

// Synthetic experiments from known ground truth. The RNG pipeline is pinned
// for cross-platform bit-exact reproducibility: mt19937_64 engine, uniforms
// from the top 53 bits (u = ((x >> 11) + 1) * 2^-53, in (0,1]),
// exponentials by inverse CDF, categorical draws by CDF inversion.
// Per-condition streams are seeded with
// splitmix64(seed ^ (slot + 1) * 0x9E3779B97F4A7C15).

#include <cstdint>
#include <random>
#include <string_view>
#include <variant>
#include <vector>

#include "concom/ingest.hpp"
#include "concom/model.hpp"

namespace concom {

inline constexpr std::string_view kGeneratorId = "mt19937_64-u53";

// Ground truth behind a synthetic experiment. A joint model induces a table
// with exact marginal selectivity; a per-condition model need not satisfy it.
struct GroundTruth {
    std::variant<JointDistribution, std::array<ConditionBlock, 4>> model;
    std::uint64_t seed = 0;

    static GroundTruth joint(JointDistribution q, std::uint64_t seed = 0);
    static GroundTruth per_condition(std::array<ConditionBlock, 4> blocks, std::uint64_t seed = 0);
    static GroundTruth per_condition(const CombinationTable& table, std::uint64_t seed = 0);

    // the four condition blocks the model induces
    std::array<ConditionBlock, 4> condition_blocks() const;
};

// Block (i,j), cell (s,t) = sum of q over joint cells with a_i = s, b_j = t.
CombinationTable marginalize(const JointDistribution& q, const std::string& name = "joint");

// n i.i.d. draws per condition from the truth's condition blocks, in
// condition order (1,1), (1,2), (2,1), (2,2). Deterministic given seed.
std::vector<TrialRecord> sample_trials(const GroundTruth& truth, int n_per_condition,
                                       std::uint64_t seed,
                                       const std::string& combination = "synthetic");

// Uniform on the 15-simplex: 16 exponentials normalized to sum 1.
JointDistribution random_joint(std::uint64_t seed);

// --- seeded primitives shared by synth and the oracle suites ---------------

std::uint64_t splitmix64(std::uint64_t x);

class UnitRng {
  public:
    explicit UnitRng(std::uint64_t seed) : engine_(seed) {}
    // uniform in (0, 1], 53-bit resolution
    double next() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }
    double exponential() { return -std::log(next()); }
    // index into a probability vector by CDF inversion
    int categorical(const std::array<double, 4>& p);

  private:
    std::mt19937_64 engine_;
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace concom
