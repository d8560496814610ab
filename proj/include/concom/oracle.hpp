#pragma once

// Executable property suites for the joint-existence equivalences. On exact
// marginal-selectivity tables, [Bell/CH satisfied] <=> [LP feasible] and
// [LP feasible] => [all |CHSH| <= 2]; any counterexample is an
// implementation bug. Also checks the necessity direction: tables with a
// real marginal-selectivity gap never admit a joint distribution.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "concom/jdc.hpp"
#include "concom/model.hpp"

namespace concom {

struct OracleOptions {
    int trials = 1000;
    std::uint64_t seed = 1;
    double lp_tolerance = kLpTolerance;
    double ms_diff_floor = 0.05;  // minimum marginal gap for the necessity suite
};

struct Counterexample {
    std::string suite;
    std::string detail;
    CombinationTable table;
};

struct OracleSummary {
    int uniform_trials = 0;
    int adversarial_trials = 0;
    int adversarial_violations = 0;  // how many adversarial instances actually exceed the bound
    int necessity_trials = 0;
    std::vector<Counterexample> counterexamples;

    bool clean() const { return counterexamples.empty(); }
};

// Injectable solver so the harness itself can be tested against a broken one.
using JdcSolver = std::function<JdcResult(const LpSystem&, double)>;

JdcSolver default_solver();

// Runs all three suites with `options.trials` instances each.
OracleSummary run_oracle(const OracleOptions& options, const JdcSolver& solver = default_solver());

// Instance generators, exposed for reuse by tests.
// Exact-MS table sampled by marginalizing a simplex-uniform joint.
CombinationTable uniform_ms_table(std::uint64_t seed);
// Exact-MS table with random marginals and expectations, where roughly half
// the instances are pushed past the CHSH bound. Instances landing in the
// razor band |max|S|| within (1e-12, 1e-4) of 2 are regenerated: the three
// procedures compared carry different tolerances and cannot be expected to
// agree on violations smaller than the tolerance gap.
CombinationTable adversarial_ms_table(std::uint64_t seed);
// Independent per-condition blocks, resampled until some marginal diff
// exceeds `floor`.
CombinationTable noisy_table(std::uint64_t seed, double floor);

}  // namespace concom
