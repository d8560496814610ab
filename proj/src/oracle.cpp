#include "concom/oracle.hpp"

#include <cmath>

#include "concom/inequalities.hpp"
#include "concom/selectivity.hpp"
#include "concom/synth.hpp"

namespace concom {

JdcSolver default_solver() {
    return [](const LpSystem& sys, double tol) { return solve(sys, tol); };
}

CombinationTable uniform_ms_table(std::uint64_t seed) {
    return marginalize(random_joint(seed), "uniform-" + std::to_string(seed));
}

namespace {

double uniform_in(UnitRng& rng, double lo, double hi) { return lo + (hi - lo) * rng.next(); }

CombinationTable build_ms_table(const std::array<double, 2>& ma, const std::array<double, 2>& mb,
                                const std::array<double, 4>& e, const std::string& name) {
    CombinationTable t;
    t.name = name;
    for (const auto& cond : all_conditions()) {
        const double a = ma[cond.a_index - 1];
        const double b = mb[cond.b_index - 1];
        t.blocks[cond.slot()] = block_from_stats(a, b, e[cond.slot()], cond).block;
    }
    return t;
}

}  // namespace

CombinationTable adversarial_ms_table(std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        UnitRng rng(derive_seed(seed, 0xADF0 + attempt));
        const std::array<double, 2> ma = {uniform_in(rng, 0.05, 0.95), uniform_in(rng, 0.05, 0.95)};
        const std::array<double, 2> mb = {uniform_in(rng, 0.05, 0.95), uniform_in(rng, 0.05, 0.95)};

        std::array<double, 4> e{};
        const bool push = rng.next() < 0.5;
        if (push) {
            // drive one CHSH variant toward its signed extreme; clamping in
            // block_from_stats keeps each block valid, so the achieved value
            // may or may not exceed 2
            const int variant = static_cast<int>(uniform_in(rng, 0.0, 4.0));
            const double strength = uniform_in(rng, 0.85, 1.0);
            for (const auto& cond : all_conditions()) {
                const int slot = cond.slot();
                const double sgn = slot == (3 - variant) ? -1.0 : 1.0;  // minus on one term
                const auto range =
                    feasible_expectation(ma[cond.a_index - 1], mb[cond.b_index - 1]);
                const double target = sgn * strength;
                e[slot] = std::clamp(target, range.lo, range.hi);
            }
        } else {
            for (const auto& cond : all_conditions()) {
                const auto range =
                    feasible_expectation(ma[cond.a_index - 1], mb[cond.b_index - 1]);
                e[cond.slot()] = uniform_in(rng, range.lo, range.hi);
            }
        }
        CombinationTable t = build_ms_table(ma, mb, e, "adversarial-" + std::to_string(seed));
        const double gap = std::abs(chsh(t).max_abs - 2.0);
        if (gap > 1e-12 && gap < 1e-4) continue;  // razor band: regenerate
        return t;
    }
}

CombinationTable noisy_table(std::uint64_t seed, double floor) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        UnitRng rng(derive_seed(seed, 0x7055 + attempt));
        CombinationTable t;
        t.name = "noisy-" + std::to_string(seed);
        for (const auto& cond : all_conditions()) {
            ConditionBlock blk;
            blk.condition = cond;
            double sum = 0.0;
            for (double& v : blk.p) {
                v = rng.exponential();
                sum += v;
            }
            for (double& v : blk.p) v /= sum;
            t.blocks[cond.slot()] = blk;
        }
        const auto diffs = marginal_diffs(t);
        if (*std::max_element(diffs.begin(), diffs.end()) > floor) return t;
    }
}

namespace {

void check_exact_ms_instance(const CombinationTable& table, const std::string& suite,
                             const OracleOptions& opt, const JdcSolver& solver,
                             OracleSummary& summary, bool must_be_feasible) {
    const ChshReport ch = chsh(table);
    const BellChReport bc = bell_ch(table);
    const JdcResult lp = solver(build_system(table), opt.lp_tolerance);
    const bool feasible = lp.status == JdcStatus::Feasible;

    auto fail = [&](const std::string& detail) {
        summary.counterexamples.push_back({suite, detail, table});
    };

    if (must_be_feasible && !feasible)
        fail("table marginalized from a joint distribution judged infeasible (residual " +
             std::to_string(lp.residual) + ")");
    if (bc.satisfied != feasible)
        fail(std::string("Bell/CH ") + (bc.satisfied ? "satisfied" : "unsatisfied") +
             " but LP " + (feasible ? "feasible" : "infeasible"));
    if (feasible && ch.violated)
        fail("LP feasible but max |CHSH| = " + std::to_string(ch.max_abs));
    if (!ch.violated && !bc.satisfied)
        fail("CHSH within bounds but Bell/CH unsatisfied on an exact-MS table");
    if (feasible) {
        if (!lp.witness || !verify(*lp.witness, table, 1e-6))
            fail("feasible witness does not marginalize back to the table at 1e-6");
    }
}

}  // namespace

OracleSummary run_oracle(const OracleOptions& options, const JdcSolver& solver) {
    OracleSummary summary;
    if (options.trials <= 0) throw Error("oracle needs trials > 0");

    for (int k = 0; k < options.trials; ++k) {
        const auto table = uniform_ms_table(derive_seed(options.seed, 0x0100 + k));
        check_exact_ms_instance(table, "fine-equivalence/uniform", options, solver, summary, true);
        ++summary.uniform_trials;
    }
    for (int k = 0; k < options.trials; ++k) {
        const auto table = adversarial_ms_table(derive_seed(options.seed, 0x0200 + k));
        if (chsh(table).violated) ++summary.adversarial_violations;
        check_exact_ms_instance(table, "fine-equivalence/adversarial", options, solver, summary,
                                false);
        ++summary.adversarial_trials;
    }
    for (int k = 0; k < options.trials; ++k) {
        const auto table = noisy_table(derive_seed(options.seed, 0x0300 + k), options.ms_diff_floor);
        const JdcResult lp = solver(build_system(table), options.lp_tolerance);
        if (lp.status != JdcStatus::Infeasible)
            summary.counterexamples.push_back(
                {"ms-necessity",
                 "marginal diff above " + std::to_string(options.ms_diff_floor) +
                     " but LP judged feasible",
                 table});
        ++summary.necessity_trials;
    }
    return summary;
}

}  // namespace concom
