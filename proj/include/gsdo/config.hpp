#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "gsdo/classifier.hpp"
#include "gsdo/differential_evolution.hpp"

namespace gsdo {

/// Solver parameters. Fields left at 0 (or negative for k_global) take
/// dimension-dependent defaults when resolved.
struct SolverConfig {
    std::size_t budget = 0;                 // T_max; default budget_multiplier (d+1)
    std::size_t budget_multiplier = 0;      // 0 means 15
    std::size_t lhs_size = 0;               // T_LH; default 2(d+1)
    GcParams gc;                            // c1..c4 and k_neighbors
    double delta_r = 10.0;
    double delta_d = 100.0;
    std::size_t eta_max = 0;                // default d+1
    long k_global = -1;                     // default d+1
    double c_g = 0.5;
    double delta_min = 1e-5;
    std::size_t stage2_max_iterations = 0;  // K_max; default 5 eta_max
    std::size_t n_starts = 0;               // P4 multistart count; default min(10, d+2)
    DeSettings de;
    std::uint64_t seed = 1;

    /// Copy with every dimension-dependent default filled in.
    SolverConfig resolved(int dimension) const;

    /// Throws ContractError on an invalid resolved configuration.
    void validate(int dimension) const;
};

/// Reads key=value lines ('#' starts a comment) on top of `base`.
/// Throws std::invalid_argument on unknown keys or malformed values.
SolverConfig parse_config(std::istream& in, SolverConfig base = {});
SolverConfig load_config(const std::string& path, SolverConfig base = {});
void write_config(std::ostream& out, const SolverConfig& config);

/// Fills in the scenario's default budget multiplier (15 for Set1, 30 otherwise)
/// unless the budget or multiplier is already set.
SolverConfig with_scenario_budget(SolverConfig config, Scenario scenario);

}  // namespace gsdo
