#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "gsdo/problem.hpp"
#include "gsdo/random.hpp"

namespace gsdo {

/// A returned solution counts as feasible when its total violation is at most this.
inline constexpr double kSubproblemFeasibilityTolerance = 1e-8;

struct DeSettings {
    /// 0 selects max(20, 10 n) for n decision variables.
    std::size_t population = 0;
    double F = 0.7;
    double CR = 0.9;
    /// Evaluations per decision variable when `budget` is 0.
    std::size_t budget_per_variable = 4000;
    /// Total evaluation budget; 0 selects budget_per_variable * n.
    std::size_t budget = 0;

    std::size_t population_for(std::size_t n) const;
    std::size_t budget_for(std::size_t n) const;
};

struct SubproblemSolution {
    Vector x;
    /// z for P2, y (= Delta) for P3, objective value otherwise.
    double aux = 0.0;
    bool feasible = false;
    double constraint_violation = 0.0;

    bool operator==(const SubproblemSolution&) const = default;
};

/// Cheap constrained problem for the subsolver: returns the objective and
/// writes `num_constraints` values, each feasible when >= 0.
struct DeProblem {
    std::size_t num_constraints = 0;
    std::function<double(const Vector&, std::span<double>)> evaluate;
};

/// DE/rand/1/bin with feasibility-rule selection: feasible beats infeasible,
/// smaller total violation wins among infeasible, smaller objective among
/// feasible. Returns the best individual seen. Stops early once the whole
/// population is feasible and its objective values agree to 1e-12 relative.
SubproblemSolution de_minimize(const DeProblem& problem, const Vector& lower, const Vector& upper, Rng& rng,
                               const DeSettings& settings = {});

SubproblemSolution de_minimize(const ScalarFunction& objective, const std::vector<ScalarFunction>& constraints,
                               const Vector& lower, const Vector& upper, Rng& rng, const DeSettings& settings = {});

/// Sum of max(0, -g_j).
double total_violation(std::span<const double> g);

}  // namespace gsdo
