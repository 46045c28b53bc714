#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gsdo/archive.hpp"
#include "gsdo/classifier.hpp"
#include "gsdo/differential_evolution.hpp"
#include "gsdo/rbf.hpp"

namespace gsdo {

/// The cheap stand-ins the subproblems optimize over, in normalized
/// coordinates on the unit box.
struct SurrogateModel {
    int dimension = 0;
    /// Number of quantifiable-constraint surrogates (m').
    std::size_t num_constraints = 0;
    /// Returns the objective surrogate and writes the constraint surrogates.
    std::function<double(const Vector&, std::span<double>)> evaluate;
    /// Classification constraint; an empty function means g_c is never binding.
    std::function<double(const Vector&)> classification;

    /// Borrows both arguments; they must outlive the returned model.
    static SurrogateModel borrow(const SurrogateSet& surrogates, const ClassificationConstraint& gc, int dimension);
};

/// P2: maximize z subject to g_j^s(x) >= z, z <= x_i <= 1 - z, z >= 0,
/// g_c(x) >= 0. Empty when the best point is infeasible or already archived.
/// The returned x is normalized and aux holds z.
std::optional<SubproblemSolution> solve_p2(const SurrogateModel& model, const Archive& archive, Rng& rng,
                                           const DeSettings& settings = {});

struct SpreadResult {
    Vector x;  // normalized
    /// Achieved minimum distance to the feasible points; 0 when the solution is
    /// infeasible or already archived.
    double delta = 0.0;
    bool feasible = false;
};

/// P3: maximize y subject to g_j^s(x) >= 0, |x - x_i|^2 >= y^2 for every
/// feasible archived point, g_c(x) >= 0. Throws ContractError without feasible points.
SpreadResult solve_p3(const SurrogateModel& model, const Archive& archive, Rng& rng, const DeSettings& settings = {});

/// P4 by multistart: n_starts independent solves of min s(x) subject to
/// g_j^s(x) >= 0 and g_c(x) >= 0. Feasible solutions, deduplicated within 1e-6,
/// ascending by surrogate objective (aux).
std::vector<SubproblemSolution> solve_p4_multistart(const SurrogateModel& model, Rng& rng, std::size_t n_starts,
                                                    const DeSettings& settings = {});

/// P5: P4 plus |x - x_i|^2 >= delta^2 for every feasible archived point.
/// Empty when infeasible.
std::optional<SubproblemSolution> solve_p5(const SurrogateModel& model, const Archive& archive, double delta, Rng& rng,
                                           const DeSettings& settings = {});

}  // namespace gsdo
