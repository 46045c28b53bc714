#include "gsdo/differential_evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gsdo {

std::size_t DeSettings::population_for(std::size_t n) const {
    return population != 0 ? population : std::max<std::size_t>(20, 10 * n);
}

std::size_t DeSettings::budget_for(std::size_t n) const { return budget != 0 ? budget : budget_per_variable * n; }

double total_violation(std::span<const double> g) {
    double v = 0.0;
    for (double gj : g) {
        if (gj < 0.0) v -= gj;
    }
    return v;
}

namespace {

struct Fitness {
    double f = 0.0;
    double violation = 0.0;

    bool feasible() const { return violation <= kSubproblemFeasibilityTolerance; }
};

/// Feasibility rule: is a at least as good as b?
bool not_worse(const Fitness& a, const Fitness& b) {
    if (a.feasible() != b.feasible()) return a.feasible();
    if (a.feasible()) return a.f <= b.f;
    return a.violation <= b.violation;
}

bool strictly_better(const Fitness& a, const Fitness& b) { return not_worse(a, b) && !not_worse(b, a); }

}  // namespace

SubproblemSolution de_minimize(const DeProblem& problem, const Vector& lower, const Vector& upper, Rng& rng,
                               const DeSettings& settings) {
    const auto n = static_cast<std::size_t>(lower.size());
    if (n == 0 || upper.size() != lower.size()) throw ContractError("de_minimize: bad bounds");
    const std::size_t np = settings.population_for(n);
    const std::size_t budget = settings.budget_for(n);
    if (np < 4) throw ContractError("de_minimize: population must hold at least 4 individuals");
    if (budget < np) throw ContractError("de_minimize: budget smaller than population");

    std::vector<double> g(problem.num_constraints);
    auto assess = [&](const Vector& x) {
        Fitness fit;
        fit.f = problem.evaluate(x, g);
        fit.violation = total_violation(g);
        // NaN objectives lose every comparison against finite ones.
        if (!std::isfinite(fit.f)) fit.f = std::numeric_limits<double>::infinity();
        if (!std::isfinite(fit.violation)) fit.violation = std::numeric_limits<double>::infinity();
        return fit;
    };

    std::vector<Vector> pop(np, Vector(static_cast<Eigen::Index>(n)));
    std::vector<Fitness> fit(np);
    for (std::size_t i = 0; i < np; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const auto kk = static_cast<Eigen::Index>(k);
            pop[i][kk] = lower[kk] + uniform01(rng) * (upper[kk] - lower[kk]);
        }
        fit[i] = assess(pop[i]);
    }
    std::size_t evals = np;

    std::size_t best = 0;
    for (std::size_t i = 1; i < np; ++i) {
        if (strictly_better(fit[i], fit[best])) best = i;
    }

    Vector trial(static_cast<Eigen::Index>(n));
    while (evals < budget) {
        for (std::size_t i = 0; i < np && evals < budget; ++i) {
            std::size_t r1, r2, r3;
            do r1 = uniform_index(rng, np); while (r1 == i);
            do r2 = uniform_index(rng, np); while (r2 == i || r2 == r1);
            do r3 = uniform_index(rng, np); while (r3 == i || r3 == r1 || r3 == r2);
            const std::size_t jrand = uniform_index(rng, n);

            for (std::size_t k = 0; k < n; ++k) {
                const auto kk = static_cast<Eigen::Index>(k);
                if (k == jrand || uniform01(rng) < settings.CR) {
                    double v = pop[r1][kk] + settings.F * (pop[r2][kk] - pop[r3][kk]);
                    // Bounce back between the parent and the violated bound.
                    if (v < lower[kk])
                        v = lower[kk] + uniform01(rng) * (pop[i][kk] - lower[kk]);
                    else if (v > upper[kk])
                        v = upper[kk] - uniform01(rng) * (upper[kk] - pop[i][kk]);
                    trial[kk] = v;
                } else {
                    trial[kk] = pop[i][kk];
                }
            }

            const Fitness tf = assess(trial);
            ++evals;
            if (not_worse(tf, fit[i])) {
                pop[i] = trial;
                fit[i] = tf;
                if (strictly_better(tf, fit[best]) || i == best) best = i;
            }
        }

        bool converged = true;
        double fmin = fit[0].f, fmax = fit[0].f;
        for (const auto& fi : fit) {
            if (!fi.feasible()) {
                converged = false;
                break;
            }
            fmin = std::min(fmin, fi.f);
            fmax = std::max(fmax, fi.f);
        }
        if (converged && fmax - fmin <= 1e-12 * std::max(1.0, std::abs(fmin))) break;
    }

    return SubproblemSolution{pop[best], fit[best].f, fit[best].feasible(), fit[best].violation};
}

SubproblemSolution de_minimize(const ScalarFunction& objective, const std::vector<ScalarFunction>& constraints,
                               const Vector& lower, const Vector& upper, Rng& rng, const DeSettings& settings) {
    DeProblem p;
    p.num_constraints = constraints.size();
    p.evaluate = [&](const Vector& x, std::span<double> g) {
        for (std::size_t j = 0; j < constraints.size(); ++j) g[j] = constraints[j](x);
        return objective(x);
    };
    return de_minimize(p, lower, upper, rng, settings);
}

}  // namespace gsdo
