#include "gsdo/subproblems.hpp"

#include <algorithm>
#include <cmath>

namespace gsdo {

SurrogateModel SurrogateModel::borrow(const SurrogateSet& surrogates, const ClassificationConstraint& gc,
                                      int dimension) {
    SurrogateModel m;
    m.dimension = dimension;
    m.num_constraints = surrogates.num_constraints();
    m.evaluate = [&surrogates](const Vector& x, std::span<double> g) { return surrogates.evaluate(x, g); };
    if (gc.active()) m.classification = [&gc](const Vector& x) { return gc(x); };
    return m;
}

namespace {

constexpr double kMultistartDuplicateTolerance = 1e-6;

std::vector<Vector> feasible_points(const Archive& archive) {
    std::vector<Vector> out;
    for (std::size_t i : archive.indices(PointClass::F)) out.push_back(archive[i].normalized);
    return out;
}

double surrogate_values(const SurrogateModel& model, const Vector& x, std::span<double> g) {
    return model.evaluate ? model.evaluate(x, g) : 0.0;
}

double classification_value(const SurrogateModel& model, const Vector& x) {
    return model.classification ? model.classification(x) : 1.0;
}

/// P4/P5 share everything but the distance constraints.
DeProblem surrogate_minimization(const SurrogateModel& model, const std::vector<Vector>* far_from, double delta) {
    const std::size_t m = model.num_constraints;
    const std::size_t nf = far_from ? far_from->size() : 0;
    DeProblem p;
    p.num_constraints = m + nf + 1;
    p.evaluate = [&model, far_from, delta, m, nf](const Vector& x, std::span<double> g) {
        const double s = surrogate_values(model, x, g.first(m));
        for (std::size_t i = 0; i < nf; ++i) g[m + i] = ((*far_from)[i] - x).squaredNorm() - delta * delta;
        g[m + nf] = classification_value(model, x);
        return s;
    };
    return p;
}

}  // namespace

std::optional<SubproblemSolution> solve_p2(const SurrogateModel& model, const Archive& archive, Rng& rng,
                                           const DeSettings& settings) {
    const int d = archive.dimension();
    const std::size_t m = model.num_constraints;

    // Decision vector (x, z).
    DeProblem p;
    p.num_constraints = m + 2 * static_cast<std::size_t>(d) + 1;
    p.evaluate = [&model, m, d](const Vector& xz, std::span<double> g) {
        const Vector x = xz.head(d);
        const double z = xz[d];
        surrogate_values(model, x, g.first(m));
        for (std::size_t j = 0; j < m; ++j) g[j] -= z;
        for (int k = 0; k < d; ++k) {
            g[m + 2 * static_cast<std::size_t>(k)] = x[k] - z;
            g[m + 2 * static_cast<std::size_t>(k) + 1] = 1.0 - x[k] - z;
        }
        g[m + 2 * static_cast<std::size_t>(d)] = classification_value(model, x);
        return -z;
    };

    Vector lower = Vector::Zero(d + 1);
    Vector upper = Vector::Ones(d + 1);
    upper[d] = 0.5;
    const auto sol = de_minimize(p, lower, upper, rng, settings);
    if (!sol.feasible) return std::nullopt;
    Vector x = sol.x.head(d);
    if (archive.contains_normalized(x)) return std::nullopt;
    return SubproblemSolution{std::move(x), sol.x[d], true, sol.constraint_violation};
}

SpreadResult solve_p3(const SurrogateModel& model, const Archive& archive, Rng& rng, const DeSettings& settings) {
    const auto feasible = feasible_points(archive);
    if (feasible.empty()) throw ContractError("solve_p3: no feasible points");
    const int d = archive.dimension();
    const std::size_t m = model.num_constraints;
    const std::size_t nf = feasible.size();

    // Decision vector (x, y).
    DeProblem p;
    p.num_constraints = m + nf + 1;
    p.evaluate = [&model, &feasible, m, nf, d](const Vector& xy, std::span<double> g) {
        const Vector x = xy.head(d);
        const double y = xy[d];
        surrogate_values(model, x, g.first(m));
        for (std::size_t i = 0; i < nf; ++i) g[m + i] = (feasible[i] - x).squaredNorm() - y * y;
        g[m + nf] = classification_value(model, x);
        return -y;
    };

    Vector lower = Vector::Zero(d + 1);
    Vector upper = Vector::Ones(d + 1);
    upper[d] = std::sqrt(static_cast<double>(d));
    const auto sol = de_minimize(p, lower, upper, rng, settings);

    SpreadResult out;
    out.x = sol.x.head(d);
    out.feasible = sol.feasible;
    if (sol.feasible && !archive.contains_normalized(out.x)) out.delta = std::max(0.0, sol.x[d]);
    return out;
}

std::vector<SubproblemSolution> solve_p4_multistart(const SurrogateModel& model, Rng& rng, std::size_t n_starts,
                                                    const DeSettings& settings) {
    if (!model.evaluate) throw ContractError("solve_p4_multistart: no objective surrogate");
    if (model.dimension <= 0) throw ContractError("solve_p4_multistart: model dimension not set");
    const int d = model.dimension;
    const auto p = surrogate_minimization(model, nullptr, 0.0);

    std::vector<SubproblemSolution> pool;
    for (std::size_t s = 0; s < n_starts; ++s) {
        auto sol = de_minimize(p, Vector::Zero(d), Vector::Ones(d), rng, settings);
        if (!sol.feasible) continue;
        const bool seen = std::any_of(pool.begin(), pool.end(), [&](const SubproblemSolution& q) {
            return (q.x - sol.x).norm() <= kMultistartDuplicateTolerance;
        });
        if (!seen) pool.push_back(std::move(sol));
    }
    std::stable_sort(pool.begin(), pool.end(),
                     [](const SubproblemSolution& a, const SubproblemSolution& b) { return a.aux < b.aux; });
    return pool;
}

std::optional<SubproblemSolution> solve_p5(const SurrogateModel& model, const Archive& archive, double delta, Rng& rng,
                                           const DeSettings& settings) {
    if (!(delta > 0.0)) throw ContractError("solve_p5: delta must be positive");
    const auto feasible = feasible_points(archive);
    const int d = archive.dimension();
    const auto p = surrogate_minimization(model, &feasible, delta);
    const auto sol = de_minimize(p, Vector::Zero(d), Vector::Ones(d), rng, settings);
    if (!sol.feasible) return std::nullopt;
    return sol;
}

}  // namespace gsdo
