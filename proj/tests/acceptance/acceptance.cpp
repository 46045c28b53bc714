// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "gsdo/bench.hpp"
#include "gsdo/rbf.hpp"
#include "gsdo/solver.hpp"
#include "gsdo/subproblems.hpp"
#include "gsdo/testbed.hpp"

using namespace gsdo;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

Vector vec(std::initializer_list<double> v) {
    Vector out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) out[i++] = x;
    return out;
}

Matrix random_points(int n, int d, Rng& rng) {
    Matrix p(n, d);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < d; ++k) p(i, k) = uniform01(rng);
    return p;
}

// 1. RBF interpolation and affine reproduction.
void rbf_oracles(Outcome& out) {
    Rng rng(2024);
    const int dims[] = {1, 2, 5};
    double worst_residual = 0.0, worst_gamma = 0.0, worst_affine = 0.0;
    for (int fit = 0; fit < 100; ++fit) {
        const int d = dims[fit % 3];
        const int n = d + 1 + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(40 - d)));
        const Matrix p = random_points(n, d, rng);
        Vector v(n);
        for (int i = 0; i < n; ++i) v[i] = std::sin(4 * p(i, 0)) + std::exp(-p.row(i).squaredNorm());
        const auto m = fit_rbf(p, v);
        for (int i = 0; i < n; ++i) worst_residual = std::max(worst_residual, std::abs(m(p.row(i).transpose()) - v[i]));

        const Vector a = random_points(1, d, rng).row(0).transpose() * 4.0 - Vector::Constant(d, 2.0);
        const double b = uniform01(rng) - 0.5;
        Vector lin = p * a;
        lin.array() += b;
        const auto ma = fit_rbf(p, lin);
        worst_gamma = std::max(worst_gamma, ma.gamma().cwiseAbs().maxCoeff());
        for (int t = 0; t < 20; ++t) {
            const Vector x = random_points(1, d, rng).row(0).transpose();
            worst_affine = std::max(worst_affine, std::abs(ma(x) - (a.dot(x) + b)));
        }
    }
    out.detail << "max residual " << worst_residual << ", max|gamma| " << worst_gamma << ", affine error "
               << worst_affine;
    out.check(worst_residual <= 1e-8, "residual <= 1e-8");
    out.check(worst_gamma <= 1e-8, "max|gamma| <= 1e-8");
    out.check(worst_affine <= 1e-6, "affine error <= 1e-6");
}

SurrogateModel toy_model(int d, std::function<double(const Vector&)> s,
                         std::vector<std::function<double(const Vector&)>> g = {}) {
    SurrogateModel m;
    m.dimension = d;
    m.num_constraints = g.size();
    m.evaluate = [s, g](const Vector& x, std::span<double> out) {
        for (std::size_t j = 0; j < g.size(); ++j) out[j] = g[j](x);
        return s ? s(x) : 0.0;
    };
    return m;
}

Archive feasible_archive(int d, const std::vector<Vector>& pts) {
    Archive a(Vector::Zero(d), Vector::Ones(d), {});
    for (const auto& x : pts) {
        EvaluationOutcome o;
        o.objective = 0.0;
        a.filter_point(x, o);
    }
    return a;
}

// 2. DE and subproblem oracles.
void subsolver_oracles(Outcome& out) {
    auto parabola = [](const Vector& x) { return (x[0] - 0.3) * (x[0] - 0.3); };
    DeSettings de2000;
    de2000.budget = 2000;
    Rng rng(7);

    const auto s1 = de_minimize(parabola, {}, vec({0}), vec({1}), rng, de2000);
    out.check(std::abs(s1.x[0] - 0.3) <= 1e-3, "DE unconstrained parabola");
    const auto s2 = de_minimize(parabola, {[](const Vector& x) { return x[0] - 0.7; }}, vec({0}), vec({1}), rng, de2000);
    out.check(s2.feasible && std::abs(s2.x[0] - 0.7) <= 1e-3, "DE constraint x >= 0.7");
    DeSettings tiny;
    tiny.budget = tiny.population_for(1);
    const auto s3 = de_minimize(parabola, {[](const Vector& x) { return x[0] - 0.5; }}, vec({0}), vec({1}), rng, tiny);
    out.check(s3.feasible == (s3.constraint_violation <= kSubproblemFeasibilityTolerance) &&
                  std::abs(s3.constraint_violation - std::max(0.0, 0.5 - s3.x[0])) <= 1e-15,
              "DE budget = population");

    const double tol = 5e-2;
    const auto empty2 = feasible_archive(2, {});
    const auto p2 = solve_p2(toy_model(2, {}, {[](const Vector&) { return 1.0; }}), empty2, rng);
    out.check(p2 && std::abs(p2->aux - 0.5) <= tol && (p2->x - vec({0.5, 0.5})).norm() <= tol, "P2 constant surrogate");
    const auto p2b = solve_p2(toy_model(2, {}), empty2, rng);
    out.check(p2b && std::abs(p2b->aux - 0.5) <= tol, "P2 without constraints");

    const auto p3a = solve_p3(toy_model(2, {}), feasible_archive(2, {vec({0.5, 0.5})}), rng);
    out.check(std::abs(p3a.delta - std::sqrt(0.5)) <= tol, "P3 from the center");
    const auto p3b = solve_p3(toy_model(2, {}), feasible_archive(2, {vec({0, 0})}), rng);
    out.check(std::abs(p3b.delta - std::sqrt(2.0)) <= tol && (p3b.x - vec({1, 1})).norm() <= tol, "P3 from a corner");
    std::vector<Vector> dense;
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j) dense.push_back(vec({i / 4.0, j / 4.0}));
    const auto p3c = solve_p3(toy_model(2, {}), feasible_archive(2, dense), rng);
    out.check(std::abs(p3c.delta - std::sqrt(2.0) / 8.0) <= tol, "P3 dense grid");

    const auto quad = toy_model(2, [](const Vector& x) { return (x - vec({0.3, 0.6})).squaredNorm(); });
    const auto p4 = solve_p4_multistart(quad, rng, 4);
    const auto p5a = solve_p5(quad, feasible_archive(2, {vec({0.9, 0.1})}), 1e-9, rng);
    out.check(!p4.empty() && p5a && (p4.front().x - p5a->x).norm() <= tol, "P5 tiny delta matches P4");
    const auto center = feasible_archive(2, {vec({0.5, 0.5})});
    out.check(!solve_p5(quad, center, 1.5, rng), "P5 delta beyond diameter");
    const auto p5c = solve_p5(toy_model(2, [](const Vector& x) { return x[0] + x[1]; }), center, 0.4, rng);
    out.check(p5c && (p5c->x - vec({0.5, 0.5})).norm() >= 0.4 - 1e-6, "P5 distance to center");
    out.detail << "DE x* " << s1.x[0] << ", " << s2.x[0] << "; P3 delta " << p3a.delta << ", " << p3b.delta << ", "
               << p3c.delta;
}

// 3-5. Set-1 reproductions.
void reproduction(Outcome& out, const std::string& name, double f_star, std::size_t min_ns, double rel_tol) {
    const auto result = run_experiment({name}, Scenario::Set1, SolverConfig{}, 30, 1);
    const auto agg = aggregate(result).front();
    out.detail << name << " budget " << SolverConfig{}.resolved(get_problem(name).dimension()).budget << ": N_s "
               << agg.successes << "/30, median ";
    if (agg.median_best) out.detail << *agg.median_best; else out.detail << "NA";
    const double err = agg.median_best ? relative_error(*agg.median_best, f_star) : kInf;
    out.detail << ", relative error " << err;
    out.check(agg.successes >= min_ns, "N_s >= " + std::to_string(min_ns));
    out.check(err <= rel_tol, "median within tolerance");
}

// 6. G24 under the relabeled scenarios.
void scenarios(Outcome& out) {
    for (auto s : {Scenario::Set2, Scenario::Set3, Scenario::Set4}) {
        const auto p = get_problem("G24", s);
        std::size_t ns = 0, h_centers = 0, budget = 0;
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            auto config = with_scenario_budget(SolverConfig{}, s);
            config.seed = seed;
            const auto r = solve(p, config);
            budget = r.budget;
            ns += r.best_f().has_value();
            for (const auto& fit : r.fits)
                for (std::size_t i : fit.centers) h_centers += r.log[i].cls == PointClass::H;
        }
        out.detail << "Set" << scenario_number(s) << " (budget " << budget << "): N_s " << ns << "/30";
        if (s == Scenario::Set4) out.detail << ", H centers " << h_centers;
        out.detail << "; ";
        out.check(budget == 90, "budget 90");
        out.check(ns >= 20, "N_s >= 20 in Set" + std::to_string(scenario_number(s)));
        if (s == Scenario::Set4) out.check(h_centers == 0, "no H point among surrogate centers");
    }
}

// 7. Randomized property suite.
ProblemSpec random_toy(Rng& rng) {
    const int d = 1 + static_cast<int>(uniform_index(rng, 3));
    ProblemSpec p;
    p.name = "toy";
    p.lower = Vector(d);
    p.upper = Vector(d);
    for (int k = 0; k < d; ++k) {
        p.lower[k] = -1.0 - 2.0 * uniform01(rng);
        p.upper[k] = p.lower[k] + 0.5 + 4.0 * uniform01(rng);
    }
    Vector c(d);
    for (int k = 0; k < d; ++k) c[k] = p.lower[k] + uniform01(rng) * (p.upper[k] - p.lower[k]);
    p.objective = [c](const Vector& x) { return (x - c).squaredNorm() + std::sin(3 * x[0]); };
    const ConstraintKind kinds[] = {ConstraintKind::QRSK, ConstraintKind::NRSK, ConstraintKind::QUSK,
                                    ConstraintKind::NUSK, ConstraintKind::NUSH};
    const int m = static_cast<int>(uniform_index(rng, 4));
    for (int j = 0; j < m; ++j) {
        Vector a(d);
        for (int k = 0; k < d; ++k) a[k] = 2.0 * uniform01(rng) - 1.0;
        const double b = uniform01(rng) - 0.2;
        p.constraints.push_back({kinds[uniform_index(rng, 5)], [a, c, b](const Vector& x) { return b - a.dot(x - c); }});
    }
    return p;
}

SolverConfig random_config(const ProblemSpec& p, Rng& rng) {
    const auto d1 = static_cast<std::size_t>(p.dimension() + 1);
    SolverConfig c;
    c.lhs_size = d1 + uniform_index(rng, d1 + 2);
    c.budget = c.lhs_size + uniform_index(rng, 20);
    c.c_g = uniform01(rng);
    c.k_global = static_cast<long>(uniform_index(rng, 4));
    c.eta_max = 1 + uniform_index(rng, 4);
    c.delta_min = std::pow(10.0, -1.0 - 6.0 * uniform01(rng));
    c.n_starts = 1 + uniform_index(rng, 3);
    c.gc.k_neighbors = 1 + 2 * static_cast<int>(uniform_index(rng, 2));
    c.de.budget_per_variable = 100 + uniform_index(rng, 200);
    c.seed = rng();
    return c;
}

void properties(Outcome& out) {
    Rng rng(99);
    std::size_t runs = 0, over_budget = 0, partition = 0, nonmonotone = 0, nondeterministic = 0, errors = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto p = random_toy(rng);
        const auto c = random_config(p, rng);
        try {
            Rng r1(c.seed);
            GsdoRun run(p, c, r1);
            const auto& rec = run.run();
            ++runs;
            over_budget += rec.evaluations() > c.budget;

            // Replay the log into a fresh archive, checking the partition after every insertion.
            Archive replay(p);
            bool ok = rec.log.size() == run.archive().size();
            for (std::size_t k = 0; ok && k < rec.log.size(); ++k) {
                const auto& pt = run.archive()[k];
                ok = replay.filter_point(pt.x, pt.outcome) == rec.log[k].cls;
                replay.check_partition();
                std::size_t total = 0;
                for (auto cls : kAllClasses) total += replay.count(cls);
                ok = ok && total == k + 1;
            }
            partition += !ok;

            std::optional<double> prev;
            for (const auto& e : rec.log) {
                if (prev && (!e.best_feasible || *e.best_feasible > *prev)) ++nonmonotone;
                if (e.best_feasible) prev = e.best_feasible;
            }
            Rng r2(c.seed);
            if (!(solve(p, c, r2) == rec)) ++nondeterministic;
        } catch (const std::exception& e) {
            ++errors;
            if (errors <= 3) out.detail << " error: " << e.what() << ';';
        }
    }
    out.detail << runs << " runs, over budget " << over_budget << ", partition breaks " << partition
               << ", monotonicity breaks " << nonmonotone << ", nondeterministic " << nondeterministic << ", errors "
               << errors;
    out.check(runs == 1000 && errors == 0, "every run completes");
    out.check(over_budget == 0, "budget");
    out.check(partition == 0, "partition");
    out.check(nonmonotone == 0, "monotone best");
    out.check(nondeterministic == 0, "determinism");
}

// 8. Profile fixture with hand-computed tables.
void profile_fixture(Outcome& out) {
    ProfileInput in;
    in.solvers = {"A", "B", "C"};
    in.problems = {"p1", "p2", "p3", "p4"};
    in.dimensions = {2, 3, 2, 5};
    in.w = {{10, 20, kInf, 30}, {20, 10, 40, kInf}, {40, kInf, kInf, 60}};

    auto below = [](double x) { return std::nextafter(x, -kInf); };
    const std::vector<double> alpha{below(1.0), 1.0, 1.5, below(2.0), 2.0, 3.0, below(4.0), 4.0, 32.0};
    const auto perf = performance_profile(in, alpha);
    const std::vector<std::vector<double>> perf_expected{
        {0, 0.5, 0.5, 0.5, 0.75, 0.75, 0.75, 0.75, 0.75},
        {0, 0.5, 0.5, 0.5, 0.75, 0.75, 0.75, 0.75, 0.75},
        {0, 0, 0, 0, 0.25, 0.25, 0.25, 0.5, 0.5},
    };
    out.check(perf.grid == alpha && perf.values == perf_expected, "performance profile table");

    const std::vector<double> beta{0.0,         below(2.5),        2.5,         below(10.0 / 3), 10.0 / 3,
                                   below(5.0),  5.0,               below(20.0 / 3), 20.0 / 3, below(10.0),
                                   10.0,        below(40.0 / 3),   40.0 / 3,    1e6};
    const auto data = data_profile(in, beta);
    const std::vector<std::vector<double>> data_expected{
        {0, 0, 0, 0, 0.25, 0.25, 0.75, 0.75, 0.75, 0.75, 0.75, 0.75, 0.75, 0.75},
        {0, 0, 0.25, 0.25, 0.25, 0.25, 0.25, 0.25, 0.5, 0.5, 0.5, 0.5, 0.75, 0.75},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0.25, 0.25, 0.5, 0.5},
    };
    out.check(data.values == data_expected, "data profile table");

    // Unsolved everywhere stays at zero; one solver alone scores its solved fraction at alpha = 1.
    ProfileInput lone = in;
    lone.solvers = {"C"};
    lone.w = {in.w[2]};
    out.check(performance_profile(lone, {1.0}).values[0][0] == 0.5, "single solver rho(1) = solved fraction");

    out.detail << "rho_C(4) " << perf.values[2][7] << ", d_B(40/3) " << data.values[1][12];
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double time_limit_s;
        std::function<void(Outcome&)> body;
    };
    const std::vector<Criterion> criteria{
        {1, "RBF oracle suite", 10, rbf_oracles},
        {2, "subsolver oracles", 30, subsolver_oracles},
        {3, "G24 Set-1 reproduction", 300, [](Outcome& o) { reproduction(o, "G24", -5.5080, 28, 0.02); }},
        {4, "Hesse Set-1 reproduction", 600, [](Outcome& o) { reproduction(o, "Hesse", -310.0, 27, 0.03); }},
        {5, "G8 Set-1 reproduction", 300, [](Outcome& o) { reproduction(o, "G8", -0.0958, 27, 0.05); }},
        {6, "G24 constraint scenarios", kInf, scenarios},
        {7, "property suite", kInf, properties},
        {8, "profile correctness", kInf, profile_fixture},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.check(secs < c.time_limit_s, "runtime limit");
        failed += !o.pass;
        std::printf("criterion %d %s: %s (%.1f s) %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL", secs,
                    o.detail.str().c_str());
        std::fflush(stdout);
    }
    return failed;
}
