#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsdo/archive.hpp"
#include "gsdo/config.hpp"
#include "gsdo/problem.hpp"
#include "gsdo/random.hpp"
#include "gsdo/subproblems.hpp"

namespace gsdo {

enum class Termination { BudgetExhausted, DeltaBelowMin, NoFeasibleFound };
std::string_view to_string(Termination t);

enum class Stage1Status { FoundFeasible, Failed };

/// Where an evaluated point came from.
enum class PointSource { LatinHypercube, P2, P3, P4, P5, RandomBall };
std::string_view to_string(PointSource s);

struct LogEntry {
    std::size_t index = 0;  // 1-based evaluation number
    int stage = 0;
    PointSource source = PointSource::LatinHypercube;
    std::vector<double> x;
    PointClass cls = PointClass::F;
    std::optional<double> objective;
    std::optional<double> best_feasible;

    bool operator==(const LogEntry&) const = default;
};

/// Centers behind one surrogate fit. output is -1 for the objective, else the
/// problem constraint index.
struct FitRecord {
    std::size_t after_evaluations = 0;
    long output = -1;
    std::vector<std::size_t> centers;

    bool operator==(const FitRecord&) const = default;
};

struct TrialRecord {
    std::string problem;
    std::uint64_t seed = 0;
    std::size_t budget = 0;
    std::vector<LogEntry> log;
    Termination termination = Termination::BudgetExhausted;
    /// Evaluations used when Stage 1 and Stage 2 ended.
    std::size_t stage1_end = 0;
    std::size_t stage2_end = 0;
    std::vector<FitRecord> fits;

    std::size_t evaluations() const { return log.size(); }
    std::optional<double> best_f() const;
    std::vector<double> best_x() const;
    /// 1-based index of the first feasible evaluation.
    std::optional<std::size_t> first_feasible() const;

    /// One row per evaluation.
    void write_csv(std::ostream& out) const;
    /// best f, feasibility, evaluations used, termination reason.
    std::string summary() const;

    bool operator==(const TrialRecord&) const = default;
};

/// Replaceable subproblem solvers, mainly so tests can force failures.
struct SubproblemSolvers {
    std::function<std::optional<SubproblemSolution>(const SurrogateModel&, const Archive&, Rng&, const DeSettings&)> p2 =
        [](const SurrogateModel& m, const Archive& a, Rng& r, const DeSettings& s) { return solve_p2(m, a, r, s); };
    std::function<SpreadResult(const SurrogateModel&, const Archive&, Rng&, const DeSettings&)> p3 =
        [](const SurrogateModel& m, const Archive& a, Rng& r, const DeSettings& s) { return solve_p3(m, a, r, s); };
    std::function<std::vector<SubproblemSolution>(const SurrogateModel&, Rng&, std::size_t, const DeSettings&)> p4 =
        [](const SurrogateModel& m, Rng& r, std::size_t n, const DeSettings& s) {
            return solve_p4_multistart(m, r, n, s);
        };
    std::function<std::optional<SubproblemSolution>(const SurrogateModel&, const Archive&, double, Rng&,
                                                    const DeSettings&)>
        p5 = [](const SurrogateModel& m, const Archive& a, double d, Rng& r, const DeSettings& s) {
            return solve_p5(m, a, d, r, s);
        };
};

/// One solver run. The stages can be driven one at a time; solve() runs them all.
class GsdoRun {
public:
    /// Resolves and validates the config for the problem dimension.
    GsdoRun(const ProblemSpec& problem, const SolverConfig& config, Rng& rng, SubproblemSolvers solvers = {});
    GsdoRun(const GsdoRun&) = delete;
    GsdoRun& operator=(const GsdoRun&) = delete;

    Stage1Status stage1_find_feasible();
    void stage2_spread();
    void stage3_global();
    /// All three stages; Stage 2 and 3 are skipped when Stage 1 fails.
    const TrialRecord& run();

    /// Evaluates x (raw coordinates, not yet archived), files it and logs it.
    PointClass evaluate_and_file(const Vector& x, int stage, PointSource source);

    const Archive& archive() const { return archive_; }
    const Simulator& simulator() const { return sim_; }
    const SolverConfig& config() const { return config_; }
    TrialRecord& record() { return record_; }
    const TrialRecord& record() const { return record_; }

private:
    std::optional<SurrogateSet> fit_surrogates(bool with_objective);
    /// Raw point for a normalized subproblem solution, or empty if it is archived.
    std::optional<Vector> fresh_point(const Vector& xn) const;
    Vector fallback_point();
    void evaluate_lhs(std::size_t n, int stage, bool stop_on_feasible);

    ProblemSpec problem_;  // owned copy; sim_ refers to it
    SolverConfig config_;
    Rng& rng_;
    SubproblemSolvers solvers_;
    Simulator sim_;
    Archive archive_;
    TrialRecord record_;
    std::optional<double> best_;
};

TrialRecord solve(const ProblemSpec& problem, const SolverConfig& config, Rng& rng);
/// Seeds a fresh generator from config.seed.
TrialRecord solve(const ProblemSpec& problem, const SolverConfig& config);

}  // namespace gsdo
