#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gsdo/config.hpp"
#include "gsdo/problem.hpp"
#include "gsdo/solver.hpp"

namespace gsdo {

/// |(f_S - f_star) / f_star|. Throws std::invalid_argument when f_star is 0.
double relative_error(double f_s, double f_star);

/// Smallest 1-based evaluation index whose best-feasible value f satisfies
/// f0 - f >= (1 - tau)(f0 - f_star); +inf if none or if f0 is empty.
/// trajectory[i] is the best feasible value after evaluation i+1.
double solved_threshold(const std::vector<std::optional<double>>& trajectory, double f_star,
                        std::optional<double> f0, double tau);

struct TrialSummary {
    std::string problem;
    int scenario = 1;
    std::uint64_t seed = 0;
    int dimension = 0;
    std::optional<double> f_star;
    std::optional<double> best_f;  // empty when no feasible point was found
    std::size_t evals_used = 0;
    std::string termination;
    std::optional<std::size_t> first_feasible;
    std::vector<std::optional<double>> trajectory;

    bool feasible() const { return best_f.has_value(); }
    std::optional<double> rel_error() const;
    /// Objective of the first feasible evaluation.
    std::optional<double> f0() const;

    bool operator==(const TrialSummary&) const = default;
};

TrialSummary summarize(const TrialRecord& record, const ProblemSpec& problem, Scenario scenario);

struct ExperimentResult {
    std::vector<TrialSummary> trials;  // ordered by (problem, seed)

    bool operator==(const ExperimentResult&) const = default;
};

struct ProblemAggregate {
    std::string problem;
    int scenario = 1;
    std::size_t trials = 0;
    std::size_t successes = 0;  // N_s
    std::optional<double> median_best;  // over successful trials only
    std::optional<double> rel_error;

    bool operator==(const ProblemAggregate&) const = default;
};

/// Median of the values; the mean of the two middle values for even sizes.
/// Throws std::invalid_argument when empty.
double median(std::vector<double> values);

std::vector<ProblemAggregate> aggregate(const ExperimentResult& result);

/// Runs solve() for every problem with seeds 1..trials. threads = 0 uses the
/// hardware concurrency. Results do not depend on the thread count.
ExperimentResult run_experiment(const std::vector<std::string>& problems, Scenario scenario,
                                const SolverConfig& config, std::size_t trials, unsigned threads = 0);

/// Columns: problem,set,seed,Ns_flag,best_f,evals_used,termination,rel_error
/// followed by d,f_star,first_feasible,trajectory (';'-separated).
void write_results_csv(std::ostream& out, const ExperimentResult& result);
ExperimentResult read_results_csv(std::istream& in);

/// w[s][p]: evaluations solver s needs on problem p (+inf if unsolved).
struct ProfileInput {
    std::vector<std::string> solvers;
    std::vector<std::string> problems;
    std::vector<int> dimensions;  // n_p
    std::vector<std::vector<double>> w;
};

struct ProfileTable {
    std::vector<double> grid;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> values;  // [solver][grid point]

    void write_csv(std::ostream& out, const std::string& grid_name) const;
    void write_svg(std::ostream& out, const std::string& title, const std::string& x_label, bool log_x) const;
};

/// rho_s(alpha): fraction of problems with w[s][p] / min_s w[s][p] <= alpha.
ProfileTable performance_profile(const ProfileInput& input, const std::vector<double>& alpha_grid);
/// d_s(beta): fraction of problems with w[s][p] / (n_p + 1) <= beta.
ProfileTable data_profile(const ProfileInput& input, const std::vector<double>& beta_grid);

/// One labeled result set per solver. Each (problem, set) pair is one
/// profile problem; its w comes from the lower-median trial by best_f.
ProfileInput profile_input(const std::vector<std::string>& labels, const std::vector<ExperimentResult>& results,
                           double tau);

/// 64 geometric steps from 1 to 32.
std::vector<double> default_alpha_grid();
/// Linear from 0 to beta_max in `steps` intervals.
std::vector<double> default_beta_grid(double beta_max, std::size_t steps = 100);

}  // namespace gsdo
