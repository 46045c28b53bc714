#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace gsdo {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Raised when a caller breaks a documented precondition.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Thrown from inside an evaluator to report a crashed simulation
/// (the only way a hidden constraint ever reveals itself).
class SimulationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by Simulator::evaluate once the run's budget is spent.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Constraint taxonomy: Quantifiable/Nonquantifiable, Relaxable/Unrelaxable,
/// Simulation-based, Known/Hidden.
enum class ConstraintKind { QRSK, NRSK, QUSK, NUSK, NUSH };

constexpr bool quantifiable(ConstraintKind kind) {
    return kind == ConstraintKind::QRSK || kind == ConstraintKind::QUSK;
}

constexpr bool relaxable(ConstraintKind kind) {
    return kind == ConstraintKind::QRSK || kind == ConstraintKind::NRSK;
}

std::string_view to_string(ConstraintKind kind);
ConstraintKind parse_constraint_kind(std::string_view text);

using ScalarFunction = std::function<double(const Vector&)>;

/// A constraint g(x) >= 0. For nonquantifiable kinds only the sign of g is
/// ever exposed to the optimizer.
struct Constraint {
    ConstraintKind kind = ConstraintKind::QRSK;
    ScalarFunction g;
};

struct ProblemSpec {
    std::string name;
    Vector lower;
    Vector upper;
    ScalarFunction objective;
    std::vector<Constraint> constraints;
    std::optional<double> known_optimum;

    int dimension() const { return static_cast<int>(lower.size()); }
    std::size_t num_constraints() const { return constraints.size(); }
    std::vector<ConstraintKind> kinds() const;

    /// delta_lu: the smallest bound width, in raw units.
    double min_width() const;

    bool in_bounds(const Vector& x) const;

    /// Throws ContractError unless bounds are finite, consistent and the box
    /// has a nonempty interior.
    void validate() const;
};

/// Raw constraint values within this tolerance of zero count as satisfied.
inline constexpr double kFeasibilityTolerance = 1e-6;

enum class ConstraintStatus { Satisfied, Violated, Unknown };

struct ConstraintValue {
    /// Present only for quantifiable constraints of a simulation that ran.
    std::optional<double> value;
    ConstraintStatus status = ConstraintStatus::Unknown;

    bool violated() const { return status == ConstraintStatus::Violated; }

    bool operator==(const ConstraintValue&) const = default;
};

struct EvaluationOutcome {
    std::optional<double> objective;
    std::vector<ConstraintValue> constraints;
    bool hidden_failure = false;

    bool operator==(const EvaluationOutcome&) const = default;
};

/// Runs the simulation once at x. Every constraint evaluator and the objective
/// are invoked exactly once unless the simulation crashes first. The objective
/// is withheld whenever an unrelaxable constraint is violated.
EvaluationOutcome evaluate(const ProblemSpec& problem, const Vector& x);

/// Budgeted access to a problem: the single gate every expensive evaluation of
/// a solver run goes through.
class Simulator {
public:
    Simulator(const ProblemSpec& problem, std::size_t budget);

    EvaluationOutcome evaluate(const Vector& x);

    const ProblemSpec& problem() const { return problem_; }
    std::size_t count() const { return count_; }
    std::size_t budget() const { return budget_; }
    std::size_t remaining() const { return budget_ - count_; }
    bool exhausted() const { return count_ >= budget_; }

private:
    const ProblemSpec& problem_;
    std::size_t budget_;
    std::size_t count_ = 0;
};

/// Constraint relabeling scenarios used in the benchmark study.
enum class Scenario { Set1 = 1, Set2 = 2, Set3 = 3, Set4 = 4 };

Scenario parse_scenario(std::string_view text);
int scenario_number(Scenario scenario);

/// Set1: every constraint QRSK. Set2/3/4: the first constraint becomes
/// NRSK/QUSK/NUSK and the rest QRSK. Evaluators are shared, not copied.
ProblemSpec relabel(const ProblemSpec& problem, Scenario scenario);

/// Adapter for a user simulator run as a subprocess per evaluation. The child
/// receives x as one line of whitespace-separated decimals on stdin and must
/// answer with one line: the objective followed by one value per constraint,
/// or the token FAIL.
ProblemSpec make_external_problem(std::string name, std::string command, Vector lower, Vector upper,
                                  std::vector<ConstraintKind> kinds);

}  // namespace gsdo
