#include "gsdo/problem.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace gsdo {

std::string_view to_string(ConstraintKind kind) {
    switch (kind) {
    case ConstraintKind::QRSK: return "QRSK";
    case ConstraintKind::NRSK: return "NRSK";
    case ConstraintKind::QUSK: return "QUSK";
    case ConstraintKind::NUSK: return "NUSK";
    case ConstraintKind::NUSH: return "NUSH";
    }
    return "?";
}

ConstraintKind parse_constraint_kind(std::string_view text) {
    for (auto kind : {ConstraintKind::QRSK, ConstraintKind::NRSK, ConstraintKind::QUSK, ConstraintKind::NUSK,
                      ConstraintKind::NUSH}) {
        if (text == to_string(kind)) return kind;
    }
    throw std::invalid_argument("unknown constraint kind: " + std::string(text));
}

std::vector<ConstraintKind> ProblemSpec::kinds() const {
    std::vector<ConstraintKind> out;
    out.reserve(constraints.size());
    for (const auto& c : constraints) out.push_back(c.kind);
    return out;
}

double ProblemSpec::min_width() const {
    return (upper - lower).cwiseAbs().minCoeff();
}

bool ProblemSpec::in_bounds(const Vector& x) const {
    if (x.size() != lower.size()) return false;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (!(x[i] >= lower[i] && x[i] <= upper[i])) return false;
    }
    return true;
}

void ProblemSpec::validate() const {
    if (lower.size() == 0) throw ContractError(name + ": dimension must be positive");
    if (lower.size() != upper.size()) throw ContractError(name + ": bound vectors differ in length");
    for (Eigen::Index i = 0; i < lower.size(); ++i) {
        if (!std::isfinite(lower[i]) || !std::isfinite(upper[i]))
            throw ContractError(name + ": bounds must be finite");
        if (!(upper[i] - lower[i] > 0.0)) throw ContractError(name + ": empty bound interval");
    }
    if (!objective) throw ContractError(name + ": missing objective");
    for (const auto& c : constraints) {
        if (!c.g) throw ContractError(name + ": missing constraint evaluator");
    }
}

EvaluationOutcome evaluate(const ProblemSpec& problem, const Vector& x) {
    if (!problem.in_bounds(x)) throw ContractError(problem.name + ": evaluation point outside bounds");

    const std::size_t m = problem.constraints.size();
    EvaluationOutcome out;
    out.constraints.resize(m);

    std::vector<double> raw(m, 0.0);
    bool crashed = false;
    for (std::size_t j = 0; j < m && !crashed; ++j) {
        try {
            raw[j] = problem.constraints[j].g(x);
        } catch (const SimulationFailure&) {
            crashed = true;
            break;
        }
        // A non-finite output is not a meaningful simulation result.
        if (!std::isfinite(raw[j])) crashed = true;
        if (problem.constraints[j].kind == ConstraintKind::NUSH && raw[j] < -kFeasibilityTolerance) crashed = true;
    }

    double f = std::numeric_limits<double>::quiet_NaN();
    if (!crashed) {
        try {
            f = problem.objective(x);
        } catch (const SimulationFailure&) {
            crashed = true;
        }
        if (!std::isfinite(f)) crashed = true;
    }

    if (crashed) {
        out.hidden_failure = true;
        return out;
    }

    bool unrelaxable_violation = false;
    for (std::size_t j = 0; j < m; ++j) {
        const auto kind = problem.constraints[j].kind;
        const bool ok = raw[j] >= -kFeasibilityTolerance;
        out.constraints[j].status = ok ? ConstraintStatus::Satisfied : ConstraintStatus::Violated;
        if (quantifiable(kind)) out.constraints[j].value = raw[j];
        if (!ok && !relaxable(kind)) unrelaxable_violation = true;
    }
    if (!unrelaxable_violation) out.objective = f;
    return out;
}

Simulator::Simulator(const ProblemSpec& problem, std::size_t budget) : problem_(problem), budget_(budget) {
    problem_.validate();
}

EvaluationOutcome Simulator::evaluate(const Vector& x) {
    if (exhausted()) throw BudgetExhausted(problem_.name + ": evaluation budget exhausted");
    // Bounds are checked before counting so a rejected point never costs budget.
    if (!problem_.in_bounds(x)) throw ContractError(problem_.name + ": evaluation point outside bounds");
    ++count_;
    return gsdo::evaluate(problem_, x);
}

Scenario parse_scenario(std::string_view text) {
    if (text.starts_with("Set") || text.starts_with("set")) text.remove_prefix(3);
    if (text == "1") return Scenario::Set1;
    if (text == "2") return Scenario::Set2;
    if (text == "3") return Scenario::Set3;
    if (text == "4") return Scenario::Set4;
    throw std::invalid_argument("unknown scenario: " + std::string(text));
}

int scenario_number(Scenario scenario) { return static_cast<int>(scenario); }

ProblemSpec relabel(const ProblemSpec& problem, Scenario scenario) {
    if (scenario != Scenario::Set1 && problem.constraints.size() < 2)
        throw ContractError(problem.name + ": scenarios Set2-Set4 need at least two constraints");

    ProblemSpec out = problem;
    for (auto& c : out.constraints) c.kind = ConstraintKind::QRSK;
    if (out.constraints.empty()) return out;
    switch (scenario) {
    case Scenario::Set1: break;
    case Scenario::Set2: out.constraints[0].kind = ConstraintKind::NRSK; break;
    case Scenario::Set3: out.constraints[0].kind = ConstraintKind::QUSK; break;
    case Scenario::Set4: out.constraints[0].kind = ConstraintKind::NUSK; break;
    }
    return out;
}

}  // namespace gsdo
