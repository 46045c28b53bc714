#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gsdo/problem.hpp"

namespace gsdo {

struct ProblemRegistryEntry {
    ProblemSpec spec;  // Set1 labels: every constraint QRSK
    double f_star = 0.0;
    /// Best known solution from the literature, raw coordinates.
    std::vector<double> optimizer;
    /// True when the optimizer beats f_star by more than the consistency
    /// tolerance (the listed optimum is not the true one).
    bool dominates_f_star = false;
    std::string note;
};

const std::vector<ProblemRegistryEntry>& problem_registry();

/// Throws std::invalid_argument for an unknown name.
const ProblemRegistryEntry& registry_entry(std::string_view name);

/// Set1 labels; use relabel() for the other scenarios.
ProblemSpec get_problem(std::string_view name);
ProblemSpec get_problem(std::string_view name, Scenario scenario);

/// Set1: all registered problems. Set2-4: the problems with at least two constraints.
std::vector<std::string> list_problems(Scenario scenario);

}  // namespace gsdo
