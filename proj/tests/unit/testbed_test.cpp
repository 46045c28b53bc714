#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <tuple>

#include "gsdo/testbed.hpp"

using namespace gsdo;

namespace {

// name, d, m, f*
const std::vector<std::tuple<std::string, int, std::size_t, double>> kListed{
    {"G1", 13, 9, -15},          {"G2", 10, 2, -0.4},        {"G3MOD", 20, 1, -0.69},
    {"G4", 5, 6, -30665.539},    {"G5MOD", 4, 5, 5126.50},   {"G6", 2, 2, -6961.8139},
    {"G7", 10, 8, 24.3062},      {"G8", 2, 2, -0.0958},      {"G9", 7, 4, 680.6301},
    {"G10", 8, 6, 7049.3307},    {"G18", 9, 13, -0.8660},    {"G19", 15, 5, 32.6556},
    {"G24", 2, 2, -5.5080},      {"GTCD", 4, 1, 2964893.85}, {"Hesse", 6, 6, -310},
    {"PVD", 4, 3, 5804.45},      {"SR", 7, 11, 2994.42},     {"WB", 4, 6, 1.7250},
};

Vector to_vector(const std::vector<double>& v) { return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size())); }

}  // namespace

TEST(Testbed, DimensionsAndOptima) {
    ASSERT_EQ(problem_registry().size(), kListed.size());
    for (const auto& [name, d, m, f_star] : kListed) {
        const auto& e = registry_entry(name);
        EXPECT_EQ(e.spec.dimension(), d) << name;
        EXPECT_EQ(e.spec.num_constraints(), m) << name;
        EXPECT_DOUBLE_EQ(e.f_star, f_star) << name;
        for (auto k : e.spec.kinds()) EXPECT_EQ(k, ConstraintKind::QRSK) << name;
    }
}

TEST(Testbed, OptimizersMatchListedOptima) {
    for (const auto& e : problem_registry()) {
        SCOPED_TRACE(e.spec.name);
        const Vector x = to_vector(e.optimizer);
        ASSERT_EQ(x.size(), e.spec.dimension());
        ASSERT_TRUE(e.spec.in_bounds(x));
        const double f = e.spec.objective(x);
        for (const auto& c : e.spec.constraints) EXPECT_GE(c.g(x), -1e-3);
        if (e.dominates_f_star)
            EXPECT_LT(f, e.f_star - 1e-3 * std::abs(e.f_star));
        else
            EXPECT_LE(std::abs(f - e.f_star), 1e-3 * std::abs(e.f_star));
    }
}

TEST(Testbed, G24LiteratureOptimizer) {
    const auto p = get_problem("G24");
    const Vector x = (Vector(2) << 2.3295, 3.1785).finished();
    EXPECT_NEAR(p.objective(x), -5.5080, 5.508e-3);
    // The rounded coordinates sit on the active constraints to within 1e-3.
    for (const auto& c : p.constraints) EXPECT_GE(c.g(x), -1e-3);
}

TEST(Testbed, ListsPerScenario) {
    const auto set1 = list_problems(Scenario::Set1);
    EXPECT_EQ(set1.size(), 18u);
    for (auto s : {Scenario::Set2, Scenario::Set3, Scenario::Set4}) {
        const auto names = list_problems(s);
        EXPECT_EQ(names.size(), 16u);
        EXPECT_EQ(std::count(names.begin(), names.end(), "GTCD"), 0);
        EXPECT_EQ(std::count(names.begin(), names.end(), "G3MOD"), 0);
        for (const auto& n : names) EXPECT_NO_THROW(get_problem(n, s)) << n;
    }
}

TEST(Testbed, UnknownName) {
    EXPECT_THROW(registry_entry("Styrene"), std::invalid_argument);
    EXPECT_THROW(get_problem("G99"), std::invalid_argument);
}

TEST(Testbed, RegisteredProblemsValidate) {
    for (const auto& e : problem_registry()) EXPECT_NO_THROW(e.spec.validate()) << e.spec.name;
}
