#include <gtest/gtest.h>

#include <cmath>

#include "gsdo/problem.hpp"
#include "gsdo/random.hpp"
#include "gsdo/testbed.hpp"
#include "toy_problems.hpp"

using namespace gsdo;
using toy::vec;

TEST(ConstraintKind, QuantifiableAndRelaxable) {
    EXPECT_TRUE(quantifiable(ConstraintKind::QRSK));
    EXPECT_TRUE(quantifiable(ConstraintKind::QUSK));
    EXPECT_FALSE(quantifiable(ConstraintKind::NRSK));
    EXPECT_FALSE(quantifiable(ConstraintKind::NUSK));
    EXPECT_FALSE(quantifiable(ConstraintKind::NUSH));

    EXPECT_TRUE(relaxable(ConstraintKind::QRSK));
    EXPECT_TRUE(relaxable(ConstraintKind::NRSK));
    EXPECT_FALSE(relaxable(ConstraintKind::QUSK));
    EXPECT_FALSE(relaxable(ConstraintKind::NUSK));
    EXPECT_FALSE(relaxable(ConstraintKind::NUSH));
}

TEST(ConstraintKind, RoundTripsThroughText) {
    for (auto k : {ConstraintKind::QRSK, ConstraintKind::NRSK, ConstraintKind::QUSK, ConstraintKind::NUSK,
                   ConstraintKind::NUSH})
        EXPECT_EQ(parse_constraint_kind(to_string(k)), k);
    EXPECT_THROW(parse_constraint_kind("QQQQ"), std::invalid_argument);
}

TEST(ProblemSpec, ValidateRejectsBadBoxes) {
    auto p = toy::unit_box(2, toy::sphere);
    EXPECT_NO_THROW(p.validate());
    p.upper[1] = 0.0;
    EXPECT_THROW(p.validate(), ContractError);
    p.upper[1] = INFINITY;
    EXPECT_THROW(p.validate(), ContractError);
}

TEST(Evaluate, G24AtLiteratureOptimizer) {
    const auto p = get_problem("G24");
    const auto out = evaluate(p, vec({2.3295, 3.1785}));
    ASSERT_TRUE(out.objective);
    EXPECT_NEAR(*out.objective, -5.508, 1e-3);
    for (const auto& c : out.constraints) {
        ASSERT_TRUE(c.value);
        EXPECT_GE(*c.value, -1e-3);
    }
}

TEST(Evaluate, CallsEveryEvaluatorOnce) {
    int f_calls = 0, g1_calls = 0, g2_calls = 0;
    auto p = toy::unit_box(
        2, [&](const Vector&) { return ++f_calls, 0.0; },
        {toy::qrsk([&](const Vector&) { return ++g1_calls, 1.0; }),
         {ConstraintKind::NRSK, [&](const Vector&) { return ++g2_calls, -1.0; }}});
    evaluate(p, vec({0.5, 0.5}));
    EXPECT_EQ(f_calls, 1);
    EXPECT_EQ(g1_calls, 1);
    EXPECT_EQ(g2_calls, 1);
}

TEST(Evaluate, ViolatedHiddenConstraintIsAFailure) {
    auto p = toy::unit_box(1, toy::sphere, {{ConstraintKind::NUSH, [](const Vector&) { return -1.0; }}});
    const auto out = evaluate(p, vec({0.5}));
    EXPECT_TRUE(out.hidden_failure);
    EXPECT_FALSE(out.objective);
}

TEST(Evaluate, SimulationFailureAndNonFiniteOutputAreHiddenFailures) {
    auto crash = toy::unit_box(1, [](const Vector&) -> double { throw SimulationFailure("boom"); });
    EXPECT_TRUE(evaluate(crash, vec({0.1})).hidden_failure);
    auto nan = toy::unit_box(1, [](const Vector&) { return NAN; });
    EXPECT_TRUE(evaluate(nan, vec({0.1})).hidden_failure);
}

TEST(Evaluate, UnrelaxableViolationWithholdsObjective) {
    for (auto kind : {ConstraintKind::QUSK, ConstraintKind::NUSK}) {
        auto p = toy::unit_box(1, toy::sphere, {{kind, [](const Vector& x) { return x[0] - 0.5; }}});
        EXPECT_FALSE(evaluate(p, vec({0.2})).objective);
        EXPECT_TRUE(evaluate(p, vec({0.7})).objective);
    }
    for (auto kind : {ConstraintKind::QRSK, ConstraintKind::NRSK}) {
        auto p = toy::unit_box(1, toy::sphere, {{kind, [](const Vector& x) { return x[0] - 0.5; }}});
        EXPECT_TRUE(evaluate(p, vec({0.2})).objective);
    }
}

TEST(Evaluate, NonquantifiableExposesOnlyTheFlag) {
    auto p = toy::unit_box(1, toy::sphere, {{ConstraintKind::NRSK, [](const Vector& x) { return x[0] - 0.5; }}});
    const auto bad = evaluate(p, vec({0.2}));
    EXPECT_FALSE(bad.constraints[0].value);
    EXPECT_TRUE(bad.constraints[0].violated());
    const auto good = evaluate(p, vec({0.8}));
    EXPECT_FALSE(good.constraints[0].value);
    EXPECT_EQ(good.constraints[0].status, ConstraintStatus::Satisfied);
}

TEST(Evaluate, ToleranceOnViolation) {
    auto p = toy::unit_box(1, toy::sphere, {toy::qrsk([](const Vector&) { return -0.5e-6; })});
    EXPECT_FALSE(evaluate(p, vec({0.5})).constraints[0].violated());
}

TEST(Evaluate, OutOfBoundsIsAContractError) {
    auto p = toy::unit_box(2, toy::sphere);
    EXPECT_THROW(evaluate(p, vec({0.5, 1.5})), ContractError);
}

TEST(Evaluate, Deterministic) {
    const auto p = get_problem("G8");
    EXPECT_EQ(evaluate(p, vec({1.3, 4.1})), evaluate(p, vec({1.3, 4.1})));
}

TEST(Simulator, CountsAndStopsAtBudget) {
    auto p = toy::unit_box(1, toy::sphere);
    Simulator sim(p, 2);
    sim.evaluate(vec({0.1}));
    EXPECT_EQ(sim.remaining(), 1u);
    EXPECT_THROW(sim.evaluate(vec({2.0})), ContractError);
    EXPECT_EQ(sim.count(), 1u);
    sim.evaluate(vec({0.2}));
    EXPECT_TRUE(sim.exhausted());
    EXPECT_THROW(sim.evaluate(vec({0.3})), BudgetExhausted);
    EXPECT_EQ(sim.count(), 2u);
}

TEST(Relabel, Scenarios) {
    const auto g24 = get_problem("G24");
    EXPECT_EQ(relabel(g24, Scenario::Set1).kinds(), (std::vector{ConstraintKind::QRSK, ConstraintKind::QRSK}));
    EXPECT_EQ(relabel(g24, Scenario::Set2).kinds(), (std::vector{ConstraintKind::NRSK, ConstraintKind::QRSK}));
    EXPECT_EQ(relabel(g24, Scenario::Set3).kinds(), (std::vector{ConstraintKind::QUSK, ConstraintKind::QRSK}));
    EXPECT_EQ(relabel(g24, Scenario::Set4).kinds(), (std::vector{ConstraintKind::NUSK, ConstraintKind::QRSK}));
    EXPECT_THROW(relabel(get_problem("GTCD"), Scenario::Set2), ContractError);
    EXPECT_NO_THROW(relabel(get_problem("GTCD"), Scenario::Set1));
}

TEST(Relabel, OnlyExposureChanges) {
    const auto base = get_problem("G24");
    const auto set2 = relabel(base, Scenario::Set2);
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const Vector x = vec({3.0 * uniform01(rng), 4.0 * uniform01(rng)});
        const auto a = evaluate(base, x);
        const auto b = evaluate(set2, x);
        EXPECT_EQ(a.constraints[0].violated(), b.constraints[0].violated());
        EXPECT_EQ(a.constraints[1], b.constraints[1]);
        EXPECT_EQ(a.objective, b.objective);
    }
}

TEST(Scenario, Parse) {
    EXPECT_EQ(parse_scenario("3"), Scenario::Set3);
    EXPECT_EQ(parse_scenario("Set4"), Scenario::Set4);
    EXPECT_THROW(parse_scenario("7"), std::invalid_argument);
}

TEST(ExternalProblem, ParsesValuesAndFailures) {
    const auto p = make_external_problem("ext", "read a; echo \"$a $a\"", vec({-1}), vec({1}),
                                         {ConstraintKind::QRSK});
    const auto out = evaluate(p, vec({0.25}));
    ASSERT_TRUE(out.objective);
    EXPECT_DOUBLE_EQ(*out.objective, 0.25);
    EXPECT_DOUBLE_EQ(*out.constraints[0].value, 0.25);

    const auto fail = make_external_problem("ext", "read a; echo FAIL", vec({-1}), vec({1}), {ConstraintKind::QRSK});
    EXPECT_TRUE(evaluate(fail, vec({0.0})).hidden_failure);
}
