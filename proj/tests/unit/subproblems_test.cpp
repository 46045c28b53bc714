#include <gtest/gtest.h>

#include <cmath>

#include "gsdo/subproblems.hpp"
#include "toy_problems.hpp"

using namespace gsdo;
using toy::vec;

namespace {

SurrogateModel model(int d, std::function<double(const Vector&)> s, std::vector<std::function<double(const Vector&)>> g = {},
                     std::function<double(const Vector&)> gc = {}) {
    SurrogateModel m;
    m.dimension = d;
    m.num_constraints = g.size();
    m.evaluate = [s, g](const Vector& x, std::span<double> out) {
        for (std::size_t j = 0; j < g.size(); ++j) out[j] = g[j](x);
        return s ? s(x) : 0.0;
    };
    m.classification = std::move(gc);
    return m;
}

double always_c4(const Vector&) { return -100.0; }

Archive unit_archive(int d, std::vector<Vector> feasible) {
    Archive a(Vector::Zero(d), Vector::Ones(d), {});
    for (const auto& x : feasible) {
        EvaluationOutcome o;
        o.objective = 0.0;
        a.filter_point(x, o);
    }
    return a;
}

}  // namespace

TEST(P2, ConstantSurrogateCentersInBox) {
    const auto m = model(2, {}, {[](const Vector&) { return 1.0; }});
    const auto a = unit_archive(2, {});
    Rng rng(1);
    const auto s = solve_p2(m, a, rng);
    ASSERT_TRUE(s);
    EXPECT_NEAR(s->aux, 0.5, 1e-3);
    EXPECT_NEAR(s->x[0], 0.5, 1e-2);
    EXPECT_NEAR(s->x[1], 0.5, 1e-2);
}

TEST(P2, NoQuantifiableConstraints) {
    const auto m = model(3, {});
    const auto a = unit_archive(3, {});
    Rng rng(2);
    const auto s = solve_p2(m, a, rng);
    ASSERT_TRUE(s);
    EXPECT_NEAR(s->aux, 0.5, 1e-3);
}

TEST(P2, BindingSurrogateLimitsZ) {
    // g(x) = 0.2 - x1: z <= 0.2 - x1 and z <= x1 gives z* = 0.1 at x1 = 0.1.
    const auto m = model(2, {}, {[](const Vector& x) { return 0.2 - x[0]; }});
    const auto a = unit_archive(2, {});
    Rng rng(3);
    const auto s = solve_p2(m, a, rng);
    ASSERT_TRUE(s);
    EXPECT_NEAR(s->aux, 0.1, 1e-3);
    EXPECT_NEAR(s->x[0], 0.1, 1e-2);
}

TEST(P2, ClassifierEverywhereHiddenGivesNone) {
    const auto m = model(2, {}, {[](const Vector&) { return 1.0; }}, always_c4);
    const auto a = unit_archive(2, {});
    Rng rng(4);
    EXPECT_FALSE(solve_p2(m, a, rng));
}

TEST(P3, CenterPushesToCorner) {
    const auto m = model(2, {});
    const auto a = unit_archive(2, {vec({0.5, 0.5})});
    Rng rng(5);
    const auto r = solve_p3(m, a, rng);
    EXPECT_TRUE(r.feasible);
    EXPECT_NEAR(r.delta, std::sqrt(0.5), 1e-3);
    EXPECT_NEAR(std::abs(r.x[0] - 0.5), 0.5, 1e-2);
    EXPECT_NEAR(std::abs(r.x[1] - 0.5), 0.5, 1e-2);
}

TEST(P3, CornerPushesToOppositeCorner) {
    const auto m = model(2, {});
    const auto a = unit_archive(2, {vec({0, 0})});
    Rng rng(6);
    const auto r = solve_p3(m, a, rng);
    EXPECT_NEAR(r.delta, std::sqrt(2.0), 1e-3);
    EXPECT_NEAR(r.x[0], 1.0, 1e-2);
    EXPECT_NEAR(r.x[1], 1.0, 1e-2);
}

TEST(P3, DenseFeasibleSetMatchesGridOracle) {
    std::vector<Vector> pts;
    for (double u : {0.0, 0.5, 1.0})
        for (double v : {0.0, 0.5, 1.0}) pts.push_back(vec({u, v}));
    const auto a = unit_archive(2, pts);
    Rng rng(7);
    const auto r = solve_p3(model(2, {}), a, rng);
    double oracle = 0.0;
    for (int i = 0; i <= 200; ++i)
        for (int j = 0; j <= 200; ++j) {
            const Vector x = vec({i / 200.0, j / 200.0});
            double dmin = 1e9;
            for (const auto& p : pts) dmin = std::min(dmin, (p - x).norm());
            oracle = std::max(oracle, dmin);
        }
    EXPECT_NEAR(oracle, std::sqrt(0.125), 1e-9);
    EXPECT_NEAR(r.delta, oracle, 1e-3);
}

TEST(P3, RequiresFeasiblePoint) {
    Rng rng(8);
    EXPECT_THROW(solve_p3(model(2, {}), unit_archive(2, {}), rng), ContractError);
}

TEST(P4, BimodalSurrogateFindsSortedMinima) {
    // Two minima; the one near 0.8 is slightly lower.
    const auto m = model(1, [](const Vector& x) {
        const double t = x[0];
        return (t - 0.2) * (t - 0.2) * (t - 0.8) * (t - 0.8) - 0.01 * t;
    });
    Rng rng(9);
    const auto sols = solve_p4_multistart(m, rng, 10);
    ASSERT_FALSE(sols.empty());
    EXPECT_NEAR(sols.front().x[0], 0.8, 0.05);
    for (std::size_t i = 1; i < sols.size(); ++i) {
        EXPECT_LE(sols[i - 1].aux, sols[i].aux);
        EXPECT_GT((sols[i].x - sols[i - 1].x).norm(), 1e-6);
    }
    for (const auto& s : sols) EXPECT_TRUE(std::abs(s.x[0] - 0.2) < 0.05 || std::abs(s.x[0] - 0.8) < 0.05);
}

TEST(P4, ConvexSurrogateDeduplicates) {
    const auto m = model(2, [](const Vector& x) { return (x - vec({0.3, 0.6})).squaredNorm(); });
    Rng rng(10);
    const auto sols = solve_p4_multistart(m, rng, 4);
    ASSERT_EQ(sols.size(), 1u);
    EXPECT_NEAR(sols[0].x[0], 0.3, 1e-3);
}

TEST(P4, ClassifierEverywhereHiddenGivesEmpty) {
    const auto m = model(2, toy::sphere, {}, always_c4);
    Rng rng(11);
    EXPECT_TRUE(solve_p4_multistart(m, rng, 3).empty());
}

TEST(P5, TinyDeltaMatchesP4) {
    const auto m = model(2, [](const Vector& x) { return (x - vec({0.3, 0.6})).squaredNorm(); },
                         {[](const Vector& x) { return x[0] - 0.4; }});
    const auto a = unit_archive(2, {vec({0.9, 0.1})});
    Rng r4(12), r5(13);
    const auto p4 = solve_p4_multistart(m, r4, 1);
    const auto p5 = solve_p5(m, a, 1e-9, r5);
    ASSERT_EQ(p4.size(), 1u);
    ASSERT_TRUE(p5);
    EXPECT_NEAR((p4[0].x - p5->x).norm(), 0.0, 1e-3);
    EXPECT_NEAR(p5->x[0], 0.4, 1e-3);
}

TEST(P5, DeltaBeyondDiameterGivesNone) {
    const auto a = unit_archive(2, {vec({0.5, 0.5})});
    Rng rng(14);
    EXPECT_FALSE(solve_p5(model(2, toy::sphere), a, 1.5, rng));
}

TEST(P5, RespectsDistanceFromFeasiblePoints) {
    const auto a = unit_archive(2, {vec({0.5, 0.5})});
    Rng rng(15);
    const auto s = solve_p5(model(2, [](const Vector& x) { return x[0] + 0.5 * x[1]; }), a, 0.4, rng);
    ASSERT_TRUE(s);
    EXPECT_GE((s->x - vec({0.5, 0.5})).norm(), 0.4 - 1e-6);
    // Linear objective: the optimum is the box corner (0,0), which is outside the ball.
    EXPECT_NEAR(s->x[0], 0.0, 1e-3);
    EXPECT_NEAR(s->x[1], 0.0, 1e-3);
}

TEST(Subproblems, Deterministic) {
    const auto a = unit_archive(2, {vec({0.2, 0.7})});
    const auto m = model(2, toy::sphere, {[](const Vector& x) { return x.sum() - 0.5; }});
    Rng r1(16), r2(16);
    EXPECT_EQ(solve_p5(m, a, 0.1, r1), solve_p5(m, a, 0.1, r2));
}
