#include "gsdo/testbed.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace gsdo {

namespace {

using std::numbers::pi;

/// Constraints are written in the usual c(x) <= 0 form and flipped here.
ProblemSpec make(std::string name, std::vector<double> lower, std::vector<double> upper, ScalarFunction f,
                 std::vector<ScalarFunction> le, double f_star) {
    ProblemSpec p;
    p.name = std::move(name);
    p.lower = Eigen::Map<const Vector>(lower.data(), static_cast<Eigen::Index>(lower.size()));
    p.upper = Eigen::Map<const Vector>(upper.data(), static_cast<Eigen::Index>(upper.size()));
    p.objective = std::move(f);
    for (auto& c : le) p.constraints.push_back({ConstraintKind::QRSK, [c = std::move(c)](const Vector& x) { return -c(x); }});
    p.known_optimum = f_star;
    return p;
}

ProblemRegistryEntry entry(ProblemSpec spec, std::vector<double> optimizer, bool dominates, std::string note) {
    const double f_star = *spec.known_optimum;
    return {std::move(spec), f_star, std::move(optimizer), dominates, std::move(note)};
}

std::vector<double> filled(std::size_t n, double v) { return std::vector<double>(n, v); }

ProblemRegistryEntry g1() {
    std::vector<double> up = filled(13, 1.0);
    up[9] = up[10] = up[11] = 100.0;
    auto f = [](const Vector& x) {
        double s = 0.0;
        for (int i = 0; i < 4; ++i) s += 5.0 * x[i] - 5.0 * x[i] * x[i];
        for (int i = 4; i < 13; ++i) s -= x[i];
        return s;
    };
    std::vector<ScalarFunction> c{
        [](const Vector& x) { return 2 * x[0] + 2 * x[1] + x[9] + x[10] - 10; },
        [](const Vector& x) { return 2 * x[0] + 2 * x[2] + x[9] + x[11] - 10; },
        [](const Vector& x) { return 2 * x[1] + 2 * x[2] + x[10] + x[11] - 10; },
        [](const Vector& x) { return -8 * x[0] + x[9]; },
        [](const Vector& x) { return -8 * x[1] + x[10]; },
        [](const Vector& x) { return -8 * x[2] + x[11]; },
        [](const Vector& x) { return -2 * x[3] - x[4] + x[9]; },
        [](const Vector& x) { return -2 * x[5] - x[6] + x[10]; },
        [](const Vector& x) { return -2 * x[7] - x[8] + x[11]; },
    };
    return entry(make("G1", filled(13, 0.0), up, f, c, -15.0), {1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3, 3, 1}, false,
            "CEC2006 g01");
}

ProblemRegistryEntry g2() {
    auto f = [](const Vector& x) {
        double s4 = 0.0, p2 = 1.0, w = 0.0;
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            const double c = std::cos(x[i]);
            s4 += c * c * c * c;
            p2 *= c * c;
            w += static_cast<double>(i + 1) * x[i] * x[i];
        }
        return w > 0.0 ? -std::abs(s4 - 2.0 * p2) / std::sqrt(w) : 0.0;
    };
    std::vector<ScalarFunction> c{
        [](const Vector& x) { return 0.75 - x.prod(); },
        [](const Vector& x) { return x.sum() - 75.0; },
    };
    return entry(make("G2", filled(10, 0.0), filled(10, 10.0), f, c, -0.4),
            {3.1238903754648764, 3.069154867371499, 3.014282308258002, 2.95758835347998, 1.4660413638747147,
             0.36805851235318465, 0.363482331043462, 0.3591206370678866, 0.3549542810571145, 0.3509666472545038},
            true, "CEC2006 g02 with n=10; the listed -0.4 is above the value this point attains (-0.7473)");
}

ProblemRegistryEntry g3mod() {
    constexpr int n = 20;
    auto f = [](const Vector& x) { return -std::pow(std::sqrt(static_cast<double>(n)), n) * x.prod(); };
    std::vector<ScalarFunction> c{[](const Vector& x) { return x.squaredNorm() - 1.0; }};
    return entry(make("G3MOD", filled(n, 0.0), filled(n, 1.0), f, c, -0.69), filled(n, 1.0 / std::sqrt(20.0)), true,
            "CEC2006 g03 with the equality relaxed to <= 0; x_i = 1/sqrt(20) attains -1, below the listed -0.69");
}

ProblemRegistryEntry g4() {
    auto u = [](const Vector& x) {
        return 85.334407 + 0.0056858 * x[1] * x[4] + 0.0006262 * x[0] * x[3] - 0.0022053 * x[2] * x[4];
    };
    auto v = [](const Vector& x) {
        return 80.51249 + 0.0071317 * x[1] * x[4] + 0.0029955 * x[0] * x[1] + 0.0021813 * x[2] * x[2];
    };
    auto w = [](const Vector& x) {
        return 9.300961 + 0.0047026 * x[2] * x[4] + 0.0012547 * x[0] * x[2] + 0.0019085 * x[2] * x[3];
    };
    auto f = [](const Vector& x) {
        return 5.3578547 * x[2] * x[2] + 0.8356891 * x[0] * x[4] + 37.293239 * x[0] - 40792.141;
    };
    std::vector<ScalarFunction> c{
        [u](const Vector& x) { return u(x) - 92.0; }, [u](const Vector& x) { return -u(x); },
        [v](const Vector& x) { return v(x) - 110.0; }, [v](const Vector& x) { return 90.0 - v(x); },
        [w](const Vector& x) { return w(x) - 25.0; }, [w](const Vector& x) { return 20.0 - w(x); },
    };
    return entry(make("G4", {78, 33, 27, 27, 27}, {102, 45, 45, 45, 45}, f, c, -30665.539),
            {78, 33, 29.9952560256815985, 45, 36.7758129057882073}, false, "CEC2006 g04");
}

ProblemRegistryEntry g5mod() {
    auto f = [](const Vector& x) {
        return 3 * x[0] + 1e-6 * std::pow(x[0], 3) + 2 * x[1] + (2e-6 / 3.0) * std::pow(x[1], 3);
    };
    std::vector<ScalarFunction> c{
        [](const Vector& x) { return -x[3] + x[2] - 0.55; },
        [](const Vector& x) { return -x[2] + x[3] - 0.55; },
        [](const Vector& x) {
            return 1000 * std::sin(-x[2] - 0.25) + 1000 * std::sin(-x[3] - 0.25) + 894.8 - x[0];
        },
        [](const Vector& x) {
            return 1000 * std::sin(x[2] - 0.25) + 1000 * std::sin(x[2] - x[3] - 0.25) + 894.8 - x[1];
        },
        [](const Vector& x) {
            return 1000 * std::sin(x[3] - 0.25) + 1000 * std::sin(x[3] - x[2] - 0.25) + 1294.8;
        },
    };
    return entry(make("G5MOD", {0, 0, -0.55, -0.55}, {1200, 1200, 0.55, 0.55}, f, c, 5126.50),
            {679.9455683951395, 1026.0668670312812, 0.1188761872533232, -0.3962336373288653}, false,
            "CEC2006 g05 with the equalities relaxed to <= 0");
}

ProblemRegistryEntry g6() {
    auto f = [](const Vector& x) { return std::pow(x[0] - 10, 3) + std::pow(x[1] - 20, 3); };
    std::vector<ScalarFunction> c{
        [](const Vector& x) { return -std::pow(x[0] - 5, 2) - std::pow(x[1] - 5, 2) + 100; },
        [](const Vector& x) { return std::pow(x[0] - 6, 2) + std::pow(x[1] - 5, 2) - 82.81; },
    };
    return entry(make("G6", {13, 0}, {100, 100}, f, c, -6961.8139), {14.09500000000000064, 0.8429607892154795668},
            false, "CEC2006 g06");
}

ProblemRegistryEntry g7() {
    auto f = [](const Vector& x) {
        return x[0] * x[0] + x[1] * x[1] + x[0] * x[1] - 14 * x[0] - 16 * x[1] + std::pow(x[2] - 10, 2) +
               4 * std::pow(x[3] - 5, 2) + std::pow(x[4] - 3, 2) + 2 * std::pow(x[5] - 1, 2) + 5 * x[6] * x[6] +
               7 * std::pow(x[7] - 11, 2) + 2 * std::pow(x[8] - 10, 2) + std::pow(x[9] - 7, 2) + 45;
    };
    std::vector<ScalarFunction> c{
        [](const Vector& x) { return -105 + 4 * x[0] + 5 * x[1] - 3 * x[6] + 9 * x[7]; },
        [](const Vector& x) { return 10 * x[0] - 8 * x[1] - 17 * x[6] + 2 * x[7]; },
        [](const Vector& x) { return -8 * x[0] + 2 * x[1] + 5 * x[8] - 2 * x[9] - 12; },
        [](const Vector& x) {
            return 3 * std::pow(x[0] - 2, 2) + 4 * std::pow(x[1] - 3, 2) + 2 * x[2] * x[2] - 7 * x[3] - 120;
        },
        [](const Vector& x) { return 5 * x[0] * x[0] + 8 * x[1] + std::pow(x[2] - 6, 2) - 2 * x[3] - 40; },
        [](const Vector& x) {
            return x[0] * x[0] + 2 * std::pow(x[1] - 2, 2) - 2 * x[0] * x[1] + 14 * x[4] - 6 * x[5];
        },
        [](const Vector& x) {
            return 0.5 * std::pow(x[0] - 8, 2) + 2 * std::pow(x[1] - 4, 2) + 3 * x[4] * x[4] - x[5] - 30;
        },
        [](const Vector& x) { return -3 * x[0] + 6 * x[1] + 12 * std::pow(x[8] - 8, 2) - 7 * x[9]; },
    };
    return entry(make("G7", filled(10, -10), filled(10, 10), f, c, 24.3062),
            {2.17199634142692, 2.3636830416034, 8.77392573913157, 5.09598443745173, 0.990654756560493,
             1.43057392853463, 1.32164415364306, 9.82872576524495, 8.2800915887356, 8.3759266477347},
            false, "CEC2006 g07");
}

ProblemRegistryEntry g8() {
    auto f = [](const Vector& x) {
        // Continuous extension at x1 = 0, where sin(2 pi x1) / x1 -> 2 pi.
        const double a = x[0] > 0.0 ? std::sin(2 * pi * x[0]) / x[0] : 2 * pi;
        const double s = x[0] + x[1];
        const double b = s > 0.0 ? std::sin(2 * pi * x[1]) / s : 2 * pi;
        return -a * a * a * b;
    };
    std::vector<ScalarFunction> c{
        [](const Vector& x) { return x[0] * x[0] - x[1] + 1; },
        [](const Vector& x) { return 1 - x[0] + std::pow(x[1] - 4, 2); },
    };
    return entry(make("G8", {0, 0}, {10, 10}, f, c, -0.0958), {1.22797135260752599, 4.24537336612274885}, false,
            "CEC2006 g08");
}

ProblemRegistryEntry g9() {
    auto f = [](const Vector& x) {
        return std::pow(x[0] - 10, 2) + 5 * std::pow(x[1] - 12, 2) + std::pow(x[2], 4) + 3 * std::pow(x[3] - 11, 2) +
               10 * std::pow(x[4], 6) + 7 * x[5] * x[5] + std::pow(x[6], 4) - 4 * x[5] * x[6] - 10 * x[5] -
               8 * x[6];
    };
    std::vector<ScalarFunction> c{
        [](const Vector& x) {
            return -127 + 2 * x[0] * x[0] + 3 * std::pow(x[1], 4) + x[2] + 4 * x[3] * x[3] + 5 * x[4];
        },
        [](const Vector& x) { return -282 + 7 * x[0] + 3 * x[1] + 10 * x[2] * x[2] + x[3] - x[4]; },
        [](const Vector& x) { return -196 + 23 * x[0] + x[1] * x[1] + 6 * x[5] * x[5] - 8 * x[6]; },
        [](const Vector& x) {
            return 4 * x[0] * x[0] + x[1] * x[1] - 3 * x[0] * x[1] + 2 * x[2] * x[2] + 5 * x[5] - 11 * x[6];
        },
    };
    return entry(make("G9", filled(7, -10), filled(7, 10), f, c, 680.6301),
            {2.33049935147405174, 1.95137236847114592, -0.477541399510615805, 4.36572624923625874,
             -0.624486959100388983, 1.03813099410962173, 1.5942266780671519},
            false, "CEC2006 g09");
}

ProblemRegistryEntry g10() {
    auto f = [](const Vector& x) { return x[0] + x[1] + x[2]; };
    std::vector<ScalarFunction> c{
        [](const Vector& x) { return -1 + 0.0025 * (x[3] + x[5]); },
        [](const Vector& x) { return -1 + 0.0025 * (x[4] + x[6] - x[3]); },
        [](const Vector& x) { return -1 + 0.01 * (x[7] - x[4]); },
        [](const Vector& x) { return -x[0] * x[5] + 833.33252 * x[3] + 100 * x[0] - 83333.333; },
        [](const Vector& x) { return -x[1] * x[6] + 1250 * x[4] + x[1] * x[3] - 1250 * x[3]; },
        [](const Vector& x) { return -x[2] * x[7] + 1250000 + x[2] * x[4] - 2500 * x[4]; },
    };
    return entry(make("G10", {100, 1000, 1000, 10, 10, 10, 10, 10}, {10000, 10000, 10000, 1000, 1000, 1000, 1000, 1000}, f,
                 c, 7049.3307),
            {579.306685017979589, 1359.97067807935605, 5109.97065743133317, 182.01769963061534, 295.601173702746792,
             217.982300369384632, 286.41652592786852, 395.601173702746735},
            false, "CEC2006 g10");
}

ProblemRegistryEntry g18() {
    auto f = [](const Vector& x) {
        return -0.5 * (x[0] * x[3] - x[1] * x[2] + x[2] * x[8] - x[4] * x[8] + x[4] * x[7] - x[5] * x[6]);
    };
    auto sq = [](double v) { return v * v; };
    std::vector<ScalarFunction> c{
        [sq](const Vector& x) { return sq(x[2]) + sq(x[3]) - 1; },
        [sq](const Vector& x) { return sq(x[8]) - 1; },
        [sq](const Vector& x) { return sq(x[4]) + sq(x[5]) - 1; },
        [sq](const Vector& x) { return sq(x[0]) + sq(x[1] - x[8]) - 1; },
        [sq](const Vector& x) { return sq(x[0] - x[4]) + sq(x[1] - x[5]) - 1; },
        [sq](const Vector& x) { return sq(x[0] - x[6]) + sq(x[1] - x[7]) - 1; },
        [sq](const Vector& x) { return sq(x[2] - x[4]) + sq(x[3] - x[5]) - 1; },
        [sq](const Vector& x) { return sq(x[2] - x[6]) + sq(x[3] - x[7]) - 1; },
        [sq](const Vector& x) { return sq(x[6]) + sq(x[7] - x[8]) - 1; },
        [](const Vector& x) { return x[1] * x[2] - x[0] * x[3]; },
        [](const Vector& x) { return -x[2] * x[8]; },
        [](const Vector& x) { return x[4] * x[8]; },
        [](const Vector& x) { return x[5] * x[6] - x[4] * x[7]; },
    };
    std::vector<double> lo = filled(9, -10), up = filled(9, 10);
    lo[8] = 0;
    up[8] = 20;
    return entry(make("G18", lo, up, f, c, -0.8660),
            {-0.657776192427943163, -0.153418773482438542, 0.323413871675240938, -0.946257611651304398,
             -0.657776194376798906, -0.753213434632691414, 0.323413874123576972, -0.346462947962331735,
             0.59979466285217542},
            false, "CEC2006 g18");
}

ProblemRegistryEntry g19() {
    static const double a[10][5] = {{-16, 2, 0, 1, 0},   {0, -2, 0, 0.4, 2},  {-3.5, 0, 2, 0, 0}, {0, -2, 0, -4, -1},
                                    {0, -9, -2, 1, -2.8}, {2, 0, -4, 0, 0},    {-1, -1, -1, -1, -1},
                                    {-1, -2, -3, -2, -1}, {1, 2, 3, 4, 5},     {1, 1, 1, 1, 1}};
    static const double b[10] = {-40, -2, -0.25, -4, -4, -1, -40, -60, 5, 1};
    static const double cm[5][5] = {{30, -20, -10, 32, -10},
                                    {-20, 39, -6, -31, 32},
                                    {-10, -6, 10, -6, -10},
                                    {32, -31, -6, 39, -20},
                                    {-10, 32, -10, -20, 30}};
    static const double dv[5] = {4, 8, 10, 6, 2};
    static const double e[5] = {-15, -27, -36, -18, -12};
    auto f = [](const Vector& x) {
        double s = 0.0;
        for (int j = 0; j < 5; ++j) {
            for (int i = 0; i < 5; ++i) s += cm[i][j] * x[10 + i] * x[10 + j];
            s += 2 * dv[j] * std::pow(x[10 + j], 3);
        }
        for (int i = 0; i < 10; ++i) s -= b[i] * x[i];
        return s;
    };
    std::vector<ScalarFunction> c;
    for (int j = 0; j < 5; ++j) {
        c.push_back([j](const Vector& x) {
            double s = -3 * dv[j] * x[10 + j] * x[10 + j] - e[j];
            for (int i = 0; i < 5; ++i) s -= 2 * cm[i][j] * x[10 + i];
            for (int i = 0; i < 10; ++i) s += a[i][j] * x[i];
            return s;
        });
    }
    return entry(make("G19", filled(15, 0), filled(15, 10), f, c, 32.6556),
            {1.66991341326291344e-17, 3.95378229282456509e-16, 3.94599045143233784, 1.06036597479721211e-16,
             3.2831773458454161, 9.99999999999999822, 1.12829414671605333e-17, 1.2026194599794709e-17,
             2.50706276000769697e-15, 2.24624122987970677e-15, 0.370764847417013987, 0.278456024942955571,
             0.523838487672241171, 0.388620152510322781, 0.298156764974678579},
            false, "CEC2006 g19");
}

ProblemRegistryEntry g24() {
    auto f = [](const Vector& x) { return -x[0] - x[1]; };
    std::vector<ScalarFunction> c{
        [](const Vector& x) {
            return -2 * std::pow(x[0], 4) + 8 * std::pow(x[0], 3) - 8 * x[0] * x[0] + x[1] - 2;
        },
        [](const Vector& x) {
            return -4 * std::pow(x[0], 4) + 32 * std::pow(x[0], 3) - 88 * x[0] * x[0] + 96 * x[0] + x[1] - 36;
        },
    };
    return entry(make("G24", {0, 0}, {3, 4}, f, c, -5.5080), {2.32952019747762, 3.17849307411774}, false,
            "CEC2006 g24");
}

ProblemRegistryEntry gtcd() {
    auto f = [](const Vector& x) {
        return 8.61e5 * std::sqrt(x[0]) * x[1] * std::pow(x[2], -2.0 / 3.0) / std::sqrt(x[3]) + 3.69e4 * x[2] +
               7.72e8 / x[0] * std::pow(x[1], 0.219) - 765.43e6 / x[0];
    };
    std::vector<ScalarFunction> c{[](const Vector& x) { return x[3] / (x[1] * x[1]) + 1.0 / (x[1] * x[1]) - 1; }};
    return entry(make("GTCD", {20, 1, 20, 0.1}, {50, 10, 50, 60}, f, c, 2964893.85),
            {50, 1.1782839631981927, 24.59258456, 0.38835309793007866}, false,
            "gas transmission compressor design");
}

ProblemRegistryEntry hesse() {
    auto f = [](const Vector& x) {
        return -25 * std::pow(x[0] - 2, 2) - std::pow(x[1] - 2, 2) - std::pow(x[2] - 1, 2) - std::pow(x[3] - 4, 2) -
               std::pow(x[4] - 1, 2) - std::pow(x[5] - 4, 2);
    };
    std::vector<ScalarFunction> c{
        [](const Vector& x) { return 2 - x[0] - x[1]; },
        [](const Vector& x) { return x[0] + x[1] - 6; },
        [](const Vector& x) { return -x[0] + x[1] - 2; },
        [](const Vector& x) { return x[0] - 3 * x[1] - 2; },
        [](const Vector& x) { return 4 - std::pow(x[2] - 3, 2) - x[3]; },
        [](const Vector& x) { return 4 - std::pow(x[4] - 3, 2) - x[5]; },
    };
    return entry(make("Hesse", {0, 0, 1, 0, 1, 0}, {5, 4, 5, 6, 5, 10}, f, c, -310.0), {5, 1, 5, 0, 5, 10}, false,
            "Hesse's six-variable concave problem");
}

ProblemRegistryEntry pvd() {
    auto f = [](const Vector& x) {
        return 0.6224 * x[0] * x[2] * x[3] + 1.7781 * x[1] * x[2] * x[2] + 3.1661 * x[0] * x[0] * x[3] +
               19.84 * x[0] * x[0] * x[2];
    };
    std::vector<ScalarFunction> c{
        [](const Vector& x) { return -x[0] + 0.0193 * x[2]; },
        [](const Vector& x) { return -x[1] + 0.00954 * x[2]; },
        [](const Vector& x) {
            return -pi * x[2] * x[2] * x[3] - 4.0 / 3.0 * pi * std::pow(x[2], 3) + 1296000;
        },
    };
    return entry(make("PVD", {0.0625, 0.0625, 10, 10}, {6.1875, 6.1875, 200, 240}, f, c, 5804.45),
            {0.72759093, 0.35964857, 37.69901188, 240}, false, "pressure vessel design, continuous relaxation");
}

ProblemRegistryEntry sr() {
    auto f = [](const Vector& x) {
        return 0.7854 * x[0] * x[1] * x[1] * (3.3333 * x[2] * x[2] + 14.9334 * x[2] - 43.0934) -
               1.508 * x[0] * (x[5] * x[5] + x[6] * x[6]) + 7.4777 * (std::pow(x[5], 3) + std::pow(x[6], 3)) +
               0.7854 * (x[3] * x[5] * x[5] + x[4] * x[6] * x[6]);
    };
    std::vector<ScalarFunction> c{
        [](const Vector& x) { return 27 / (x[0] * x[1] * x[1] * x[2]) - 1; },
        [](const Vector& x) { return 397.5 / (x[0] * x[1] * x[1] * x[2] * x[2]) - 1; },
        [](const Vector& x) { return 1.93 * std::pow(x[3], 3) / (x[1] * x[2] * std::pow(x[5], 4)) - 1; },
        [](const Vector& x) { return 1.93 * std::pow(x[4], 3) / (x[1] * x[2] * std::pow(x[6], 4)) - 1; },
        [](const Vector& x) {
            return std::sqrt(std::pow(745 * x[3] / (x[1] * x[2]), 2) + 16.9e6) / (110 * std::pow(x[5], 3)) - 1;
        },
        [](const Vector& x) {
            return std::sqrt(std::pow(745 * x[4] / (x[1] * x[2]), 2) + 157.5e6) / (85 * std::pow(x[6], 3)) - 1;
        },
        [](const Vector& x) { return x[1] * x[2] / 40 - 1; },
        [](const Vector& x) { return 5 * x[1] / x[0] - 1; },
        [](const Vector& x) { return x[0] / (12 * x[1]) - 1; },
        [](const Vector& x) { return (1.5 * x[5] + 1.9) / x[3] - 1; },
        [](const Vector& x) { return (1.1 * x[6] + 1.9) / x[4] - 1; },
    };
    return entry(make("SR", {2.6, 0.7, 17, 7.3, 7.3, 2.9, 5.0}, {3.6, 0.8, 28, 8.3, 8.3, 3.9, 5.5}, f, c, 2994.42),
            {3.5, 0.7, 17, 7.3, 7.715319912, 3.350214666, 5.286654465}, false, "speed reducer");
}

ProblemRegistryEntry wb() {
    constexpr double P = 6000, L = 14, E = 30e6, G = 12e6;
    auto tau = [](const Vector& x) {
        const double tp = P / (std::sqrt(2.0) * x[0] * x[1]);
        const double M = P * (L + x[1] / 2);
        const double R = std::sqrt(x[1] * x[1] / 4 + std::pow((x[0] + x[2]) / 2, 2));
        const double J = 2 * (std::sqrt(2.0) * x[0] * x[1] * (x[1] * x[1] / 12 + std::pow((x[0] + x[2]) / 2, 2)));
        const double tpp = M * R / J;
        return std::sqrt(tp * tp + tp * tpp * x[1] / R + tpp * tpp);
    };
    auto f = [](const Vector& x) { return 1.10471 * x[0] * x[0] * x[1] + 0.04811 * x[2] * x[3] * (14 + x[1]); };
    std::vector<ScalarFunction> c{
        [tau](const Vector& x) { return tau(x) - 13600; },
        [](const Vector& x) { return 6 * P * L / (x[3] * x[2] * x[2]) - 30000; },
        [](const Vector& x) { return x[0] - x[3]; },
        [](const Vector& x) { return 0.10471 * x[0] * x[0] + 0.04811 * x[2] * x[3] * (14 + x[1]) - 5; },
        [](const Vector& x) { return 4 * P * L * L * L / (E * std::pow(x[2], 3) * x[3]) - 0.25; },
        [](const Vector& x) {
            const double pc = 4.013 * E * std::sqrt(x[2] * x[2] * std::pow(x[3], 6) / 36) / (L * L) *
                              (1 - x[2] / (2 * L) * std::sqrt(E / (4 * G)));
            return P - pc;
        },
    };
    return entry(make("WB", {0.1, 0.1, 0.1, 0.1}, {2, 10, 10, 2}, f, c, 1.7250),
            {0.20572963978554634, 3.470488665627145, 9.036623910357239, 0.20572963978485026}, false,
            "welded beam design");
}

std::vector<ProblemRegistryEntry> build() {
    std::vector<ProblemRegistryEntry> r;
    for (auto* make_entry : {g1, g2, g3mod, g4, g5mod, g6, g7, g8, g9, g10, g18, g19, g24, gtcd, hesse, pvd, sr, wb})
        r.push_back(make_entry());
    return r;
}

}  // namespace

const std::vector<ProblemRegistryEntry>& problem_registry() {
    static const std::vector<ProblemRegistryEntry> registry = build();
    return registry;
}

const ProblemRegistryEntry& registry_entry(std::string_view name) {
    for (const auto& e : problem_registry())
        if (e.spec.name == name) return e;
    throw std::invalid_argument("unknown problem: " + std::string(name));
}

ProblemSpec get_problem(std::string_view name) { return registry_entry(name).spec; }

ProblemSpec get_problem(std::string_view name, Scenario scenario) {
    return relabel(registry_entry(name).spec, scenario);
}

std::vector<std::string> list_problems(Scenario scenario) {
    std::vector<std::string> names;
    for (const auto& e : problem_registry()) {
        if (scenario != Scenario::Set1 && e.spec.num_constraints() < 2) continue;
        names.push_back(e.spec.name);
    }
    return names;
}

}  // namespace gsdo
