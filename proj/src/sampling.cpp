#include "gsdo/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gsdo {

namespace {

constexpr int kBallAttempts = 100;

void shuffle(std::vector<std::size_t>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_index(rng, i)]);
}

/// Standard normal by Box-Muller, kept local for cross-platform streams.
double standard_normal(Rng& rng) {
    const double u1 = 1.0 - uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

}  // namespace

std::vector<Vector> latin_hypercube(const Vector& lower, const Vector& upper, std::size_t n, Rng& rng) {
    if (n == 0) throw ContractError("latin_hypercube: n must be positive");
    const auto d = lower.size();
    std::vector<Vector> design(n, Vector(d));
    std::vector<std::size_t> strata(n);
    for (Eigen::Index k = 0; k < d; ++k) {
        std::iota(strata.begin(), strata.end(), std::size_t{0});
        shuffle(strata, rng);
        const double width = upper[k] - lower[k];
        for (std::size_t j = 0; j < n; ++j) {
            const double t = (static_cast<double>(strata[j]) + uniform01(rng)) / static_cast<double>(n);
            design[j][k] = std::min(lower[k] + t * width, upper[k]);
        }
    }
    return design;
}

double random_ball_radius(const Vector& lower, const Vector& upper, double delta_r, double delta_d) {
    const double delta_lu = (upper - lower).cwiseAbs().minCoeff();
    return std::min(delta_lu / delta_r, delta_d * std::sqrt(static_cast<double>(lower.size())));
}

Vector random_ball_point(const Archive& archive, const Vector& lower, const Vector& upper, double delta_r,
                         double delta_d, Rng& rng) {
    const auto latest = archive.latest_feasible();
    if (!latest) throw ContractError("random_ball_point: no feasible point to center on");
    const Vector& center = archive[*latest].x;
    const auto d = center.size();
    const double radius = random_ball_radius(lower, upper, delta_r, delta_d);

    auto inside = [&](const Vector& y) {
        return (y.array() >= lower.array()).all() && (y.array() <= upper.array()).all();
    };

    Vector dir(d);
    for (int attempt = 0; attempt < kBallAttempts; ++attempt) {
        for (Eigen::Index k = 0; k < d; ++k) dir[k] = standard_normal(rng);
        const double norm = dir.norm();
        if (norm == 0.0) continue;
        const double r = radius * std::pow(uniform01(rng), 1.0 / static_cast<double>(d));
        Vector y = center + (r / norm) * dir;
        if (inside(y) && !archive.contains(y)) return y;
    }
    for (;;) {
        Vector y = latin_hypercube(lower, upper, 1, rng).front();
        if (!archive.contains(y)) return y;
    }
}

}  // namespace gsdo
