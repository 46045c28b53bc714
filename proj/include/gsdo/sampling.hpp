#pragma once

#include <cstddef>
#include <vector>

#include "gsdo/archive.hpp"
#include "gsdo/random.hpp"

namespace gsdo {

/// Latin hypercube design of n points in [lower, upper]: in every dimension
/// each of the n equal strata holds exactly one coordinate.
std::vector<Vector> latin_hypercube(const Vector& lower, const Vector& upper, std::size_t n, Rng& rng);

/// min{delta_lu / delta_r, delta_d * sqrt(d)} with delta_lu the smallest raw bound width.
double random_ball_radius(const Vector& lower, const Vector& upper, double delta_r, double delta_d);

/// A point drawn uniformly from the ball around the most recently evaluated
/// feasible point, restricted to the box by rejection and never already
/// archived. After 100 rejected draws a fresh single-point LHS sample is used.
/// Throws ContractError when the archive holds no feasible point.
Vector random_ball_point(const Archive& archive, const Vector& lower, const Vector& upper, double delta_r,
                         double delta_d, Rng& rng);

}  // namespace gsdo
