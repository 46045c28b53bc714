#pragma once

#include <vector>

#include "gsdo/archive.hpp"

namespace gsdo {

/// Scores returned by the classification constraint. c1 marks "good"
/// neighborhoods; c2, c3, c4 mark S, U and H neighborhoods respectively.
struct GcParams {
    double c1 = 1.0;
    double c2 = -1.0;
    double c3 = -10.0;
    double c4 = -100.0;
    int k_neighbors = 3;

    /// Throws ContractError unless c1 > 0, c4 < c3 < c2 < 0 and k is a positive odd integer.
    void validate() const;
};

/// Data sufficiency guard: more than two good (F or I) points and more than two
/// points in some violation class (H, U or S).
bool classifier_active(const Archive& archive);

/// Classification constraint g_c at a point given in normalized coordinates.
/// Majority vote of the k nearest archived points, with F and I pooled; a tied
/// vote goes to the class of the single nearest neighbor.
double classification_constraint(const Archive& archive, const Vector& xn, const GcParams& params);

/// Snapshot of an archive for repeated g_c queries.
class ClassificationConstraint {
public:
    ClassificationConstraint(const Archive& archive, GcParams params);

    double operator()(const Vector& xn) const;

    bool active() const { return active_; }

private:
    GcParams params_;
    bool active_ = false;
    int dimension_ = 0;
    std::vector<double> points_;  // row-major, normalized
    std::vector<int> labels_;     // 0 good, 1 S, 2 U, 3 H
};

}  // namespace gsdo
