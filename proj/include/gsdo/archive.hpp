#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "gsdo/problem.hpp"

namespace gsdo {

/// Mutually exclusive classes of evaluated points.
///   F  feasible
///   I  violates only QRSK constraints
///   S  violates an NRSK constraint (and nothing unrelaxable)
///   U  violates exactly one QUSK constraint (and no NUSK/NUSH)
///   H  hidden failure, any NUSK/NUSH violation, or two or more QUSK violations
enum class PointClass { F = 0, I, S, U, H };

inline constexpr std::array<PointClass, 5> kAllClasses{PointClass::F, PointClass::I, PointClass::S, PointClass::U,
                                                        PointClass::H};

char class_letter(PointClass c);

/// Classification rule applied to a single outcome. Throws ContractError on an
/// inconsistent outcome (hidden failure that still reports an objective, or a
/// constraint vector of the wrong length).
PointClass classify(const EvaluationOutcome& outcome, const std::vector<ConstraintKind>& kinds);

/// Two points closer than this in normalized coordinates are the same point.
inline constexpr double kDuplicateTolerance = 1e-10;

struct EvaluatedPoint {
    Vector x;           // raw coordinates
    Vector normalized;  // (x - l) / (u - l)
    EvaluationOutcome outcome;
    PointClass cls = PointClass::F;
    /// For U points: index of the single violated QUSK constraint.
    std::optional<std::size_t> violated_qusk;
};

struct BestPoint {
    Vector x;
    double f = 0.0;
    std::size_t index = 0;
};

/// Evaluated-point history, partitioned by PointClass.
class Archive {
public:
    Archive(Vector lower, Vector upper, std::vector<ConstraintKind> kinds);
    explicit Archive(const ProblemSpec& problem);

    /// Classifies and appends x. Throws ContractError on a duplicate point or an
    /// inconsistent outcome.
    PointClass filter_point(const Vector& x, EvaluationOutcome outcome);

    bool contains(const Vector& x) const;
    bool contains_normalized(const Vector& xn) const;

    Vector normalize(const Vector& x) const;
    Vector denormalize(const Vector& xn) const;

    std::optional<BestPoint> best_feasible() const;

    /// Index of the most recently added point in class F.
    std::optional<std::size_t> latest_feasible() const;

    const std::vector<EvaluatedPoint>& points() const { return points_; }
    const EvaluatedPoint& operator[](std::size_t i) const { return points_[i]; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    std::size_t eval_count() const { return points_.size(); }

    const std::vector<std::size_t>& indices(PointClass c) const { return by_class_[static_cast<int>(c)]; }
    std::size_t count(PointClass c) const { return indices(c).size(); }

    const Vector& lower() const { return lower_; }
    const Vector& upper() const { return upper_; }
    const std::vector<ConstraintKind>& kinds() const { return kinds_; }
    int dimension() const { return static_cast<int>(lower_.size()); }

    /// One row per point: coordinates, class letter, objective (or NA), then
    /// each constraint as its value, or pass/fail, or NA.
    void write_csv(std::ostream& out) const;

    /// Throws ContractError unless the class index lists partition the points.
    void check_partition() const;

private:

    Vector lower_;
    Vector upper_;
    Vector width_;
    std::vector<ConstraintKind> kinds_;
    std::vector<EvaluatedPoint> points_;
    std::array<std::vector<std::size_t>, 5> by_class_;
};

}  // namespace gsdo
