#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "gsdo/archive.hpp"
#include "gsdo/problem.hpp"

namespace gsdo {

/// The centers do not span an affine basis: rank([P e]) < d + 1.
class RankError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The interpolation system could not be solved, even after regularization.
class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Rank of the n x (d+1) matrix [points 1].
int augmented_rank(const Matrix& points);

/// Cubic RBF interpolant with a linear tail:
///   s(x) = sum_i gamma_i |x - c_i|^3 + lambda[0..d)^T x + lambda[d]
class RbfModel {
public:
    RbfModel() = default;
    RbfModel(Matrix centers, Vector gamma, Vector lambda);

    double operator()(const Vector& x) const;

    const Matrix& centers() const { return centers_; }
    const Vector& gamma() const { return gamma_; }
    const Vector& lambda() const { return lambda_; }
    int dimension() const { return static_cast<int>(centers_.cols()); }
    std::size_t size() const { return static_cast<std::size_t>(centers_.rows()); }

    /// Debug dump: one row per center (coordinates, gamma), then a lambda row.
    void write_csv(std::ostream& out) const;

private:
    Matrix centers_;
    Vector gamma_;
    Vector lambda_;
};

/// Several interpolants over one set of centers, fitted with a single
/// factorization and evaluated with a single pass over the centers.
class RbfGroup {
public:
    RbfGroup() = default;
    RbfGroup(RowMatrix centers, RowMatrix gamma, RowMatrix lambda);

    std::size_t outputs() const { return static_cast<std::size_t>(gamma_.cols()); }
    std::size_t size() const { return static_cast<std::size_t>(centers_.rows()); }
    int dimension() const { return static_cast<int>(centers_.cols()); }

    /// Writes outputs() values to out.
    void evaluate(const double* x, double* out) const;

    RbfModel model(std::size_t output) const;

    const RowMatrix& centers() const { return centers_; }

private:
    RowMatrix centers_;  // n x d
    RowMatrix gamma_;    // n x k
    RowMatrix lambda_;   // (d+1) x k
};

/// Solves the interpolation system for each column of values (n x k).
/// Throws ContractError for coincident centers, RankError when the affine
/// rank condition fails, FitError when the system stays singular.
RbfGroup fit_rbf_group(const Matrix& points, const Matrix& values);

RbfModel fit_rbf(const Matrix& points, const Vector& values);

// Archive-level fitting. All geometry is in the archive's normalized
// coordinates, and queries to the resulting models must be normalized too.

/// Candidate centers are capped at this many points per fit.
std::size_t center_cap(int dimension);

/// Archive indices used as centers for the objective surrogate: F, I and S
/// points, capped.
std::vector<std::size_t> objective_center_indices(const Archive& archive);

/// Archive indices used as centers for quantifiable constraint j: F, I and S
/// points, plus for a QUSK constraint the U points that satisfy j.
std::vector<std::size_t> constraint_center_indices(const Archive& archive, std::size_t j);

/// False for an empty archive; otherwise true iff every quantifiable
/// constraint's candidate centers have full affine rank.
bool rank_ready(const Archive& archive);

RbfModel fit_constraint_surrogate(const Archive& archive, std::size_t j);
RbfModel fit_objective_surrogate(const Archive& archive);

/// Objective surrogate (optional) and every quantifiable-constraint surrogate
/// of an archive, grouped by shared center sets.
class SurrogateSet {
public:
    SurrogateSet() = default;

    /// Fits everything at once. Throws RankError / FitError like the single fits.
    static SurrogateSet fit(const Archive& archive, bool with_objective);

    bool has_objective() const { return has_objective_; }
    std::size_t num_constraints() const { return constraint_ids_.size(); }

    /// Problem constraint index of surrogate slot s.
    std::size_t constraint_id(std::size_t s) const { return constraint_ids_[s]; }

    /// Returns the objective surrogate (0 if absent) and writes the constraint
    /// surrogates to g, which must hold num_constraints() values.
    double evaluate(const Vector& xn, std::span<double> g) const;

    /// Archive indices of the centers behind the objective and each constraint.
    const std::vector<std::size_t>& objective_centers() const;
    const std::vector<std::size_t>& constraint_centers(std::size_t s) const;

private:
    struct Slot {
        std::size_t group = 0;
        std::size_t column = 0;
    };

    std::vector<RbfGroup> groups_;
    std::vector<std::vector<std::size_t>> group_centers_;
    bool has_objective_ = false;
    Slot objective_slot_;
    std::vector<Slot> constraint_slots_;
    std::vector<std::size_t> constraint_ids_;
};

}  // namespace gsdo
