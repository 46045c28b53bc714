#include "gsdo/rbf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>

#include <Eigen/LU>
#include <Eigen/QR>

namespace gsdo {

namespace {

constexpr double kRankThreshold = 1e-10;
constexpr double kResidualTolerance = 1e-8;
constexpr double kRidgeScale = 1e-10;
// Data whose affine least-squares residual is below this (relative) is affine
// up to rounding and gets gamma = 0.
constexpr double kAffineResidual = 1e-12;

double cube_distance(const double* a, const double* b, int d) {
    double r2 = 0.0;
    for (int k = 0; k < d; ++k) {
        const double t = a[k] - b[k];
        r2 += t * t;
    }
    return r2 * std::sqrt(r2);
}

bool solve_checked(const Matrix& a, const Matrix& b, Matrix& sol) {
    Eigen::PartialPivLU<Matrix> lu(a);
    sol = lu.solve(b);
    if (!sol.allFinite()) return false;
    const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
    return (a * sol - b).cwiseAbs().maxCoeff() <= kResidualTolerance * scale;
}

}  // namespace

int augmented_rank(const Matrix& points) {
    if (points.rows() == 0) return 0;
    Matrix p(points.rows(), points.cols() + 1);
    p.leftCols(points.cols()) = points;
    p.col(points.cols()).setOnes();
    Eigen::ColPivHouseholderQR<Matrix> qr(p);
    qr.setThreshold(kRankThreshold);
    return static_cast<int>(qr.rank());
}

RbfModel::RbfModel(Matrix centers, Vector gamma, Vector lambda)
    : centers_(std::move(centers)), gamma_(std::move(gamma)), lambda_(std::move(lambda)) {
    if (gamma_.size() != centers_.rows() || lambda_.size() != centers_.cols() + 1)
        throw ContractError("RbfModel: inconsistent coefficient sizes");
}

double RbfModel::operator()(const Vector& x) const {
    const int d = dimension();
    if (x.size() != d) throw ContractError("RbfModel: query has the wrong dimension");
    double s = lambda_[d];
    for (int k = 0; k < d; ++k) s += lambda_[k] * x[k];
    for (Eigen::Index i = 0; i < centers_.rows(); ++i) {
        const double r = (x.transpose() - centers_.row(i)).norm();
        s += gamma_[i] * r * r * r;
    }
    return s;
}

void RbfModel::write_csv(std::ostream& out) const {
    const int d = dimension();
    for (int k = 0; k < d; ++k) out << "c" << k + 1 << ',';
    out << "gamma\n";
    const auto old_precision = out.precision(17);
    for (Eigen::Index i = 0; i < centers_.rows(); ++i) {
        for (int k = 0; k < d; ++k) out << centers_(i, k) << ',';
        out << gamma_[i] << '\n';
    }
    out << "lambda";
    for (Eigen::Index k = 0; k < lambda_.size(); ++k) out << ',' << lambda_[k];
    out << '\n';
    out.precision(old_precision);
}

RbfGroup::RbfGroup(RowMatrix centers, RowMatrix gamma, RowMatrix lambda)
    : centers_(std::move(centers)), gamma_(std::move(gamma)), lambda_(std::move(lambda)) {}

void RbfGroup::evaluate(const double* x, double* out) const {
    const int d = dimension();
    const auto k = static_cast<Eigen::Index>(outputs());
    for (Eigen::Index c = 0; c < k; ++c) {
        double s = lambda_(d, c);
        for (int l = 0; l < d; ++l) s += lambda_(l, c) * x[l];
        out[c] = s;
    }
    const double* centers = centers_.data();
    const double* gamma = gamma_.data();
    for (Eigen::Index i = 0; i < centers_.rows(); ++i) {
        const double phi = cube_distance(x, centers + i * d, d);
        const double* row = gamma + i * k;
        for (Eigen::Index c = 0; c < k; ++c) out[c] += row[c] * phi;
    }
}

RbfModel RbfGroup::model(std::size_t output) const {
    const auto c = static_cast<Eigen::Index>(output);
    return RbfModel(Matrix(centers_), Vector(gamma_.col(c)), Vector(lambda_.col(c)));
}

RbfGroup fit_rbf_group(const Matrix& points, const Matrix& values) {
    const Eigen::Index n = points.rows();
    const Eigen::Index d = points.cols();
    if (n == 0 || d == 0) throw ContractError("fit_rbf: no points");
    if (values.rows() != n) throw ContractError("fit_rbf: values do not match points");

    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if ((points.row(i) - points.row(j)).norm() < kDuplicateTolerance)
                throw ContractError("fit_rbf: coincident centers");
        }
    }
    if (augmented_rank(points) < d + 1) throw RankError("fit_rbf: centers are affinely rank deficient");

    const Eigen::Index size = n + d + 1;
    Matrix a = Matrix::Zero(size, size);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double r = (points.row(i) - points.row(j)).norm();
            a(i, j) = a(j, i) = r * r * r;
        }
    }
    a.block(0, n, n, d) = points;
    a.block(0, n + d, n, 1).setOnes();
    a.block(n, 0, d + 1, n) = a.block(0, n, n, d + 1).transpose();

    // Split off the affine least-squares part; the kernel system only sees the rest.
    const Matrix tail = a.block(0, n, n, d + 1);
    Eigen::ColPivHouseholderQR<Matrix> qr(tail);
    const Matrix lambda0 = qr.solve(values);
    Matrix rest = values - tail * lambda0;
    for (Eigen::Index c = 0; c < rest.cols(); ++c) {
        const double scale = std::max(1.0, values.col(c).cwiseAbs().maxCoeff());
        if (rest.col(c).cwiseAbs().maxCoeff() <= kAffineResidual * scale) rest.col(c).setZero();
    }

    Matrix b = Matrix::Zero(size, values.cols());
    b.topRows(n) = rest;

    Matrix sol;
    if (rest.isZero(0.0)) {
        sol = Matrix::Zero(size, values.cols());
    } else if (!solve_checked(a, b, sol)) {
        // The cubic kernel has a zero diagonal, so the ridge is scaled by the
        // mean magnitude of the kernel block instead of its trace.
        const double mean_phi = a.topLeftCorner(n, n).cwiseAbs().mean();
        const double ridge = kRidgeScale * std::max(mean_phi, std::numeric_limits<double>::min());
        a.topLeftCorner(n, n).diagonal().array() += ridge;
        if (!solve_checked(a, b, sol)) throw FitError("fit_rbf: interpolation system is numerically singular");
    }

    RowMatrix centers = points;
    RowMatrix gamma = sol.topRows(n);
    RowMatrix lambda = sol.bottomRows(d + 1) + lambda0;
    return RbfGroup(std::move(centers), std::move(gamma), std::move(lambda));
}

RbfModel fit_rbf(const Matrix& points, const Vector& values) {
    return fit_rbf_group(points, Matrix(values)).model(0);
}

std::size_t center_cap(int dimension) { return 60 * static_cast<std::size_t>(dimension + 1); }

namespace {

std::vector<std::size_t> relaxable_indices(const Archive& archive) {
    std::vector<std::size_t> out;
    for (auto c : {PointClass::F, PointClass::I, PointClass::S}) {
        const auto& idx = archive.indices(c);
        out.insert(out.end(), idx.begin(), idx.end());
    }
    return out;
}

/// Keeps the most recent half of the cap, fills the rest with the best
/// objective values, and returns indices in evaluation order.
std::vector<std::size_t> apply_cap(const Archive& archive, std::vector<std::size_t> idx) {
    std::sort(idx.begin(), idx.end());
    const std::size_t cap = center_cap(archive.dimension());
    if (idx.size() <= cap) return idx;

    const std::size_t recent = cap / 2;
    std::vector<std::size_t> keep(idx.end() - static_cast<std::ptrdiff_t>(recent), idx.end());
    std::vector<std::size_t> rest(idx.begin(), idx.end() - static_cast<std::ptrdiff_t>(recent));
    auto objective_of = [&](std::size_t i) {
        const auto& f = archive[i].outcome.objective;
        return f ? *f : std::numeric_limits<double>::infinity();
    };
    std::stable_sort(rest.begin(), rest.end(),
                     [&](std::size_t a, std::size_t b) { return objective_of(a) < objective_of(b); });
    keep.insert(keep.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(cap - recent));
    std::sort(keep.begin(), keep.end());
    return keep;
}

Matrix gather_points(const Archive& archive, const std::vector<std::size_t>& idx) {
    Matrix p(static_cast<Eigen::Index>(idx.size()), archive.dimension());
    for (std::size_t r = 0; r < idx.size(); ++r) p.row(static_cast<Eigen::Index>(r)) = archive[idx[r]].normalized;
    return p;
}

void require_quantifiable(const Archive& archive, std::size_t j) {
    if (j >= archive.kinds().size()) throw ContractError("constraint index out of range");
    if (!quantifiable(archive.kinds()[j])) throw ContractError("constraint has no surrogate: not quantifiable");
}

}  // namespace

std::vector<std::size_t> objective_center_indices(const Archive& archive) {
    return apply_cap(archive, relaxable_indices(archive));
}

std::vector<std::size_t> constraint_center_indices(const Archive& archive, std::size_t j) {
    require_quantifiable(archive, j);
    auto idx = relaxable_indices(archive);
    if (archive.kinds()[j] == ConstraintKind::QUSK) {
        for (std::size_t i : archive.indices(PointClass::U)) {
            if (!archive[i].outcome.constraints[j].violated()) idx.push_back(i);
        }
    }
    return apply_cap(archive, std::move(idx));
}

bool rank_ready(const Archive& archive) {
    if (archive.empty()) return false;
    const int d = archive.dimension();
    for (std::size_t j = 0; j < archive.kinds().size(); ++j) {
        if (!quantifiable(archive.kinds()[j])) continue;
        const auto idx = constraint_center_indices(archive, j);
        if (static_cast<int>(idx.size()) < d + 1) return false;
        if (augmented_rank(gather_points(archive, idx)) < d + 1) return false;
    }
    return true;
}

RbfModel fit_constraint_surrogate(const Archive& archive, std::size_t j) {
    const auto idx = constraint_center_indices(archive, j);
    if (static_cast<int>(idx.size()) < archive.dimension() + 1) throw RankError("too few centers for constraint");
    Vector values(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r) values[static_cast<Eigen::Index>(r)] = *archive[idx[r]].outcome.constraints[j].value;
    return fit_rbf(gather_points(archive, idx), values);
}

RbfModel fit_objective_surrogate(const Archive& archive) {
    const auto idx = objective_center_indices(archive);
    if (static_cast<int>(idx.size()) < archive.dimension() + 1) throw RankError("too few centers for objective");
    Vector values(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r) values[static_cast<Eigen::Index>(r)] = *archive[idx[r]].outcome.objective;
    return fit_rbf(gather_points(archive, idx), values);
}

SurrogateSet SurrogateSet::fit(const Archive& archive, bool with_objective) {
    // Outputs sharing a center set are solved together. Output id -1 is the
    // objective; other ids are problem constraint indices.
    std::map<std::vector<std::size_t>, std::vector<long>> requests;
    if (with_objective) requests[objective_center_indices(archive)].push_back(-1);
    std::vector<std::size_t> ids;
    for (std::size_t j = 0; j < archive.kinds().size(); ++j) {
        if (!quantifiable(archive.kinds()[j])) continue;
        ids.push_back(j);
        requests[constraint_center_indices(archive, j)].push_back(static_cast<long>(j));
    }

    SurrogateSet set;
    set.has_objective_ = with_objective;
    set.constraint_ids_ = ids;
    set.constraint_slots_.resize(ids.size());
    const int d = archive.dimension();
    for (const auto& [idx, outputs] : requests) {
        if (static_cast<int>(idx.size()) < d + 1) throw RankError("too few centers for surrogate");
        Matrix values(static_cast<Eigen::Index>(idx.size()), static_cast<Eigen::Index>(outputs.size()));
        for (std::size_t r = 0; r < idx.size(); ++r) {
            const auto& outcome = archive[idx[r]].outcome;
            for (std::size_t c = 0; c < outputs.size(); ++c) {
                values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                    outputs[c] < 0 ? *outcome.objective : *outcome.constraints[static_cast<std::size_t>(outputs[c])].value;
            }
        }
        const std::size_t g = set.groups_.size();
        set.groups_.push_back(fit_rbf_group(gather_points(archive, idx), values));
        set.group_centers_.push_back(idx);
        for (std::size_t c = 0; c < outputs.size(); ++c) {
            if (outputs[c] < 0) {
                set.objective_slot_ = {g, c};
            } else {
                const auto s = static_cast<std::size_t>(
                    std::find(ids.begin(), ids.end(), static_cast<std::size_t>(outputs[c])) - ids.begin());
                set.constraint_slots_[s] = {g, c};
            }
        }
    }
    return set;
}

double SurrogateSet::evaluate(const Vector& xn, std::span<double> g) const {
    // Group outputs are few; a fixed scratch buffer avoids allocation in the
    // subsolver's inner loop.
    thread_local std::vector<double> scratch;
    double objective = 0.0;
    for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
        scratch.resize(groups_[gi].outputs());
        groups_[gi].evaluate(xn.data(), scratch.data());
        if (has_objective_ && objective_slot_.group == gi) objective = scratch[objective_slot_.column];
        for (std::size_t s = 0; s < constraint_slots_.size(); ++s) {
            if (constraint_slots_[s].group == gi) g[s] = scratch[constraint_slots_[s].column];
        }
    }
    return objective;
}

const std::vector<std::size_t>& SurrogateSet::objective_centers() const {
    if (!has_objective_) throw ContractError("surrogate set has no objective model");
    return group_centers_[objective_slot_.group];
}

const std::vector<std::size_t>& SurrogateSet::constraint_centers(std::size_t s) const {
    return group_centers_[constraint_slots_[s].group];
}

}  // namespace gsdo
