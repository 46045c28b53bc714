#include "gsdo/classifier.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace gsdo {

namespace {

int label_of(PointClass c) {
    switch (c) {
    case PointClass::F:
    case PointClass::I: return 0;
    case PointClass::S: return 1;
    case PointClass::U: return 2;
    case PointClass::H: return 3;
    }
    return 3;
}

}  // namespace

void GcParams::validate() const {
    if (!(c1 > 0.0)) throw ContractError("GcParams: c1 must be positive");
    if (!(c4 < c3 && c3 < c2 && c2 < 0.0)) throw ContractError("GcParams: need c4 < c3 < c2 < 0");
    if (k_neighbors < 1 || k_neighbors % 2 == 0) throw ContractError("GcParams: k must be a positive odd integer");
}

bool classifier_active(const Archive& archive) {
    const bool good = archive.count(PointClass::F) > 2 || archive.count(PointClass::I) > 2;
    const bool bad = archive.count(PointClass::H) > 2 || archive.count(PointClass::U) > 2 ||
                     archive.count(PointClass::S) > 2;
    return good && bad;
}

ClassificationConstraint::ClassificationConstraint(const Archive& archive, GcParams params)
    : params_(params), active_(classifier_active(archive)), dimension_(archive.dimension()) {
    params_.validate();
    if (!active_) return;
    points_.reserve(archive.size() * static_cast<std::size_t>(dimension_));
    labels_.reserve(archive.size());
    for (const auto& p : archive.points()) {
        points_.insert(points_.end(), p.normalized.data(), p.normalized.data() + dimension_);
        labels_.push_back(label_of(p.cls));
    }
}

double ClassificationConstraint::operator()(const Vector& xn) const {
    if (!active_) return params_.c1;

    const std::size_t n = labels_.size();
    const auto k = std::min<std::size_t>(static_cast<std::size_t>(params_.k_neighbors), n);

    // Nearest k by squared distance; ties in distance keep archive order.
    thread_local std::vector<std::pair<double, std::size_t>> dist;
    dist.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double* p = points_.data() + i * static_cast<std::size_t>(dimension_);
        double r2 = 0.0;
        for (int l = 0; l < dimension_; ++l) {
            const double t = xn[l] - p[l];
            r2 += t * t;
        }
        dist[i] = {r2, i};
    }
    std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k), dist.end());

    std::array<int, 4> votes{};
    for (std::size_t i = 0; i < k; ++i) ++votes[static_cast<std::size_t>(labels_[dist[i].second])];
    const int top = *std::max_element(votes.begin(), votes.end());
    // Among the classes with the most votes, the one owning the nearest neighbor wins.
    int winner = labels_[dist[0].second];
    for (std::size_t i = 0; i < k; ++i) {
        const int label = labels_[dist[i].second];
        if (votes[static_cast<std::size_t>(label)] == top) {
            winner = label;
            break;
        }
    }

    switch (winner) {
    case 0: return params_.c1;
    case 1: return params_.c2;
    case 2: return params_.c3;
    default: return params_.c4;
    }
}

double classification_constraint(const Archive& archive, const Vector& xn, const GcParams& params) {
    return ClassificationConstraint(archive, params)(xn);
}

}  // namespace gsdo
