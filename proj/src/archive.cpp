#include "gsdo/archive.hpp"

#include <ostream>

namespace gsdo {

char class_letter(PointClass c) {
    switch (c) {
    case PointClass::F: return 'F';
    case PointClass::I: return 'I';
    case PointClass::S: return 'S';
    case PointClass::U: return 'U';
    case PointClass::H: return 'H';
    }
    return '?';
}

namespace {

struct ViolationSummary {
    bool nonquantifiable_unrelaxable = false;
    std::size_t qusk = 0;
    std::size_t first_qusk = 0;
    bool nrsk = false;
    bool qrsk = false;
};

ViolationSummary summarize(const EvaluationOutcome& outcome, const std::vector<ConstraintKind>& kinds) {
    ViolationSummary s;
    for (std::size_t j = 0; j < kinds.size(); ++j) {
        const auto& c = outcome.constraints[j];
        if (c.status == ConstraintStatus::Unknown)
            throw ContractError("constraint status unknown for a simulation that did not fail");
        if (!c.violated()) continue;
        switch (kinds[j]) {
        case ConstraintKind::NUSH:
        case ConstraintKind::NUSK: s.nonquantifiable_unrelaxable = true; break;
        case ConstraintKind::QUSK:
            if (s.qusk == 0) s.first_qusk = j;
            ++s.qusk;
            break;
        case ConstraintKind::NRSK: s.nrsk = true; break;
        case ConstraintKind::QRSK: s.qrsk = true; break;
        }
    }
    return s;
}

}  // namespace

PointClass classify(const EvaluationOutcome& outcome, const std::vector<ConstraintKind>& kinds) {
    if (outcome.hidden_failure) {
        if (outcome.objective) throw ContractError("hidden failure cannot carry an objective value");
        return PointClass::H;
    }
    if (outcome.constraints.size() != kinds.size())
        throw ContractError("outcome has the wrong number of constraints");

    const auto s = summarize(outcome, kinds);
    PointClass cls = PointClass::F;
    if (s.nonquantifiable_unrelaxable || s.qusk >= 2)
        cls = PointClass::H;
    else if (s.qusk == 1)
        cls = PointClass::U;
    else if (s.nrsk)
        cls = PointClass::S;
    else if (s.qrsk)
        cls = PointClass::I;

    const bool needs_objective = cls == PointClass::F || cls == PointClass::I || cls == PointClass::S;
    if (needs_objective && !outcome.objective) throw ContractError("relaxable outcome is missing its objective");
    return cls;
}

Archive::Archive(Vector lower, Vector upper, std::vector<ConstraintKind> kinds)
    : lower_(std::move(lower)), upper_(std::move(upper)), kinds_(std::move(kinds)) {
    if (lower_.size() == 0 || lower_.size() != upper_.size()) throw ContractError("archive: bad bounds");
    width_ = upper_ - lower_;
    if ((width_.array() <= 0.0).any()) throw ContractError("archive: empty bound interval");
}

Archive::Archive(const ProblemSpec& problem) : Archive(problem.lower, problem.upper, problem.kinds()) {}

Vector Archive::normalize(const Vector& x) const { return (x - lower_).cwiseQuotient(width_); }

Vector Archive::denormalize(const Vector& xn) const { return lower_ + xn.cwiseProduct(width_); }

bool Archive::contains_normalized(const Vector& xn) const {
    for (const auto& p : points_) {
        if ((p.normalized - xn).norm() <= kDuplicateTolerance) return true;
    }
    return false;
}

bool Archive::contains(const Vector& x) const { return contains_normalized(normalize(x)); }

PointClass Archive::filter_point(const Vector& x, EvaluationOutcome outcome) {
    if (x.size() != lower_.size()) throw ContractError("archive: point has the wrong dimension");
    Vector xn = normalize(x);
    if (contains_normalized(xn)) throw ContractError("archive: duplicate point");

    const PointClass cls = classify(outcome, kinds_);
    EvaluatedPoint p{x, std::move(xn), std::move(outcome), cls, std::nullopt};
    if (cls == PointClass::U) p.violated_qusk = summarize(p.outcome, kinds_).first_qusk;

    by_class_[static_cast<int>(cls)].push_back(points_.size());
    points_.push_back(std::move(p));
    check_partition();
    return cls;
}

void Archive::check_partition() const {
    std::size_t total = 0;
    for (const auto& v : by_class_) total += v.size();
    if (total != points_.size()) throw std::logic_error("archive partition out of sync");
}

std::optional<BestPoint> Archive::best_feasible() const {
    std::optional<BestPoint> best;
    for (std::size_t i : indices(PointClass::F)) {
        const double f = *points_[i].outcome.objective;
        // Strict comparison keeps the earliest point on ties.
        if (!best || f < best->f) best = BestPoint{points_[i].x, f, i};
    }
    return best;
}

std::optional<std::size_t> Archive::latest_feasible() const {
    const auto& f = indices(PointClass::F);
    if (f.empty()) return std::nullopt;
    return f.back();
}

void Archive::write_csv(std::ostream& out) const {
    const auto d = lower_.size();
    for (Eigen::Index i = 0; i < d; ++i) out << "x" << i + 1 << ',';
    out << "class,objective";
    for (std::size_t j = 0; j < kinds_.size(); ++j) out << ",g" << j + 1;
    out << '\n';

    const auto old_precision = out.precision(17);
    for (const auto& p : points_) {
        for (Eigen::Index i = 0; i < d; ++i) out << p.x[i] << ',';
        out << class_letter(p.cls) << ',';
        if (p.outcome.objective)
            out << *p.outcome.objective;
        else
            out << "NA";
        for (const auto& c : p.outcome.constraints) {
            out << ',';
            if (c.value)
                out << *c.value;
            else if (c.status == ConstraintStatus::Unknown)
                out << "NA";
            else
                out << (c.violated() ? "fail" : "pass");
        }
        out << '\n';
    }
    out.precision(old_precision);
}

}  // namespace gsdo
