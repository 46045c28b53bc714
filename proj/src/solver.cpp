#include "gsdo/solver.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "gsdo/classifier.hpp"
#include "gsdo/rbf.hpp"
#include "gsdo/sampling.hpp"

namespace gsdo {

std::string_view to_string(Termination t) {
    switch (t) {
        case Termination::BudgetExhausted: return "BudgetExhausted";
        case Termination::DeltaBelowMin: return "DeltaBelowMin";
        case Termination::NoFeasibleFound: return "NoFeasibleFound";
    }
    return "?";
}

std::string_view to_string(PointSource s) {
    switch (s) {
        case PointSource::LatinHypercube: return "LHS";
        case PointSource::P2: return "P2";
        case PointSource::P3: return "P3";
        case PointSource::P4: return "P4";
        case PointSource::P5: return "P5";
        case PointSource::RandomBall: return "ball";
    }
    return "?";
}

std::optional<double> TrialRecord::best_f() const {
    if (log.empty()) return std::nullopt;
    return log.back().best_feasible;
}

std::vector<double> TrialRecord::best_x() const {
    std::optional<double> best;
    std::vector<double> x;
    for (const auto& e : log) {
        if (e.cls == PointClass::F && (!best || *e.objective < *best)) {
            best = e.objective;
            x = e.x;
        }
    }
    return x;
}

std::optional<std::size_t> TrialRecord::first_feasible() const {
    for (const auto& e : log)
        if (e.cls == PointClass::F) return e.index;
    return std::nullopt;
}

void TrialRecord::write_csv(std::ostream& out) const {
    const std::size_t d = log.empty() ? 0 : log.front().x.size();
    out << "index,stage,source";
    for (std::size_t k = 0; k < d; ++k) out << ",x" << k + 1;
    out << ",class,objective,best_feasible\n";
    out << std::setprecision(17);
    for (const auto& e : log) {
        out << e.index << ',' << e.stage << ',' << to_string(e.source);
        for (double v : e.x) out << ',' << v;
        out << ',' << class_letter(e.cls) << ',';
        if (e.objective) out << *e.objective; else out << "NA";
        out << ',';
        if (e.best_feasible) out << *e.best_feasible; else out << "NA";
        out << '\n';
    }
}

std::string TrialRecord::summary() const {
    std::ostringstream s;
    s << std::setprecision(10) << problem << " seed=" << seed << " best_f=";
    if (const auto b = best_f()) s << *b; else s << "NA";
    s << " feasible=" << (best_f() ? "yes" : "no") << " evaluations=" << evaluations() << '/' << budget
      << " termination=" << to_string(termination);
    return s.str();
}

GsdoRun::GsdoRun(const ProblemSpec& problem, const SolverConfig& config, Rng& rng, SubproblemSolvers solvers)
    : problem_(problem),
      config_(config.resolved(problem.dimension())),
      rng_(rng),
      solvers_(std::move(solvers)),
      sim_(problem_, config_.budget),
      archive_(problem_) {
    config_.validate(problem.dimension());
    record_.problem = problem.name;
    record_.seed = config_.seed;
    record_.budget = config_.budget;
}

PointClass GsdoRun::evaluate_and_file(const Vector& x, int stage, PointSource source) {
    auto outcome = sim_.evaluate(x);
    const std::optional<double> f = outcome.objective;
    const PointClass cls = archive_.filter_point(x, std::move(outcome));
    if (cls == PointClass::F && (!best_ || *f < *best_)) best_ = f;

    LogEntry e;
    e.index = sim_.count();
    e.stage = stage;
    e.source = source;
    e.x.assign(x.data(), x.data() + x.size());
    e.cls = cls;
    e.objective = f;
    e.best_feasible = best_;
    record_.log.push_back(std::move(e));
    return cls;
}

std::optional<SurrogateSet> GsdoRun::fit_surrogates(bool with_objective) {
    try {
        auto set = SurrogateSet::fit(archive_, with_objective);
        const std::size_t n = sim_.count();
        if (with_objective) record_.fits.push_back({n, -1, set.objective_centers()});
        for (std::size_t s = 0; s < set.num_constraints(); ++s)
            record_.fits.push_back({n, static_cast<long>(set.constraint_id(s)), set.constraint_centers(s)});
        return set;
    } catch (const RankError&) {
        return std::nullopt;
    } catch (const FitError&) {
        return std::nullopt;
    }
}

std::optional<Vector> GsdoRun::fresh_point(const Vector& xn) const {
    Vector x = archive_.denormalize(xn).cwiseMax(problem_.lower).cwiseMin(problem_.upper);
    if (archive_.contains(x)) return std::nullopt;
    return x;
}

Vector GsdoRun::fallback_point() {
    return random_ball_point(archive_, problem_.lower, problem_.upper, config_.delta_r, config_.delta_d, rng_);
}

void GsdoRun::evaluate_lhs(std::size_t n, int stage, bool stop_on_feasible) {
    for (const auto& x : latin_hypercube(problem_.lower, problem_.upper, n, rng_)) {
        if (sim_.exhausted()) return;
        if (archive_.contains(x)) continue;
        if (evaluate_and_file(x, stage, PointSource::LatinHypercube) == PointClass::F && stop_on_feasible) return;
    }
}

Stage1Status GsdoRun::stage1_find_feasible() {
    const auto d1 = static_cast<std::size_t>(problem_.dimension() + 1);
    auto found = [this] { return archive_.count(PointClass::F) > 0; };

    while (!rank_ready(archive_) && !sim_.exhausted()) {
        evaluate_lhs(std::min(config_.lhs_size, sim_.remaining()), 1, false);
        if (found()) break;
    }

    while (!found() && !sim_.exhausted()) {
        std::optional<SubproblemSolution> p2;
        if (auto set = fit_surrogates(false)) {
            const ClassificationConstraint gc(archive_, config_.gc);
            const auto model = SurrogateModel::borrow(*set, gc, problem_.dimension());
            p2 = solvers_.p2(model, archive_, rng_, config_.de);
        }
        std::optional<Vector> x;
        if (p2) x = fresh_point(p2->x);
        if (x)
            evaluate_and_file(*x, 1, PointSource::P2);
        else
            evaluate_lhs(std::min(d1, sim_.remaining()), 1, true);
    }

    record_.stage1_end = sim_.count();
    return found() ? Stage1Status::FoundFeasible : Stage1Status::Failed;
}

void GsdoRun::stage2_spread() {
    if (archive_.count(PointClass::F) == 0) throw ContractError("stage2_spread: no feasible point");
    std::size_t iterations = 0;
    while (archive_.count(PointClass::F) < config_.eta_max && !sim_.exhausted() &&
           iterations < config_.stage2_max_iterations) {
        ++iterations;
        std::optional<Vector> x;
        if (auto set = fit_surrogates(false)) {
            const ClassificationConstraint gc(archive_, config_.gc);
            const auto model = SurrogateModel::borrow(*set, gc, problem_.dimension());
            const auto p3 = solvers_.p3(model, archive_, rng_, config_.de);
            if (p3.feasible && p3.delta > 0.0) x = fresh_point(p3.x);
        }
        if (x)
            evaluate_and_file(*x, 2, PointSource::P3);
        else
            evaluate_and_file(fallback_point(), 2, PointSource::RandomBall);
    }
    record_.stage2_end = sim_.count();
}

void GsdoRun::stage3_global() {
    if (archive_.count(PointClass::F) == 0) throw ContractError("stage3_global: no feasible point");
    const double width = problem_.min_width();
    const double delta_reset = std::min(width, 1.0) / width;  // min{delta_lu, 1} in normalized units

    long k = 0;
    record_.termination = Termination::BudgetExhausted;
    while (!sim_.exhausted()) {
        ++k;
        auto set = fit_surrogates(true);
        if (!set) {
            evaluate_and_file(fallback_point(), 3, PointSource::RandomBall);
            continue;
        }
        const ClassificationConstraint gc(archive_, config_.gc);
        const auto model = SurrogateModel::borrow(*set, gc, problem_.dimension());

        std::optional<Vector> exploit;
        for (const auto& s : solvers_.p4(model, rng_, config_.n_starts, config_.de)) {
            if ((exploit = fresh_point(s.x))) break;
        }
        const double t = uniform01(rng_);
        if (exploit && k > config_.k_global && t < config_.c_g) {
            evaluate_and_file(*exploit, 3, PointSource::P4);
            continue;
        }

        double delta = solvers_.p3(model, archive_, rng_, config_.de).delta;
        if (delta == 0.0) delta = delta_reset;
        if (delta < config_.delta_min) {
            record_.termination = Termination::DeltaBelowMin;
            return;
        }
        std::optional<Vector> x;
        if (const auto p5 = solvers_.p5(model, archive_, delta, rng_, config_.de)) x = fresh_point(p5->x);
        if (x)
            evaluate_and_file(*x, 3, PointSource::P5);
        else
            evaluate_and_file(fallback_point(), 3, PointSource::RandomBall);
    }
}

const TrialRecord& GsdoRun::run() {
    if (stage1_find_feasible() == Stage1Status::Failed) {
        record_.termination = Termination::NoFeasibleFound;
        record_.stage2_end = record_.stage1_end;
        return record_;
    }
    stage2_spread();
    stage3_global();
    return record_;
}

TrialRecord solve(const ProblemSpec& problem, const SolverConfig& config, Rng& rng) {
    GsdoRun run(problem, config, rng);
    return run.run();
}

TrialRecord solve(const ProblemSpec& problem, const SolverConfig& config) {
    Rng rng(config.seed);
    return solve(problem, config, rng);
}

}  // namespace gsdo
