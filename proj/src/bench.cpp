#include "gsdo/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gsdo/testbed.hpp"

namespace gsdo {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double relative_error(double f_s, double f_star) {
    if (f_star == 0.0) throw std::invalid_argument("relative_error: f_star must be nonzero");
    return std::abs((f_s - f_star) / f_star);
}

double solved_threshold(const std::vector<std::optional<double>>& trajectory, double f_star,
                        std::optional<double> f0, double tau) {
    if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("solved_threshold: tau must lie in (0, 1)");
    if (!f0) return kInf;
    const double target = (1.0 - tau) * (*f0 - f_star);
    for (std::size_t i = 0; i < trajectory.size(); ++i) {
        if (trajectory[i] && *f0 - *trajectory[i] >= target) return static_cast<double>(i + 1);
    }
    return kInf;
}

std::optional<double> TrialSummary::rel_error() const {
    if (!best_f || !f_star || *f_star == 0.0) return std::nullopt;
    return relative_error(*best_f, *f_star);
}

std::optional<double> TrialSummary::f0() const {
    if (!first_feasible || *first_feasible == 0 || *first_feasible > trajectory.size()) return std::nullopt;
    return trajectory[*first_feasible - 1];
}

TrialSummary summarize(const TrialRecord& record, const ProblemSpec& problem, Scenario scenario) {
    TrialSummary s;
    s.problem = record.problem;
    s.scenario = scenario_number(scenario);
    s.seed = record.seed;
    s.dimension = problem.dimension();
    s.f_star = problem.known_optimum;
    s.best_f = record.best_f();
    s.evals_used = record.evaluations();
    s.termination = std::string(to_string(record.termination));
    s.first_feasible = record.first_feasible();
    s.trajectory.reserve(record.log.size());
    for (const auto& e : record.log) s.trajectory.push_back(e.best_feasible);
    return s;
}

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of an empty set");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<ProblemAggregate> aggregate(const ExperimentResult& result) {
    std::vector<ProblemAggregate> out;
    std::map<std::pair<std::string, int>, std::size_t> slot;
    std::vector<std::vector<double>> bests;
    std::vector<std::optional<double>> f_stars;
    for (const auto& t : result.trials) {
        const auto key = std::make_pair(t.problem, t.scenario);
        auto it = slot.find(key);
        if (it == slot.end()) {
            it = slot.emplace(key, out.size()).first;
            out.push_back({t.problem, t.scenario, 0, 0, std::nullopt, std::nullopt});
            bests.emplace_back();
            f_stars.push_back(t.f_star);
        }
        auto& agg = out[it->second];
        ++agg.trials;
        if (t.best_f) {
            ++agg.successes;
            bests[it->second].push_back(*t.best_f);
        }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto& f_star = f_stars[i];
        if (bests[i].empty()) continue;
        out[i].median_best = median(bests[i]);
        if (f_star && *f_star != 0.0) out[i].rel_error = relative_error(*out[i].median_best, *f_star);
    }
    return out;
}

ExperimentResult run_experiment(const std::vector<std::string>& problems, Scenario scenario,
                                const SolverConfig& config, std::size_t trials, unsigned threads) {
    if (trials == 0) throw std::invalid_argument("run_experiment: trials must be at least 1");
    std::vector<ProblemSpec> specs;
    for (const auto& name : problems) specs.push_back(get_problem(name, scenario));

    const std::size_t jobs = specs.size() * trials;
    std::vector<TrialSummary> out(jobs);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t j; (j = next.fetch_add(1)) < jobs;) {
            try {
                const auto& spec = specs[j / trials];
                SolverConfig c = with_scenario_budget(config, scenario);
                c.seed = j % trials + 1;
                out[j] = summarize(solve(spec, c), spec, scenario);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return ExperimentResult{std::move(out)};
}

namespace {

void put(std::ostream& out, const std::optional<double>& v) {
    if (v) out << *v; else out << "NA";
}

std::optional<double> get_double(const std::string& s) {
    if (s == "NA" || s.empty()) return std::nullopt;
    if (s == "inf") return kInf;
    return std::stod(s);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

}  // namespace

void write_results_csv(std::ostream& out, const ExperimentResult& result) {
    out << "problem,set,seed,Ns_flag,best_f,evals_used,termination,rel_error,d,f_star,first_feasible,trajectory\n";
    out << std::setprecision(17);
    for (const auto& t : result.trials) {
        out << t.problem << ',' << t.scenario << ',' << t.seed << ',' << (t.feasible() ? 1 : 0) << ',';
        put(out, t.best_f);
        out << ',' << t.evals_used << ',' << t.termination << ',';
        put(out, t.rel_error());
        out << ',' << t.dimension << ',';
        put(out, t.f_star);
        out << ',';
        if (t.first_feasible) out << *t.first_feasible; else out << "NA";
        out << ',';
        for (std::size_t i = 0; i < t.trajectory.size(); ++i) {
            if (i) out << ';';
            put(out, t.trajectory[i]);
        }
        out << '\n';
    }
}

ExperimentResult read_results_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("results csv: missing header");
    const auto header = split(line, ',');
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
    for (const char* need : {"problem", "set", "seed", "best_f", "evals_used", "termination", "d", "f_star",
                             "first_feasible", "trajectory"}) {
        if (!col.count(need)) throw std::invalid_argument(std::string("results csv: missing column ") + need);
    }

    ExperimentResult result;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != header.size())
            throw std::invalid_argument("results csv line " + std::to_string(lineno) + ": wrong field count");
        TrialSummary t;
        t.problem = f[col["problem"]];
        t.scenario = std::stoi(f[col["set"]]);
        t.seed = std::stoull(f[col["seed"]]);
        t.best_f = get_double(f[col["best_f"]]);
        t.evals_used = std::stoul(f[col["evals_used"]]);
        t.termination = f[col["termination"]];
        t.dimension = std::stoi(f[col["d"]]);
        t.f_star = get_double(f[col["f_star"]]);
        if (const auto& ff = f[col["first_feasible"]]; ff != "NA") t.first_feasible = std::stoul(ff);
        if (const auto& tr = f[col["trajectory"]]; !tr.empty())
            for (const auto& v : split(tr, ';')) t.trajectory.push_back(get_double(v));
        result.trials.push_back(std::move(t));
    }
    return result;
}

ProfileTable performance_profile(const ProfileInput& input, const std::vector<double>& alpha_grid) {
    const std::size_t ns = input.solvers.size(), np = input.problems.size();
    if (ns == 0 || np == 0) throw std::invalid_argument("performance_profile: need a solver and a problem");
    ProfileTable t{alpha_grid, input.solvers, std::vector<std::vector<double>>(ns)};
    std::vector<std::vector<double>> ratio(ns, std::vector<double>(np, kInf));
    for (std::size_t p = 0; p < np; ++p) {
        double best = kInf;
        for (std::size_t s = 0; s < ns; ++s) best = std::min(best, input.w[s][p]);
        if (!std::isfinite(best)) continue;
        for (std::size_t s = 0; s < ns; ++s)
            if (std::isfinite(input.w[s][p])) ratio[s][p] = input.w[s][p] / best;
    }
    for (std::size_t s = 0; s < ns; ++s) {
        for (double a : alpha_grid) {
            const auto hits = std::count_if(ratio[s].begin(), ratio[s].end(), [a](double r) { return r <= a; });
            t.values[s].push_back(static_cast<double>(hits) / static_cast<double>(np));
        }
    }
    return t;
}

ProfileTable data_profile(const ProfileInput& input, const std::vector<double>& beta_grid) {
    const std::size_t ns = input.solvers.size(), np = input.problems.size();
    if (ns == 0 || np == 0) throw std::invalid_argument("data_profile: need a solver and a problem");
    ProfileTable t{beta_grid, input.solvers, std::vector<std::vector<double>>(ns)};
    for (std::size_t s = 0; s < ns; ++s) {
        for (double b : beta_grid) {
            std::size_t hits = 0;
            for (std::size_t p = 0; p < np; ++p)
                if (input.w[s][p] / (input.dimensions[p] + 1) <= b) ++hits;
            t.values[s].push_back(static_cast<double>(hits) / static_cast<double>(np));
        }
    }
    return t;
}

ProfileInput profile_input(const std::vector<std::string>& labels, const std::vector<ExperimentResult>& results,
                           double tau) {
    if (labels.size() != results.size()) throw std::invalid_argument("profile_input: one label per result set");
    ProfileInput in;
    in.solvers = labels;

    // Problems in first-seen order across all result sets.
    std::map<std::string, std::size_t> index;
    for (const auto& r : results) {
        for (const auto& t : r.trials) {
            const std::string key = t.problem + "/Set" + std::to_string(t.scenario);
            if (index.emplace(key, in.problems.size()).second) {
                in.problems.push_back(key);
                in.dimensions.push_back(t.dimension);
            }
        }
    }

    for (const auto& r : results) {
        std::vector<std::vector<const TrialSummary*>> by_problem(in.problems.size());
        for (const auto& t : r.trials)
            by_problem[index.at(t.problem + "/Set" + std::to_string(t.scenario))].push_back(&t);
        std::vector<double> w(in.problems.size(), kInf);
        for (std::size_t p = 0; p < by_problem.size(); ++p) {
            auto& ts = by_problem[p];
            if (ts.empty()) continue;
            std::sort(ts.begin(), ts.end(), [](const TrialSummary* a, const TrialSummary* b) {
                const double fa = a->best_f.value_or(kInf), fb = b->best_f.value_or(kInf);
                return fa != fb ? fa < fb : a->seed < b->seed;
            });
            const TrialSummary& mid = *ts[(ts.size() - 1) / 2];
            if (mid.f_star) w[p] = solved_threshold(mid.trajectory, *mid.f_star, mid.f0(), tau);
        }
        in.w.push_back(std::move(w));
    }
    return in;
}

std::vector<double> default_alpha_grid() {
    std::vector<double> g;
    for (int i = 0; i <= 64; ++i) g.push_back(std::pow(32.0, i / 64.0));
    return g;
}

std::vector<double> default_beta_grid(double beta_max, std::size_t steps) {
    std::vector<double> g;
    for (std::size_t i = 0; i <= steps; ++i) g.push_back(beta_max * static_cast<double>(i) / static_cast<double>(steps));
    return g;
}

void ProfileTable::write_csv(std::ostream& out, const std::string& grid_name) const {
    out << grid_name;
    for (const auto& l : labels) out << ',' << l;
    out << '\n' << std::setprecision(10);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out << grid[i];
        for (const auto& v : values) out << ',' << v[i];
        out << '\n';
    }
}

void ProfileTable::write_svg(std::ostream& out, const std::string& title, const std::string& x_label,
                             bool log_x) const {
    constexpr double W = 640, H = 420, left = 60, right = 150, top = 40, bottom = 50;
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};
    const double pw = W - left - right, ph = H - top - bottom;
    auto tx = [&](double g) {
        if (grid.size() < 2) return left;
        const double lo = log_x ? std::log(grid.front()) : grid.front();
        const double hi = log_x ? std::log(grid.back()) : grid.back();
        const double v = log_x ? std::log(g) : g;
        return hi > lo ? left + pw * (v - lo) / (hi - lo) : left;
    };
    auto ty = [&](double v) { return top + ph * (1.0 - v); };

    out << std::setprecision(6);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << left << "\" y=\"24\" font-size=\"15\">" << title << "</text>\n";
    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double v = k / 4.0;
        out << "<text x=\"" << left - 8 << "\" y=\"" << ty(v) + 4 << "\" font-size=\"11\" text-anchor=\"end\">" << v
            << "</text>\n";
    }
    if (!grid.empty()) {
        out << "<text x=\"" << left << "\" y=\"" << H - bottom + 16 << "\" font-size=\"11\">" << grid.front()
            << "</text>\n";
        out << "<text x=\"" << left + pw << "\" y=\"" << H - bottom + 16
            << "\" font-size=\"11\" text-anchor=\"end\">" << grid.back() << "</text>\n";
    }
    out << "<text x=\"" << left + pw / 2 << "\" y=\"" << H - 12 << "\" font-size=\"12\" text-anchor=\"middle\">"
        << x_label << "</text>\n";
    for (std::size_t s = 0; s < values.size(); ++s) {
        const char* c = colors[s % 6];
        out << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (i > 0) out << tx(grid[i]) << ',' << ty(values[s][i - 1]) << ' ';
            out << tx(grid[i]) << ',' << ty(values[s][i]) << ' ';
        }
        out << "\"/>\n";
        const double ly = top + 16 + 18 * static_cast<double>(s);
        out << "<line x1=\"" << W - right + 12 << "\" y1=\"" << ly << "\" x2=\"" << W - right + 36 << "\" y2=\"" << ly
            << "\" stroke=\"" << c << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << W - right + 42 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">" << labels[s]
            << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace gsdo
