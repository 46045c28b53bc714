// Command-line front end: solve one problem, run benchmark sweeps, build profiles.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gsdo/bench.hpp"
#include "gsdo/config.hpp"
#include "gsdo/solver.hpp"
#include "gsdo/testbed.hpp"

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

gsdo::Vector parse_vector(const std::string& s) {
    const auto parts = split_list(s);
    gsdo::Vector v(static_cast<Eigen::Index>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) v[static_cast<Eigen::Index>(i)] = std::stod(parts[i]);
    return v;
}

gsdo::SolverConfig base_config(const std::string& path) {
    return path.empty() ? gsdo::SolverConfig{} : gsdo::load_config(path);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Three-stage surrogate optimizer for constrained black-box problems"};
    app.require_subcommand(1);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Run one trial on a registered or external problem");
    std::string problem_name, set_text = "1", config_path, log_path, archive_path;
    std::string external_cmd, lower_text, upper_text, kinds_text;
    std::size_t budget = 0;
    std::uint64_t seed = 1;
    solve_cmd->add_option("--problem", problem_name, "Registered problem name");
    solve_cmd->add_option("--set", set_text, "Constraint scenario 1-4");
    solve_cmd->add_option("--budget", budget, "Expensive evaluation budget (default by scenario)");
    solve_cmd->add_option("--seed", seed, "Random seed");
    solve_cmd->add_option("--config", config_path, "key=value config file");
    solve_cmd->add_option("--log", log_path, "Write the evaluation log CSV here");
    solve_cmd->add_option("--archive", archive_path, "Write the final archive CSV here");
    solve_cmd->add_option("--external", external_cmd, "Simulator command for an external problem");
    solve_cmd->add_option("--lower", lower_text, "External problem lower bounds, comma separated");
    solve_cmd->add_option("--upper", upper_text, "External problem upper bounds, comma separated");
    solve_cmd->add_option("--kinds", kinds_text, "External constraint kinds, e.g. QRSK,NUSH");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Run seeds 1..trials over a problem set");
    std::string bench_set = "1", bench_out = "results.csv", bench_problems, bench_config;
    std::size_t trials = 30, bench_budget = 0;
    unsigned threads = 0;
    bench_cmd->add_option("--set", bench_set, "Constraint scenario 1-4");
    bench_cmd->add_option("--trials", trials, "Trials per problem");
    bench_cmd->add_option("--out", bench_out, "Results CSV");
    bench_cmd->add_option("--problems", bench_problems, "Comma-separated subset (default: the whole set)");
    bench_cmd->add_option("--budget", bench_budget, "Fixed budget for every problem");
    bench_cmd->add_option("--config", bench_config, "key=value config file");
    bench_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

    // profiles
    auto* prof_cmd = app.add_subcommand("profiles", "Data or performance profiles from results CSVs");
    std::vector<std::string> inputs;
    double tau = 0.1;
    std::string kind = "data", prof_out = "profile.csv", svg_path;
    prof_cmd->add_option("--in", inputs, "Results CSV, optionally label=path; repeat per solver")->required();
    prof_cmd->add_option("--tau", tau, "Convergence tolerance in (0,1)");
    prof_cmd->add_option("--kind", kind, "data or perf")->check(CLI::IsMember({"data", "perf"}));
    prof_cmd->add_option("--out", prof_out, "Profile CSV");
    prof_cmd->add_option("--svg", svg_path, "Also draw the profile as SVG");

    // problems
    auto* list_cmd = app.add_subcommand("problems", "List registered problems");
    std::string list_set = "1";
    list_cmd->add_option("--set", list_set, "Constraint scenario 1-4");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve_cmd) {
            const auto scenario = gsdo::parse_scenario(set_text);
            gsdo::ProblemSpec problem;
            if (!external_cmd.empty()) {
                std::vector<gsdo::ConstraintKind> kinds;
                for (const auto& k : split_list(kinds_text)) kinds.push_back(gsdo::parse_constraint_kind(k));
                problem = gsdo::make_external_problem(problem_name.empty() ? "external" : problem_name, external_cmd,
                                                      parse_vector(lower_text), parse_vector(upper_text), kinds);
            } else {
                if (problem_name.empty()) throw std::invalid_argument("--problem or --external is required");
                problem = gsdo::get_problem(problem_name, scenario);
            }
            auto config = gsdo::with_scenario_budget(base_config(config_path), scenario);
            if (budget) config.budget = budget;
            if (solve_cmd->count("--seed")) config.seed = seed;

            gsdo::Rng rng(config.seed);
            gsdo::GsdoRun run(problem, config, rng);
            const auto& record = run.run();
            std::cout << record.summary() << '\n';
            const auto x = record.best_x();
            if (!x.empty()) {
                std::cout << "best_x=" << std::setprecision(10);
                for (std::size_t i = 0; i < x.size(); ++i) std::cout << (i ? "," : "") << x[i];
                std::cout << '\n';
            }
            if (!log_path.empty()) {
                auto out = open_out(log_path);
                record.write_csv(out);
            }
            if (!archive_path.empty()) {
                auto out = open_out(archive_path);
                run.archive().write_csv(out);
            }
            return 0;
        }

        if (*bench_cmd) {
            const auto scenario = gsdo::parse_scenario(bench_set);
            auto config = base_config(bench_config);
            if (bench_budget) config.budget = bench_budget;
            const auto names = bench_problems.empty() ? gsdo::list_problems(scenario) : split_list(bench_problems);
            const auto result = gsdo::run_experiment(names, scenario, config, trials, threads);
            auto out = open_out(bench_out);
            gsdo::write_results_csv(out, result);

            std::cout << std::left << std::setw(8) << "problem" << std::setw(6) << "Ns" << std::setw(16) << "median"
                      << "rel_error\n";
            for (const auto& a : gsdo::aggregate(result)) {
                std::cout << std::setw(8) << a.problem << std::setw(6) << a.successes << std::setw(16);
                if (a.median_best) std::cout << *a.median_best; else std::cout << "NA";
                if (a.rel_error) std::cout << *a.rel_error; else std::cout << "NA";
                std::cout << '\n';
            }
            return 0;
        }

        if (*prof_cmd) {
            std::vector<std::string> labels;
            std::vector<gsdo::ExperimentResult> results;
            for (const auto& spec : inputs) {
                const auto eq = spec.find('=');
                const std::string path = eq == std::string::npos ? spec : spec.substr(eq + 1);
                labels.push_back(eq == std::string::npos ? std::filesystem::path(path).stem().string()
                                                         : spec.substr(0, eq));
                std::ifstream in(path);
                if (!in) throw std::runtime_error("cannot read " + path);
                results.push_back(gsdo::read_results_csv(in));
            }
            const auto input = gsdo::profile_input(labels, results, tau);
            gsdo::ProfileTable table;
            if (kind == "perf") {
                table = gsdo::performance_profile(input, gsdo::default_alpha_grid());
            } else {
                double beta_max = 0.0;
                for (const auto& r : results)
                    for (const auto& t : r.trials)
                        beta_max = std::max(beta_max, static_cast<double>(t.trajectory.size()) / (t.dimension + 1));
                table = gsdo::data_profile(input, gsdo::default_beta_grid(beta_max));
            }
            auto out = open_out(prof_out);
            table.write_csv(out, kind == "perf" ? "alpha" : "beta");
            if (!svg_path.empty()) {
                auto svg = open_out(svg_path);
                std::ostringstream title;
                title << (kind == "perf" ? "Performance" : "Data") << " profile, tau=" << tau;
                table.write_svg(svg, title.str(), kind == "perf" ? "alpha" : "beta", kind == "perf");
            }
            return 0;
        }

        if (*list_cmd) {
            const auto scenario = gsdo::parse_scenario(list_set);
            std::cout << "name,d,m,f_star\n";
            for (const auto& name : gsdo::list_problems(scenario)) {
                const auto& e = gsdo::registry_entry(name);
                std::cout << name << ',' << e.spec.dimension() << ',' << e.spec.num_constraints() << ','
                          << std::setprecision(10) << e.f_star << '\n';
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
