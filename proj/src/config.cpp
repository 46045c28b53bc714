#include "gsdo/config.hpp"

#include <algorithm>
#include <fstream>
#include <ios>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>

namespace gsdo {

SolverConfig SolverConfig::resolved(int dimension) const {
    const auto d1 = static_cast<std::size_t>(dimension + 1);
    SolverConfig c = *this;
    if (c.budget == 0) c.budget = (c.budget_multiplier == 0 ? 15 : c.budget_multiplier) * d1;
    if (c.lhs_size == 0) c.lhs_size = 2 * d1;
    if (c.eta_max == 0) c.eta_max = d1;
    if (c.k_global < 0) c.k_global = static_cast<long>(d1);
    if (c.stage2_max_iterations == 0) c.stage2_max_iterations = 5 * c.eta_max;
    if (c.n_starts == 0) c.n_starts = std::min<std::size_t>(10, d1 + 1);
    return c;
}

void SolverConfig::validate(int dimension) const {
    const auto d1 = static_cast<std::size_t>(dimension + 1);
    gc.validate();
    if (lhs_size < d1) throw ContractError("config: lhs_size must be at least d+1");
    if (budget < lhs_size) throw ContractError("config: budget must be at least lhs_size");
    if (!(c_g >= 0.0 && c_g <= 1.0)) throw ContractError("config: c_g must lie in [0, 1]");
    if (!(delta_min > 0.0)) throw ContractError("config: delta_min must be positive");
    if (!(delta_r > 0.0 && delta_d > 0.0)) throw ContractError("config: delta_r and delta_d must be positive");
    if (n_starts == 0 || eta_max == 0) throw ContractError("config: n_starts and eta_max must be positive");
    if (!(de.F > 0.0) || !(de.CR >= 0.0 && de.CR <= 1.0)) throw ContractError("config: bad DE settings");
}

namespace {

using Setter = std::function<void(SolverConfig&, const std::string&)>;

std::size_t to_size(const std::string& v) {
    std::size_t pos = 0;
    const long long x = std::stoll(v, &pos);
    if (pos != v.size() || x < 0) throw std::invalid_argument("expected a non-negative integer: " + v);
    return static_cast<std::size_t>(x);
}

// k_global may be negative (unset).
long to_long(const std::string& v) {
    std::size_t pos = 0;
    const long x = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("expected an integer: " + v);
    return x;
}

double to_double(const std::string& v) {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("expected a number: " + v);
    return x;
}

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table{
        {"budget", [](SolverConfig& c, const std::string& v) { c.budget = to_size(v); }},
        {"T_max", [](SolverConfig& c, const std::string& v) { c.budget = to_size(v); }},
        {"budget_multiplier", [](SolverConfig& c, const std::string& v) { c.budget_multiplier = to_size(v); }},
        {"lhs_size", [](SolverConfig& c, const std::string& v) { c.lhs_size = to_size(v); }},
        {"T_LH", [](SolverConfig& c, const std::string& v) { c.lhs_size = to_size(v); }},
        {"c1", [](SolverConfig& c, const std::string& v) { c.gc.c1 = to_double(v); }},
        {"c2", [](SolverConfig& c, const std::string& v) { c.gc.c2 = to_double(v); }},
        {"c3", [](SolverConfig& c, const std::string& v) { c.gc.c3 = to_double(v); }},
        {"c4", [](SolverConfig& c, const std::string& v) { c.gc.c4 = to_double(v); }},
        {"k_neighbors", [](SolverConfig& c, const std::string& v) { c.gc.k_neighbors = static_cast<int>(to_size(v)); }},
        {"delta_r", [](SolverConfig& c, const std::string& v) { c.delta_r = to_double(v); }},
        {"delta_d", [](SolverConfig& c, const std::string& v) { c.delta_d = to_double(v); }},
        {"eta_max", [](SolverConfig& c, const std::string& v) { c.eta_max = to_size(v); }},
        {"k_global", [](SolverConfig& c, const std::string& v) { c.k_global = to_long(v); }},
        {"c_g", [](SolverConfig& c, const std::string& v) { c.c_g = to_double(v); }},
        {"delta_min", [](SolverConfig& c, const std::string& v) { c.delta_min = to_double(v); }},
        {"k_max", [](SolverConfig& c, const std::string& v) { c.stage2_max_iterations = to_size(v); }},
        {"n_starts", [](SolverConfig& c, const std::string& v) { c.n_starts = to_size(v); }},
        {"de_population", [](SolverConfig& c, const std::string& v) { c.de.population = to_size(v); }},
        {"de_f", [](SolverConfig& c, const std::string& v) { c.de.F = to_double(v); }},
        {"de_cr", [](SolverConfig& c, const std::string& v) { c.de.CR = to_double(v); }},
        {"de_budget_per_variable", [](SolverConfig& c, const std::string& v) { c.de.budget_per_variable = to_size(v); }},
        {"seed", [](SolverConfig& c, const std::string& v) { c.seed = static_cast<std::uint64_t>(std::stoull(v)); }},
    };
    return table;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

SolverConfig parse_config(std::istream& in, SolverConfig base) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        const auto it = setters().find(key);
        if (it == setters().end()) throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key " + key);
        it->second(base, value);
    }
    return base;
}

SolverConfig load_config(const std::string& path, SolverConfig base) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    return parse_config(in, base);
}

void write_config(std::ostream& out, const SolverConfig& c) {
    const auto precision = out.precision(17);
    out << "budget=" << c.budget << '\n'
        << "budget_multiplier=" << c.budget_multiplier << '\n'
        << "lhs_size=" << c.lhs_size << '\n'
        << "c1=" << c.gc.c1 << '\n'
        << "c2=" << c.gc.c2 << '\n'
        << "c3=" << c.gc.c3 << '\n'
        << "c4=" << c.gc.c4 << '\n'
        << "k_neighbors=" << c.gc.k_neighbors << '\n'
        << "delta_r=" << c.delta_r << '\n'
        << "delta_d=" << c.delta_d << '\n'
        << "eta_max=" << c.eta_max << '\n'
        << "k_global=" << c.k_global << '\n'
        << "c_g=" << c.c_g << '\n'
        << "delta_min=" << c.delta_min << '\n'
        << "k_max=" << c.stage2_max_iterations << '\n'
        << "n_starts=" << c.n_starts << '\n'
        << "de_population=" << c.de.population << '\n'
        << "de_f=" << c.de.F << '\n'
        << "de_cr=" << c.de.CR << '\n'
        << "de_budget_per_variable=" << c.de.budget_per_variable << '\n'
        << "seed=" << c.seed << '\n';
    out.precision(precision);
}

SolverConfig with_scenario_budget(SolverConfig config, Scenario scenario) {
    if (config.budget == 0 && config.budget_multiplier == 0)
        config.budget_multiplier = scenario == Scenario::Set1 ? 15 : 30;
    return config;
}

}  // namespace gsdo
