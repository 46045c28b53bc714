#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <csignal>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsdo/problem.hpp"

namespace gsdo {

namespace {

/// Runs `sh -c command` with `input` on stdin and returns its whole stdout.
std::string run_child(const std::string& command, const std::string& input) {
    int to_child[2], from_child[2];
    if (pipe(to_child) != 0) throw SimulationFailure("pipe failed");
    if (pipe(from_child) != 0) {
        close(to_child[0]);
        close(to_child[1]);
        throw SimulationFailure("pipe failed");
    }
    const pid_t pid = fork();
    if (pid < 0) throw SimulationFailure("fork failed");
    if (pid == 0) {
        dup2(to_child[0], STDIN_FILENO);
        dup2(from_child[1], STDOUT_FILENO);
        close(to_child[0]);
        close(to_child[1]);
        close(from_child[0]);
        close(from_child[1]);
        execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);

    const char* p = input.data();
    std::size_t left = input.size();
    while (left > 0) {
        const ssize_t n = write(to_child[1], p, left);
        if (n < 0 && errno == EINTR) continue;
        if (n <= 0) break;  // child closed stdin early; its answer decides
        p += n;
        left -= static_cast<std::size_t>(n);
    }
    close(to_child[1]);

    std::string output;
    char buf[4096];
    for (;;) {
        const ssize_t n = read(from_child[0], buf, sizeof buf);
        if (n < 0 && errno == EINTR) continue;
        if (n <= 0) break;
        output.append(buf, static_cast<std::size_t>(n));
    }
    close(from_child[0]);

    int status = 0;
    while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
    }
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
        throw SimulationFailure("simulator exited abnormally: " + command);
    return output;
}

struct ExternalSimulator {
    std::string command;
    std::size_t num_constraints = 0;
    std::mutex mutex;
    Vector last_x;
    std::vector<double> last_values;  // f, g_1..g_m
    bool last_failed = false;

    std::vector<double> values(const Vector& x) {
        std::lock_guard lock(mutex);
        if (last_x.size() != x.size() || last_x != x) {
            last_x = x;
            last_failed = false;
            try {
                last_values = query(x);
            } catch (const SimulationFailure&) {
                last_failed = true;
            }
        }
        if (last_failed) throw SimulationFailure("external simulator failed");
        return last_values;
    }

    std::vector<double> query(const Vector& x) const {
        std::ostringstream line;
        line << std::setprecision(17);
        for (Eigen::Index i = 0; i < x.size(); ++i) line << (i ? " " : "") << x[i];
        line << '\n';
        std::istringstream answer(run_child(command, line.str()));
        std::string token;
        std::vector<double> out;
        while (answer >> token) {
            if (token == "FAIL") throw SimulationFailure("simulator reported FAIL");
            std::size_t pos = 0;
            double v = 0.0;
            try {
                v = std::stod(token, &pos);
            } catch (const std::exception&) {
                throw SimulationFailure("unparseable simulator output: " + token);
            }
            if (pos != token.size()) throw SimulationFailure("unparseable simulator output: " + token);
            out.push_back(v);
            if (out.size() == num_constraints + 1) break;
        }
        if (out.size() != num_constraints + 1) throw SimulationFailure("simulator returned too few values");
        return out;
    }
};

}  // namespace

ProblemSpec make_external_problem(std::string name, std::string command, Vector lower, Vector upper,
                                  std::vector<ConstraintKind> kinds) {
    // A child that exits before reading its input must not kill us.
    std::signal(SIGPIPE, SIG_IGN);
    auto sim = std::make_shared<ExternalSimulator>();
    sim->command = std::move(command);
    sim->num_constraints = kinds.size();

    ProblemSpec p;
    p.name = std::move(name);
    p.lower = std::move(lower);
    p.upper = std::move(upper);
    p.objective = [sim](const Vector& x) { return sim->values(x)[0]; };
    for (std::size_t j = 0; j < kinds.size(); ++j)
        p.constraints.push_back({kinds[j], [sim, j](const Vector& x) { return sim->values(x)[j + 1]; }});
    p.validate();
    return p;
}

}  // namespace gsdo
