// Acceptance suite: one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "pbgreen/verify.hpp"

namespace {

using pbgreen::verify::SuiteResult;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

SuiteResult run(const std::string& suite, std::uint64_t seed) {
    auto results = pbgreen::verify::run_suites(seed, suite);
    if (results.empty()) return {suite, false, "suite not found"};
    return results.front();
}

int exit_code_of(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    if (status < 0) return -1;
#ifdef WEXITSTATUS
    return WEXITSTATUS(status);
#else
    return status;
#endif
}

}  // namespace

int main() {
    const std::uint64_t seed = 42;
    int failures = 0;
    auto report = [&](int criterion, const char* label, bool ok, const std::string& detail) {
        std::printf("criterion %2d %-28s %s  %s\n", criterion, label,
                    ok ? "PASS" : "FAIL", detail.c_str());
        if (!ok) ++failures;
    };

    const auto total_start = Clock::now();

    {
        const auto t0 = Clock::now();
        SuiteResult r = run("branch_correctness", seed);
        const double dt = seconds_since(t0);
        const bool in_time = dt < 10.0;
        report(1, "branch_correctness", r.passed && in_time,
               r.detail + " (" + std::to_string(dt) + " s)");
    }
    {
        SuiteResult r = run("on_axis_closed_forms", seed);
        report(2, "on_axis_closed_forms", r.passed, r.detail);
    }
    {
        SuiteResult r = run("harmonicity", seed);
        report(3, "harmonicity", r.passed, r.detail);
    }
    {
        SuiteResult r = run("source_strength", seed);
        report(4, "source_strength", r.passed, r.detail);
    }
    {
        SuiteResult r = run("causality_pulse", seed);
        report(5, "causality_pulse", r.passed, r.detail);
    }
    {
        SuiteResult r = run("far_zone_convergence", seed);
        report(6, "far_zone_convergence", r.passed, r.detail);
    }
    {
        SuiteResult r = run("peak_coupling", seed);
        report(7, "peak_coupling", r.passed, r.detail);
    }
    {
        SuiteResult r = run("alignment_argmax", seed);
        report(8, "alignment_argmax", r.passed, r.detail);
    }
    {
        SuiteResult r = run("convexity", seed);
        report(9, "convexity", r.passed, r.detail);
    }
    {
        SuiteResult r = run("infrastructure", seed);
        // exit-code contract of the CLI verify harness
        const std::string cli = PBGREEN_CLI_PATH;
        const auto t0 = Clock::now();
        const int code_ok = exit_code_of(cli + " verify --seed 42 > /dev/null");
        const double verify_secs = seconds_since(t0);
        const int code_bad =
            exit_code_of(cli + " verify --suite no_such_suite > /dev/null 2>&1");
        bool ok = r.passed;
        std::string detail = r.detail;
        if (code_ok != 0) {
            ok = false;
            detail += "; cli verify exited " + std::to_string(code_ok);
        }
        if (code_bad == 0) {
            ok = false;
            detail += "; unknown suite did not fail";
        }
        if (verify_secs >= 300.0) {
            ok = false;
            detail += "; full verify took " + std::to_string(verify_secs) + " s";
        } else {
            detail += "; full verify " + std::to_string(verify_secs) + " s";
        }
        report(10, "infrastructure", ok, detail);
    }

    std::printf("acceptance: %s (%d failure%s, %.1f s total)\n",
                failures == 0 ? "PASS" : "FAIL", failures, failures == 1 ? "" : "s",
                seconds_since(total_start));
    return failures == 0 ? 0 : 1;
}
