#ifndef PBGREEN_VERIFY_HPP
#define PBGREEN_VERIFY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace pbgreen::verify {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;  // one-line summary (worst-case numbers, counts)
};

using SuiteFn = SuiteResult (*)(std::uint64_t seed);

struct Suite {
    std::string name;
    SuiteFn fn;
};

const std::vector<Suite>& all_suites();

// Runs all suites (or the one matching `filter` when nonempty).
std::vector<SuiteResult> run_suites(std::uint64_t seed, const std::string& filter = "");

// Icosphere directions, `subdivisions` levels of a unit icosahedron
// (0 -> 12, 1 -> 42, 2 -> 162, 3 -> 642 vertices).  Used by the
// orientation-scan oracle; deterministic vertex order.
std::vector<std::array<double, 3>> icosphere_directions(int subdivisions);

}  // namespace pbgreen::verify

#endif
