#ifndef PBGREEN_ERRORS_HPP
#define PBGREEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pbgreen {

// Argument outside the mathematical domain of an operation
// (cone violation, lower-half-plane condition, etc.).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation point too close to a pole or branch circle.
struct singularity_error : std::runtime_error {
    explicit singularity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pbgreen

#endif
