// errors.hpp — exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace rvclab {

struct InvalidParameter : std::invalid_argument {
    explicit InvalidParameter(const std::string& msg) : std::invalid_argument(msg) {}
};

struct InvalidTree : InvalidParameter {
    explicit InvalidTree(const std::string& msg) : InvalidParameter(msg) {}
};

// A family spec outside every supported closed-form domain.
struct UnsupportedSpec : std::runtime_error {
    explicit UnsupportedSpec(const std::string& msg) : std::runtime_error(msg) {}
};

// A closed-form coloring rule left some flare vertex without a matching case.
// Carries the uncovered (flare index, copy index) pair; never patched silently.
struct FormulaCoverageError : std::runtime_error {
    int flare_index;
    int copy_index;
    FormulaCoverageError(int flare, int copy, const std::string& msg)
        : std::runtime_error(msg), flare_index(flare), copy_index(copy) {}
};

// The per-flare color-set assignment ran out of distinct sets.
struct InfeasibleAssignment : std::runtime_error {
    explicit InfeasibleAssignment(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace rvclab
