#pragma once

#include <stdexcept>
#include <string>

namespace toridiv {

// Bad command line / malformed input files. CLI exit code 2.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// A precondition of an operation does not hold for the given data. CLI exit code 1.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A structural claim the implementation relies on failed at runtime
// (e.g. a Q-Cartierizing refinement extracted a ray, or a generator
// enumeration verified incomplete). Never ignored. CLI exit code 3.
struct InternalInconsistency : std::logic_error {
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

} // namespace toridiv
