#pragma once

#include <stdexcept>
#include <string>

namespace regspec {

// Raised when a requested exact computation exceeds the configured size
// guards.  Callers that catch it can retry with a Monte Carlo mode or a
// smaller instance; the CLI maps it to a distinct exit code so scripted
// callers can tell a refusal from a crash.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a switching is applied to a graph it does not act on
// (missing cycle, missing target edges, or an adjacency constraint
// violated).
class InvalidMoveError : public std::invalid_argument {
public:
    explicit InvalidMoveError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised by the rejection sampler after too many consecutive failed
// pairings, which indicates parameters far outside its useful regime.
class RejectionStallError : public std::runtime_error {
public:
    explicit RejectionStallError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace regspec
