#pragma once

#include <stdexcept>
#include <string>

namespace linefeas {

// argument outside an operation's domain
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// M outside [0, C(N,2)]
struct OutOfRangeError : std::out_of_range {
    explicit OutOfRangeError(const std::string& what) : std::out_of_range(what) {}
};

// degree sequence admits no simple graph
struct NonGraphicalError : std::invalid_argument {
    explicit NonGraphicalError(const std::string& what) : std::invalid_argument(what) {}
};

// (N, M) has no line-graph realization
struct NotFeasibleError : std::runtime_error {
    explicit NotFeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// no star-forest decomposition exists for the requested pair
struct UnrepresentableError : std::runtime_error {
    explicit UnrepresentableError(const std::string& what) : std::runtime_error(what) {}
};

// brute-force request above the configured size cap
struct LimitExceededError : std::runtime_error {
    explicit LimitExceededError(const std::string& what) : std::runtime_error(what) {}
};

// no graphical partition with the requested maximum part
struct NoSuchGraphError : std::runtime_error {
    explicit NoSuchGraphError(const std::string& what) : std::runtime_error(what) {}
};

// broken internal invariant; indicates a bug, not bad input
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace linefeas
