#pragma once

#include <stdexcept>
#include <string>

namespace twodom {

// Violated API contract: bad vertex ids, graph shape a rule does not accept, ...
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input text could not be parsed; line numbers are 1-based.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& msg)
        : std::runtime_error("parse error at line " + std::to_string(line_) + ": " + msg),
          line(line_) {}
};

// Instance too large for the requested exact backend.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Search exceeded its node budget; retry with a larger budget or skip the instance.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph lacks the structure an operation requires (e.g. not a cactus).
struct structure_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejection sampling hit its attempt cap without producing a valid instance.
struct generation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace twodom
