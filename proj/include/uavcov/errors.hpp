#pragma once

#include <stdexcept>
#include <string>

namespace uavcov {

// File / filesystem problems. CLI maps these to exit code 3.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed configuration or serialized data.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A plan or cycle that cannot meet the rotation feasibility condition.
struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

// A scenario no planner can serve (even single-subarea cycles fail).
struct UnservableError : std::runtime_error {
  explicit UnservableError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace uavcov
