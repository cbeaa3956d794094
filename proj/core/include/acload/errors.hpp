#pragma once

#include <stdexcept>
#include <string>

namespace acload {

/// Malformed input: bad parameters, mismatched series lengths, parse failures.
/// The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// No schedule satisfies the constraints (comfort zone, load bounds).
/// The CLI maps this to exit code 2.
class InfeasibleError : public std::runtime_error {
public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace acload
