#pragma once

#include <stdexcept>
#include <string>

namespace soh {

// Bad argument to a library call (kernel sizes, fractions, dimension
// mismatches, ...). Subtype of std::invalid_argument so callers that only
// know the standard hierarchy still catch it.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A file exists but cannot be decoded or parsed.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// A dataset directory does not follow the expected on-disk layout.
class LayoutError : public std::runtime_error {
 public:
  explicit LayoutError(const std::string& msg) : std::runtime_error(msg) {}
};

// Training cannot proceed (empty data, single-class data, ...).
class TrainingError : public std::runtime_error {
 public:
  explicit TrainingError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace soh
