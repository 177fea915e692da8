#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tiergraph {

using NodeId = std::uint64_t;
using EdgeIdx = std::uint64_t;

// Thrown when an input file cannot be opened, read or written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a file parses but its contents violate the expected format
// (bad magic, truncation, malformed lines).
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when arguments violate an operation's preconditions.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace tiergraph
