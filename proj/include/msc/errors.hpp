#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace msc {

/// Thrown when an argument violates an operation's precondition
/// (vertex out of range, overlapping sets where disjoint ones are required, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an input exceeds a documented work cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 / edge-list input. `position` is a byte offset for
/// graph6 and a 1-based line number for edge lists.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace msc
