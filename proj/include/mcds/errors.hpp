#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcds {

/// A vertex index or set is not compatible with the graph it is used against.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Invalid graph construction input (self-loop, bad endpoint, bad parameters).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A connected-dominating-set query was made on a disconnected graph.
class DisconnectedGraphError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A brute-force size guard was exceeded.
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed textual input. `position` is a byte offset for graph6 and a
/// 1-based line number for edge lists.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mcds
