#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kplex {

/// Dense internal vertex identifier, 0..n-1.
using VertexId = std::uint32_t;
/// Vertex label as it appears in the input file.
using ExternalId = std::uint64_t;
/// Index into a concatenated adjacency array.
using EdgeIndex = std::uint64_t;
/// Vertex identifier local to one seed graph.
using LocalId = std::uint32_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);
inline constexpr LocalId kNoLocal = static_cast<LocalId>(-1);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when run parameters violate their constraints (e.g. l < 2k-1).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace kplex
