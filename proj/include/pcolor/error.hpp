#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcolor {

/// Failure categories surfaced by the library. The C API maps each kind to a
/// stable status code and the CLI prints the kind name in its error object.
enum class ErrorKind {
  InvalidArgument,
  Io,
  MalformedLine,
  VertexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  MissingColor,
  ColorOutOfRange,
  EdgeNotInGraph,
  GraphDisconnected,
  BudgetExceeded,
  ColorLimitReached,
  SmallAdjacent,
  SharedNeighborConflict,
  NoParityEdge,
  OddCycle,
  InsufficientNeighbors,
  NoLeafLink,
  SubgraphDisconnected,
  NotSpanning,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pcolor
