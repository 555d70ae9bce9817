#pragma once

#include <stdexcept>
#include <string>

namespace drawkit {

enum class ErrorKind {
  Syntax,
  UnknownReference,
  DuplicateId,
  LoopEdge,
  DanglingCrossing,
  BadRotation,
  NonAlternatingCrossing,
  NotSphere,
  DisconnectedPlanarization,
  SelfCrossingEdge,
  PreconditionFailed,
  NTooSmall,
  NOdd,
  UnknownClass,
  DegenerateContact,
  GenerationFailed,
  UnboundedCell,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, int line = 0, int column = 0);

  ErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ErrorKind kind_;
  int line_;
  int column_;
};

}  // namespace drawkit
