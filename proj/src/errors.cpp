#include "drawkit/errors.hpp"

namespace drawkit {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "Syntax";
    case ErrorKind::UnknownReference: return "UnknownReference";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::DanglingCrossing: return "DanglingCrossing";
    case ErrorKind::BadRotation: return "BadRotation";
    case ErrorKind::NonAlternatingCrossing: return "NonAlternatingCrossing";
    case ErrorKind::NotSphere: return "NotSphere";
    case ErrorKind::DisconnectedPlanarization: return "DisconnectedPlanarization";
    case ErrorKind::SelfCrossingEdge: return "SelfCrossingEdge";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NTooSmall: return "NTooSmall";
    case ErrorKind::NOdd: return "NOdd";
    case ErrorKind::UnknownClass: return "UnknownClass";
    case ErrorKind::DegenerateContact: return "DegenerateContact";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::UnboundedCell: return "UnboundedCell";
  }
  return "Unknown";
}

static std::string decorate(ErrorKind kind, const std::string& message, int line, int column) {
  std::string out = error_kind_name(kind);
  if (line > 0) {
    out += " at line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
  }
  return out + ": " + message;
}

Error::Error(ErrorKind kind, const std::string& message, int line, int column)
    : std::runtime_error(decorate(kind, message, line, column)),
      kind_(kind),
      line_(line),
      column_(column) {}

}  // namespace drawkit
