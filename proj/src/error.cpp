#include "prosody/error.hpp"

namespace prosody {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnbalancedBrackets: return "UnbalancedBrackets";
    case ErrorKind::UnknownCategory: return "UnknownCategory";
    case ErrorKind::MalformedLeaf: return "MalformedLeaf";
    case ErrorKind::EmptyTree: return "EmptyTree";
    case ErrorKind::UnknownMoraToken: return "UnknownMoraToken";
    case ErrorKind::HeadResolutionFailure: return "HeadResolutionFailure";
    case ErrorKind::NoClause: return "NoClause";
    case ErrorKind::StrayToken: return "StrayToken";
    case ErrorKind::EmptyTargets: return "EmptyTargets";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NonPositiveFrequency: return "NonPositiveFrequency";
    case ErrorKind::InsufficientMoras: return "InsufficientMoras";
    case ErrorKind::MissingWord: return "MissingWord";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, Location where)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      where_(where) {}

}  // namespace prosody
