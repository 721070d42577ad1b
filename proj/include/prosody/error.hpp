#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace prosody {

enum class ErrorKind {
  UnbalancedBrackets,
  UnknownCategory,
  MalformedLeaf,
  EmptyTree,
  UnknownMoraToken,
  HeadResolutionFailure,
  NoClause,
  StrayToken,
  EmptyTargets,
  InvalidParams,
  NonPositiveFrequency,
  InsufficientMoras,
  MissingWord,
  UnknownFixture,
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

// Source position inside a text input; line and column are 1-based, 0 = unknown.
struct Location {
  std::size_t line = 0;
  std::size_t column = 0;
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message, Location where = {});

  ErrorKind kind() const noexcept { return kind_; }
  const Location& where() const noexcept { return where_; }

private:
  ErrorKind kind_;
  Location where_;
};

}  // namespace prosody
