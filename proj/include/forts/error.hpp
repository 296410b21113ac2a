#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace forts {

enum class ErrorKind {
  SelfLoop,
  VertexOutOfRange,
  CapacityExceeded,
  NotALeaf,
  NotATree,
  NotAForest,
  TooLargeForOracle,
  InvalidParameters,
  MalformedGraph6,
  ParseError,
  MissingSurveyData,
  OracleMismatch,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace forts
