#pragma once

#include <stdexcept>
#include <string>

namespace glcaps {

// Violated mathematical precondition. The CLI maps these to exit code 2.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class NotDominant : public DomainError {
 public:
  explicit NotDominant(const std::string& what) : DomainError("NotDominant", what) {}
};

class InvalidParams : public DomainError {
 public:
  explicit InvalidParams(const std::string& what) : DomainError("InvalidParams", what) {}
};

class RankTooSmall : public DomainError {
 public:
  explicit RankTooSmall(const std::string& what) : DomainError("RankTooSmall", what) {}
};

class IncompatibleDiagrams : public DomainError {
 public:
  explicit IncompatibleDiagrams(const std::string& what)
      : DomainError("IncompatibleDiagrams", what) {}
};

class ShapeMismatch : public DomainError {
 public:
  explicit ShapeMismatch(const std::string& what) : DomainError("ShapeMismatch", what) {}
};

class NotInLambdaRS : public DomainError {
 public:
  explicit NotInLambdaRS(const std::string& what) : DomainError("NotInLambdaRS", what) {}
};

class NotApplicable : public DomainError {
 public:
  explicit NotApplicable(const std::string& what) : DomainError("NotApplicable", what) {}
};

// Malformed textual input (partition, bipartition, diagram). Exit code 1.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace glcaps
