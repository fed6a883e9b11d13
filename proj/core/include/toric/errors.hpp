#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Three failure families, matching the CLI exit codes 1, 2 and 3.
enum class ErrorKind { Math, Input, Resource };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

class MathError : public Error {
 public:
  MathError(std::string code, const std::string& what)
      : Error(ErrorKind::Math, std::move(code), what) {}
};

class InputError : public Error {
 public:
  InputError(std::string code, const std::string& what)
      : Error(ErrorKind::Input, std::move(code), what) {}
};

class ResourceLimit : public Error {
 public:
  explicit ResourceLimit(const std::string& what)
      : Error(ErrorKind::Resource, "ResourceLimit", what) {}
};

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Math: return 1;
    case ErrorKind::Input: return 2;
    case ErrorKind::Resource: return 3;
  }
  return 1;
}

}  // namespace toric
