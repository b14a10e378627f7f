#pragma once

#include <stdexcept>
#include <string>

namespace ugdual {

/// Input violates a documented precondition (kind mismatch, bad adjacency,
/// dimension mismatch, malformed value).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size guard (dimension cap, depth cap, word-length limit)
/// would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input; names the offending field.
class SchemaError : public ValidationError {
 public:
  SchemaError(const std::string& field, const std::string& what)
      : ValidationError("schema error at '" + field + "': " + what), field_(field) {}
  [[nodiscard]] const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace ugdual
