#pragma once

#include <stdexcept>
#include <string>

namespace exnet {

/// Malformed input text (edge lists, JSON documents, named graphon forms).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameter vectors that imply a negative probability or violate a model
/// constraint. `configuration` is the offending dyad mask when one exists.
class InvalidParameters : public std::runtime_error {
 public:
  explicit InvalidParameters(const std::string& what, long long configuration = -1)
      : std::runtime_error(what), configuration_(configuration) {}
  long long configuration() const { return configuration_; }

 private:
  long long configuration_;
};

/// Requests beyond the exhaustive-enumeration limits of the library.
class SizeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace exnet
