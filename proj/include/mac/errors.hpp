#pragma once

#include <stdexcept>
#include <string>

namespace mac {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad JSON, vertex outside 1..n, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A vertex of the ambient index set is not a face of the complex.
class GhostVertexError : public Error {
 public:
  explicit GhostVertexError(int vertex)
      : Error("vertex " + std::to_string(vertex) +
              " is not a face of the complex (remove ghost vertices first)"),
        vertex_(vertex) {}

  [[nodiscard]] int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

/// A configured size limit would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The operation's precondition excludes this input (wrong branch of the dichotomy).
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

}  // namespace mac
