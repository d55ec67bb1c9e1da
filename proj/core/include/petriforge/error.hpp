#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace petriforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A place, transition or marking does not belong to the net it was used with.
/// Signals a caller bug rather than a property of the modelled system.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// fire() was called on a transition that the marking does not enable.
class NotEnabledError : public Error {
 public:
  using Error::Error;
};

/// A set of transitions handed to a concurrency query names an unknown id.
class UnknownTransitionError : public Error {
 public:
  using Error::Error;
};

/// Token arithmetic left the representable range.
class TokenOverflowError : public Error {
 public:
  using Error::Error;
};

/// The net builder rejected a malformed structure.
class NetStructureError : public Error {
 public:
  using Error::Error;
};

/// Explicit exploration stopped before the state space was closed.
class LimitExceededError : public Error {
 public:
  LimitExceededError(const std::string& what, std::size_t nodes, std::size_t edges)
      : Error(what), nodes_(nodes), edges_(edges) {}

  std::size_t nodes() const noexcept { return nodes_; }
  std::size_t edges() const noexcept { return edges_; }

 private:
  std::size_t nodes_;
  std::size_t edges_;
};

/// Invalid production-model parameters.
class ParamError : public Error {
 public:
  using Error::Error;
};

/// A subprocess contract refers to a place the model does not have.
class UnknownPlaceError : public Error {
 public:
  using Error::Error;
};

}  // namespace petriforge
