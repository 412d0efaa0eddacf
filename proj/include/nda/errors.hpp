#pragma once

#include <stdexcept>
#include <string>

namespace nda {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonFiniteInput : public Error {
 public:
  using Error::Error;
};

/// A particle sits on a Coulomb singularity of the potential.
class SingularConfiguration : public Error {
 public:
  using Error::Error;
};

/// Local energy requested at a point numerically on the node.
class NodeProximity : public Error {
 public:
  using Error::Error;
};

class UnknownState : public Error {
 public:
  using Error::Error;
};

class NoKnownNode : public Error {
 public:
  using Error::Error;
};

class NotReducible : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace nda
