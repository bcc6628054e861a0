#pragma once

#include <stdexcept>
#include <string>

namespace idealforge {

/// Inputs whose levels (ambient dimensions) do not fit together.
class LevelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point or tuple of the wrong length.
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A map composition or set shape outside the supported constructor class.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured cap (conjunct count, region count, 64-bit code range) was hit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace idealforge
