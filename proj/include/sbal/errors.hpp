#pragma once

#include <stdexcept>
#include <string>

namespace sbal {

// Every failure raised by the library derives from Error so callers can
// catch the whole family at once. The CLI maps the subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input relation contains a directed cycle (including u == v).
class CycleError : public Error {
 public:
  using Error::Error;
};

// A label array that is not a bijection onto 1..n or breaks the order.
class InvalidExtension : public Error {
 public:
  using Error::Error;
};

// A configured cap (down-sets, extensions, graph vertices, search steps) was hit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class MalformedPartition : public Error {
 public:
  using Error::Error;
};

class NotATableau : public Error {
 public:
  using Error::Error;
};

class BadGoodSet : public Error {
 public:
  using Error::Error;
};

class HeightExceeded : public Error {
 public:
  using Error::Error;
};

// Two independent computations disagreed, or a checked bound was violated.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// Malformed text input (poset files, relation files, family names).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sbal
