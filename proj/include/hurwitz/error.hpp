#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

// Base of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(int a, int b)
      : Error("degree mismatch: " + std::to_string(a) + " vs " +
              std::to_string(b)) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A caller-supplied precondition does not hold (even class, f_C < 2, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured state/size/depth limit was reached.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hurwitz
